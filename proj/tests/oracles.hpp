// Independent brute-force oracles used by the test suites. Everything here
// follows the defining formulas directly and stays off the library's fast
// paths.
#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "traceforms/bilinear.hpp"
#include "traceforms/fp_core.hpp"
#include "traceforms/subset.hpp"

namespace oracle {

using tf::cplx;
using tf::cvec;

inline cplx unit(double frac) {
    const double ang = 2.0 * std::numbers::pi * frac;
    return cplx(std::cos(ang), std::sin(ang));
}

// Quadratic-time DFT straight from the definition.
inline cvec dft_naive(const cvec& v) {
    const std::size_t L = v.size();
    cvec out(L, cplx(0.0, 0.0));
    for (std::size_t j = 0; j < L; ++j)
        for (std::size_t t = 0; t < L; ++t)
            out[j] += v[t] * unit(static_cast<double>(j % L * (t % L) % L) /
                                  static_cast<double>(L));
    return out;
}

// tau(chi_j) by direct summation.
inline cplx gauss_sum_naive(const tf::FieldContext& ctx, std::int64_t j) {
    cplx s(0.0, 0.0);
    for (std::int64_t x = 1; x < ctx.p(); ++x)
        s += tf::mult_char(ctx, j, x) * tf::additive_char(ctx, x);
    return s;
}

// Naive point count of y^2 = x^3 + ax + b over F_p, including infinity.
inline std::int64_t curve_points_naive(const tf::FieldContext& ctx, std::int64_t a,
                                       std::int64_t b) {
    const std::int64_t p = ctx.p();
    std::int64_t count = 1;  // point at infinity
    for (std::int64_t x = 0; x < p; ++x) {
        const std::int64_t rhs = (ctx.mul(ctx.mul(x, x), x) + ctx.mul(a, x) + b) % p;
        const int chi = ctx.legendre(rhs);
        count += 1 + chi;  // 2 points for QR, 1 for rhs = 0, 0 for non-QR
    }
    return count;
}

// Quadruple count for E(A, B).
inline std::uint64_t mult_energy_naive(const tf::SubsetFp& A, const tf::SubsetFp& B) {
    const std::int64_t p = A.p;
    std::uint64_t count = 0;
    for (std::int64_t a1 : A.elems)
        for (std::int64_t a2 : A.elems)
            for (std::int64_t b1 : B.elems)
                for (std::int64_t b2 : B.elems)
                    if (a1 * b1 % p == a2 * b2 % p) ++count;
    return count;
}

// Eight-tuple count for D(A).
inline unsigned __int128 quad_D_naive(const tf::SubsetFp& A) {
    const std::int64_t p = A.p;
    // #{4-tuples with (a1-a2)(a3-a4) = u}, then sum of squares.
    std::vector<std::uint64_t> s(static_cast<std::size_t>(p), 0);
    for (std::int64_t a1 : A.elems)
        for (std::int64_t a2 : A.elems)
            for (std::int64_t a3 : A.elems)
                for (std::int64_t a4 : A.elems) {
                    std::int64_t u = (a1 - a2) % p * ((a3 - a4) % p) % p;
                    if (u < 0) u += p;
                    ++s[static_cast<std::size_t>(u)];
                }
    unsigned __int128 d = 0;
    for (std::uint64_t v : s) d += static_cast<unsigned __int128>(v) * v;
    return d;
}

// The literal Kowalski-Michel-Sawin triple sum.
inline cplx kms_pi_naive(const tf::FieldContext& ctx, const tf::TraceTable& K,
                         const tf::KMSTuple& b) {
    const std::int64_t p = ctx.p();
    cplx total(0.0, 0.0);
    for (std::int64_t x1 = 0; x1 < p; ++x1)
        for (std::int64_t x2 = 0; x2 < p; ++x2)
            for (std::int64_t y = 0; y < p; ++y) {
                cplx prod(1.0, 0.0);
                for (int j = 0; j < b.r; ++j) {
                    const std::int64_t bj = b.b[static_cast<std::size_t>(j)];
                    const std::int64_t bjr = b.b[static_cast<std::size_t>(j + b.r)];
                    prod *= K.values[static_cast<std::size_t>(ctx.mul(x1, (y + bj) % p))] *
                            std::conj(K.values[static_cast<std::size_t>(
                                ctx.mul(x2, (y + bj) % p))]) *
                            std::conj(K.values[static_cast<std::size_t>(
                                ctx.mul(x1, (y + bjr) % p))]) *
                            K.values[static_cast<std::size_t>(ctx.mul(x2, (y + bjr) % p))];
                }
                total += prod;
            }
    return total;
}

// Bilinear form with the loop order swapped (inner sum over m first).
inline cplx bilinear_reordered(const tf::CoeffVec& alpha, const tf::CoeffVec& beta,
                               const tf::TraceTable& K) {
    const std::int64_t p = K.p;
    cplx total(0.0, 0.0);
    for (std::size_t j = 0; j < beta.support.size(); ++j) {
        cplx inner(0.0, 0.0);
        for (std::size_t i = 0; i < alpha.support.size(); ++i) {
            const std::int64_t mn =
                alpha.support.elems[i] * beta.support.elems[j] % p;
            inner += alpha.weights[i] * K.values[static_cast<std::size_t>(mn)];
        }
        total += beta.weights[j] * inner;
    }
    return total;
}

}  // namespace oracle
