#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "traceforms/fp_core.hpp"
#include "traceforms/subset.hpp"
#include "traceforms/trace_fn.hpp"

namespace tf {

// Complex weights aligned with a support set.
struct CoeffVec {
    SubsetFp support;
    cvec weights;

    // l_q norm of the weight vector.
    double norm(double q) const;
    double norm_inf() const;
    double norm1() const { return norm(1.0); }
    double norm2() const { return norm(2.0); }

    static CoeffVec unit(SubsetFp s) {
        CoeffVec v;
        v.weights.assign(s.size(), cplx(1.0, 0.0));
        v.support = std::move(s);
        return v;
    }
};

// B(alpha, beta; K) = sum_{m in M} sum_{n in N} alpha_m beta_n K(mn mod p).
cplx bilinear_form(const CoeffVec& alpha, const CoeffVec& beta, const TraceTable& K);

// ||K||_inf ||alpha||_2 ||beta||_2 (|M||N|)^{1/2}
double trivial_bound(const CoeffVec& alpha, const CoeffVec& beta, const TraceTable& K);

struct AmplificationBound {
    double term1;
    double term2;
    double total;
};

// ||alpha||_{2r/(2r-1)} ( p^{1/2r} |N|^{1/2 - 1/2r} ||beta||_{2r}
//                         + p^{1/4r} ||beta||_1 ), implied constant 1.
AmplificationBound amplification_bound(int r, const CoeffVec& alpha, const CoeffVec& beta, std::int64_t p);

// The doubling-constant bound, implied constant 1:
// ||alpha||_inf ||beta||_2 |M| |N|^{1/2} { |M|^{-1/2}
//   + (p^{3 + 9l/4r} g1 g2 / (|M|^4 |N|^3))^{1/8r} (log p)^{1/2r} }
double doubling_bound(int r, double lambda, std::int64_t size_m, std::int64_t size_n,
                double alpha_inf, double beta2, std::int64_t p);

struct MomentB {
    double restricted;  // sum over m in M
    double complete;    // sum over all m in F_p
};

// B_r = sum_m |sum_{n in N} beta_n K(mn)|^{2r}.
MomentB moment_B(int r, const CoeffVec& beta, const TraceTable& K, const SubsetFp& M,
                 const FieldContext& ctx);

// An element of PGL_2(F_p), stored in the canonical scaling where the first
// nonzero entry of (a, b, c, d) is 1.
struct PGL2Element {
    std::int64_t a = 1, b = 0, c = 0, d = 1;

    bool operator==(const PGL2Element&) const = default;

    static PGL2Element make(const FieldContext& ctx, std::int64_t a, std::int64_t b,
                            std::int64_t c, std::int64_t d);
    static PGL2Element identity() { return {}; }
    static PGL2Element diagonal(const FieldContext& ctx, std::int64_t n) {
        return make(ctx, n, 0, 0, 1);
    }
};

// Fractional linear action (ax+b)/(cx+d); nullopt encodes infinity.
std::optional<std::int64_t> pgl2_act(const FieldContext& ctx, const PGL2Element& g,
                                     std::int64_t x);

// A tuple (gamma_i, sigma_i); conj[i] != 0 means the coordinate carries
// complex conjugation.
struct SignedTuple {
    std::vector<PGL2Element> gammas;
    std::vector<std::uint8_t> conj;
};

enum class TupleClass { normal, r_normal, neither };

// normal: some gamma occurs with odd multiplicity.
// r-normal (r >= 3): some gamma occurs, with identity-count != conjugate-count
// mod r.
TupleClass classify_tuple(const SignedTuple& t, std::optional<int> r = std::nullopt);

// S(K; gamma, sigma) = sum_x prod_i K(gamma_i . x)^{sigma_i}; x mapped to
// infinity by any coordinate is skipped.
cplx sum_of_products(const FieldContext& ctx, const TraceTable& K, const SignedTuple& t);

// A(k, gamma; h) = sum_x prod_j sym_{k_j}(theta(gamma_j . x)) e(hx/p),
// skipping x outside the angle domain or mapped to infinity.
double correlation_A(const FieldContext& ctx, const AngleTable& angles,
                     std::span<const int> kvec, std::span<const PGL2Element> gammas,
                     std::int64_t h);

struct KMSTuple {
    int r = 1;
    std::vector<std::int64_t> b;  // length 2r
};

// Pi(K, b) = sum_y |sum_x prod_j K(x(y+b_j)) conj(K(x(y+b_{j+r})))|^2,
// the factorized form of the Kowalski-Michel-Sawin triple sum. O(p^2 r);
// requires p <= 2000.
cplx kms_pi(const FieldContext& ctx, const TraceTable& K, const KMSTuple& b);

}  // namespace tf
