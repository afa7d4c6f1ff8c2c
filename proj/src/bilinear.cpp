#include "traceforms/bilinear.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

namespace tf {

double CoeffVec::norm(double q) const {
    double s = 0.0;
    for (const auto& w : weights) s += std::pow(std::abs(w), q);
    return std::pow(s, 1.0 / q);
}

double CoeffVec::norm_inf() const {
    double m = 0.0;
    for (const auto& w : weights) m = std::max(m, std::abs(w));
    return m;
}

cplx bilinear_form(const CoeffVec& alpha, const CoeffVec& beta, const TraceTable& K) {
    require_same_field(alpha.support, beta.support);
    if (alpha.support.p != K.p) fail(errc::field_mismatch, "coefficients and trace table disagree on p");
    const std::int64_t p = K.p;
    cplx total(0.0, 0.0);
    for (std::size_t i = 0; i < alpha.support.size(); ++i) {
        const std::int64_t m = alpha.support.elems[i];
        cplx inner(0.0, 0.0);
        for (std::size_t j = 0; j < beta.support.size(); ++j) {
            const std::int64_t n = beta.support.elems[j];
            const std::int64_t mn = static_cast<std::int64_t>(
                static_cast<unsigned __int128>(m) * static_cast<unsigned __int128>(n) % p);
            inner += beta.weights[j] * K.values[static_cast<std::size_t>(mn)];
        }
        total += alpha.weights[i] * inner;
    }
    return total;
}

double trivial_bound(const CoeffVec& alpha, const CoeffVec& beta, const TraceTable& K) {
    return K.norm_inf() * alpha.norm2() * beta.norm2() *
           std::sqrt(static_cast<double>(alpha.support.size()) *
                     static_cast<double>(beta.support.size()));
}

AmplificationBound amplification_bound(int r, const CoeffVec& alpha, const CoeffVec& beta, std::int64_t p) {
    const double rr = static_cast<double>(r);
    const double dp = static_cast<double>(p);
    const double nn = static_cast<double>(beta.support.size());
    const double alpha_norm = alpha.norm(2.0 * rr / (2.0 * rr - 1.0));
    const double t1 = alpha_norm * std::pow(dp, 1.0 / (2.0 * rr)) *
                      std::pow(nn, 0.5 - 1.0 / (2.0 * rr)) * beta.norm(2.0 * rr);
    const double t2 = alpha_norm * std::pow(dp, 1.0 / (4.0 * rr)) * beta.norm1();
    return AmplificationBound{t1, t2, t1 + t2};
}

double doubling_bound(int r, double lambda, std::int64_t size_m, std::int64_t size_n,
                double alpha_inf, double beta2, std::int64_t p) {
    const double rr = static_cast<double>(r);
    const double dp = static_cast<double>(p);
    const double mm = static_cast<double>(size_m);
    const double nn = static_cast<double>(size_n);
    const double g1 = std::pow(nn, 1.5) / dp + 1.0;
    const double g2 = std::pow(nn, 1.5) * std::pow(dp, -1.0 - 9.0 * lambda / (4.0 * rr)) + 1.0;
    const double inner =
        std::pow(dp, 3.0 + 9.0 * lambda / (4.0 * rr)) * g1 * g2 /
        (std::pow(mm, 4.0) * std::pow(nn, 3.0));
    const double brace = 1.0 / std::sqrt(mm) +
                         std::pow(inner, 1.0 / (8.0 * rr)) *
                             std::pow(std::log(dp), 1.0 / (2.0 * rr));
    return alpha_inf * beta2 * mm * std::sqrt(nn) * brace;
}

MomentB moment_B(int r, const CoeffVec& beta, const TraceTable& K, const SubsetFp& M,
                 const FieldContext& ctx) {
    if (beta.support.p != K.p || M.p != K.p)
        fail(errc::field_mismatch, "moment inputs disagree on p");
    const std::int64_t p = K.p;
    double restricted = 0.0, complete = 0.0;
    for (std::int64_t m = 0; m < p; ++m) {
        cplx inner(0.0, 0.0);
        for (std::size_t j = 0; j < beta.support.size(); ++j) {
            const std::int64_t mn = ctx.mul(m, beta.support.elems[j]);
            inner += beta.weights[j] * K.values[static_cast<std::size_t>(mn)];
        }
        const double term = std::pow(std::norm(inner), static_cast<double>(r));
        complete += term;
        if (M.contains(m)) restricted += term;
    }
    return MomentB{restricted, complete};
}

PGL2Element PGL2Element::make(const FieldContext& ctx, std::int64_t a, std::int64_t b,
                              std::int64_t c, std::int64_t d) {
    const std::int64_t p = ctx.p();
    auto red = [&](std::int64_t v) {
        v %= p;
        return v < 0 ? v + p : v;
    };
    a = red(a);
    b = red(b);
    c = red(c);
    d = red(d);
    const std::int64_t det = red(ctx.mul(a, d) - ctx.mul(b, c));
    if (det == 0) fail(errc::out_of_range, "PGL2 element must have nonzero determinant");
    std::int64_t lead = a ? a : (b ? b : (c ? c : d));
    const std::int64_t s = ctx.inv(lead);
    return PGL2Element{ctx.mul(a, s), ctx.mul(b, s), ctx.mul(c, s), ctx.mul(d, s)};
}

std::optional<std::int64_t> pgl2_act(const FieldContext& ctx, const PGL2Element& g,
                                     std::int64_t x) {
    const std::int64_t p = ctx.p();
    x %= p;
    if (x < 0) x += p;
    const std::int64_t den = (ctx.mul(g.c, x) + g.d) % p;
    if (den == 0) return std::nullopt;
    const std::int64_t num = (ctx.mul(g.a, x) + g.b) % p;
    return ctx.mul(num, ctx.inv(den));
}

TupleClass classify_tuple(const SignedTuple& t, std::optional<int> r) {
    struct Counts {
        int total = 0;
        int plain = 0;
        int conjugated = 0;
    };
    std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t>, Counts> mult;
    for (std::size_t i = 0; i < t.gammas.size(); ++i) {
        const auto& g = t.gammas[i];
        auto& c = mult[{g.a, g.b, g.c, g.d}];
        ++c.total;
        if (i < t.conj.size() && t.conj[i])
            ++c.conjugated;
        else
            ++c.plain;
    }
    for (const auto& [key, c] : mult)
        if (c.total % 2 == 1) return TupleClass::normal;
    if (r && *r >= 3) {
        for (const auto& [key, c] : mult)
            if (c.total >= 1 && (c.plain - c.conjugated) % *r != 0) return TupleClass::r_normal;
    }
    return TupleClass::neither;
}

cplx sum_of_products(const FieldContext& ctx, const TraceTable& K, const SignedTuple& t) {
    const std::int64_t p = ctx.p();
    cplx total(0.0, 0.0);
    for (std::int64_t x = 0; x < p; ++x) {
        cplx prod(1.0, 0.0);
        bool pole = false;
        for (std::size_t i = 0; i < t.gammas.size(); ++i) {
            const auto y = pgl2_act(ctx, t.gammas[i], x);
            if (!y) {
                pole = true;
                break;
            }
            cplx v = K.values[static_cast<std::size_t>(*y)];
            if (i < t.conj.size() && t.conj[i]) v = std::conj(v);
            prod *= v;
        }
        if (!pole) total += prod;
    }
    return total;
}

double correlation_A(const FieldContext& ctx, const AngleTable& angles,
                     std::span<const int> kvec, std::span<const PGL2Element> gammas,
                     std::int64_t h) {
    if (kvec.size() != gammas.size())
        fail(errc::out_of_range, "k-tuple and gamma-tuple lengths differ");
    const std::int64_t p = ctx.p();
    cplx total(0.0, 0.0);
    for (std::int64_t x = 0; x < p; ++x) {
        double prod = 1.0;
        bool skip = false;
        for (std::size_t j = 0; j < gammas.size(); ++j) {
            const auto y = pgl2_act(ctx, gammas[j], x);
            if (!y || !angles.domain[static_cast<std::size_t>(*y)]) {
                skip = true;
                break;
            }
            prod *= sym_eval(kvec[j], angles.angles[static_cast<std::size_t>(*y)]);
        }
        if (!skip) total += prod * additive_char(ctx, ctx.mul(h, x));
    }
    return total.real();
}

cplx kms_pi(const FieldContext& ctx, const TraceTable& K, const KMSTuple& b) {
    const std::int64_t p = ctx.p();
    if (p > 2000) fail(errc::cost_cap_exceeded, "kms_pi requires p <= 2000");
    if (b.b.size() != static_cast<std::size_t>(2 * b.r))
        fail(errc::out_of_range, "b must have exactly 2r entries");
    cplx total(0.0, 0.0);
    for (std::int64_t y = 0; y < p; ++y) {
        cplx inner(0.0, 0.0);
        for (std::int64_t x = 0; x < p; ++x) {
            cplx a(1.0, 0.0);
            for (int j = 0; j < b.r; ++j) {
                const std::int64_t u = ctx.mul(x, (y + b.b[static_cast<std::size_t>(j)]) % p);
                const std::int64_t v =
                    ctx.mul(x, (y + b.b[static_cast<std::size_t>(j + b.r)]) % p);
                a *= K.values[static_cast<std::size_t>(u)] *
                     std::conj(K.values[static_cast<std::size_t>(v)]);
            }
            inner += a;
        }
        total += std::norm(inner);
    }
    return total;
}

}  // namespace tf
