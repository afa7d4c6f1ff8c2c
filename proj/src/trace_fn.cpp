#include "traceforms/trace_fn.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace tf {

namespace {

const char* kind_name(TraceKind k) {
    switch (k) {
        case TraceKind::hyper_kloosterman: return "hyper_kloosterman";
        case TraceKind::sym_power_kl: return "sym_power_kl";
        case TraceKind::elliptic_sym_power: return "elliptic";
    }
    return "?";
}

// Polynomial helpers over Z (int64 coefficients; desk-scale families only).
using poly = std::vector<std::int64_t>;

poly poly_mul(const poly& u, const poly& v) {
    if (u.empty() || v.empty()) return {};
    poly w(u.size() + v.size() - 1, 0);
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) w[i + j] += u[i] * v[j];
    return w;
}

void poly_trim(poly& u) {
    while (!u.empty() && u.back() == 0) u.pop_back();
}

std::int64_t poly_eval_mod(const poly& u, std::int64_t t, const FieldContext& ctx) {
    std::int64_t r = 0;
    for (std::size_t i = u.size(); i-- > 0;) {
        std::int64_t c = u[i] % ctx.p();
        if (c < 0) c += ctx.p();
        r = (ctx.mul(r, t) + c) % ctx.p();
    }
    return r;
}

}  // namespace

double TraceTable::norm_inf() const {
    double m = 0.0;
    for (const auto& z : values) m = std::max(m, std::abs(z));
    return m;
}

cplx kl_direct(const FieldContext& ctx, std::int64_t a, int k) {
    const std::int64_t p = ctx.p();
    if (a % p == 0) fail(errc::zero_argument, "Kl_k is evaluated on F_p^x only");
    double cost = 1.0;
    for (int i = 0; i < k - 1; ++i) cost *= static_cast<double>(p);
    if (cost > 1e8) fail(errc::oracle_too_large, "p^{k-1} exceeds the oracle cap");

    a %= p;
    if (a < 0) a += p;
    if (k < 2) fail(errc::out_of_range, "Kl_k needs k >= 2");

    // Enumerate (x_1, ..., x_{k-1}) over (F_p^x)^{k-1}; x_k is forced by the
    // product constraint.
    std::vector<std::int64_t> x(static_cast<std::size_t>(k - 1), 1);
    cplx total(0.0, 0.0);
    while (true) {
        std::int64_t prod = 1, sum = 0;
        for (std::int64_t xi : x) {
            prod = ctx.mul(prod, xi);
            sum = (sum + xi) % p;
        }
        const std::int64_t xk = ctx.mul(a, ctx.inv(prod));
        total += additive_char(ctx, sum + xk);

        std::size_t i = 0;
        while (i < x.size() && x[i] == p - 1) x[i++] = 1;
        if (i == x.size()) break;
        ++x[i];
    }
    return total * std::pow(static_cast<double>(p), (1.0 - k) / 2.0);
}

TraceTable kl_bulk(const FieldContext& ctx, int k, std::span<const int> twist) {
    const std::int64_t p = ctx.p();
    const std::int64_t L = p - 1;
    const cvec tau = gauss_sums(ctx);

    // Mellin transform of the unnormalized sum is the product of (possibly
    // shifted) Gauss sums: prod_i tau(chi * chi_i).
    cvec fhat(static_cast<std::size_t>(L));
    for (std::int64_t j = 0; j < L; ++j) {
        cplx v(1.0, 0.0);
        for (int i = 0; i < k; ++i) {
            std::int64_t shift = i < static_cast<int>(twist.size()) ? twist[i] : 0;
            std::int64_t idx = (j + shift) % L;
            if (idx < 0) idx += L;
            v *= tau[static_cast<std::size_t>(idx)];
        }
        fhat[static_cast<std::size_t>(j)] = v;
    }

    cvec values = mellin_inverse(ctx, fhat);
    const double norm = std::pow(static_cast<double>(p), (1.0 - k) / 2.0);
    for (auto& z : values) z *= norm;
    values[0] = cplx(0.0, 0.0);

    TraceTable table;
    table.kind = TraceKind::hyper_kloosterman;
    table.p = p;
    table.k = k;
    table.twist.assign(twist.begin(), twist.end());
    table.values = std::move(values);
    table.meta = "Kl_k normalized by p^{(1-k)/2}; K(0)=0";
    return table;
}

AngleTable kl_angles(const FieldContext& ctx, const TraceTable& kl2) {
    const std::int64_t p = ctx.p();
    AngleTable out;
    out.p = p;
    out.angles.assign(static_cast<std::size_t>(p), 0.0);
    out.domain.assign(static_cast<std::size_t>(p), 0);
    for (std::int64_t a = 1; a < p; ++a) {
        const cplx v = kl2.values[static_cast<std::size_t>(a)];
        if (std::abs(v.imag()) > 1e-6)
            fail(errc::non_real_value, "Kl_2 value has non-negligible imaginary part");
        double x = v.real() / 2.0;
        if (std::abs(x) > 1.0 + 1e-6)
            fail(errc::non_real_value, "Kl_2 value exceeds the Deligne range");
        x = std::clamp(x, -1.0, 1.0);
        out.angles[static_cast<std::size_t>(a)] = std::acos(x);
        out.domain[static_cast<std::size_t>(a)] = 1;
    }
    return out;
}

double sym_eval(int k, double theta) {
    // Chebyshev-U recurrence at cos(theta); stable on [-1,1] and exact at the
    // removable singularities theta = 0, pi.
    const double x = std::cos(theta);
    double um1 = 1.0;          // U_0
    if (k == 0) return um1;
    double u = 2.0 * x;        // U_1
    for (int i = 2; i <= k; ++i) {
        const double next = 2.0 * x * u - um1;
        um1 = u;
        u = next;
    }
    return u;
}

TraceTable sym_power_table(const AngleTable& angles, int k) {
    TraceTable table;
    table.kind = TraceKind::sym_power_kl;
    table.p = angles.p;
    table.k = k;
    table.values.assign(angles.angles.size(), cplx(0.0, 0.0));
    for (std::size_t a = 0; a < angles.angles.size(); ++a)
        if (angles.domain[a]) table.values[a] = cplx(sym_eval(k, angles.angles[a]), 0.0);
    table.meta = "sym_k of Kloosterman angles";
    return table;
}

poly EllipticFamily::delta_poly() const {
    poly a3 = poly_mul(poly_mul(a_poly, a_poly), a_poly);
    poly b2 = poly_mul(b_poly, b_poly);
    poly d(std::max(a3.size(), b2.size()), 0);
    for (std::size_t i = 0; i < a3.size(); ++i) d[i] += -16 * 4 * a3[i];
    for (std::size_t i = 0; i < b2.size(); ++i) d[i] += -16 * 27 * b2[i];
    poly_trim(d);
    return d;
}

int EllipticFamily::r_delta() const {
    // Distinct complex roots = deg Delta - deg gcd(Delta, Delta'), computed
    // modulo a large prime (agrees with the rational gcd degree for all but
    // finitely many primes).
    poly d = delta_poly();
    if (d.size() <= 1) return 0;
    const std::int64_t q = 2147483647;
    auto modq = [&](std::int64_t v) {
        v %= q;
        return v < 0 ? v + q : v;
    };
    auto powq = [&](std::int64_t b, std::int64_t e) {
        std::int64_t r = 1;
        b = modq(b);
        while (e > 0) {
            if (e & 1) r = static_cast<std::int64_t>(static_cast<unsigned __int128>(r) * b % q);
            b = static_cast<std::int64_t>(static_cast<unsigned __int128>(b) * b % q);
            e >>= 1;
        }
        return r;
    };
    std::vector<std::int64_t> u(d.size()), v(d.size() - 1);
    for (std::size_t i = 0; i < d.size(); ++i) u[i] = modq(d[i]);
    for (std::size_t i = 1; i < d.size(); ++i)
        v[i - 1] = modq(static_cast<std::int64_t>(i) * d[i]);
    auto trim = [](std::vector<std::int64_t>& w) {
        while (!w.empty() && w.back() == 0) w.pop_back();
    };
    trim(u);
    trim(v);
    while (!v.empty()) {
        // u mod v over F_q
        const std::int64_t lead_inv = powq(v.back(), q - 2);
        while (u.size() >= v.size()) {
            const std::int64_t c =
                static_cast<std::int64_t>(static_cast<unsigned __int128>(u.back()) * lead_inv % q);
            const std::size_t off = u.size() - v.size();
            for (std::size_t i = 0; i < v.size(); ++i)
                u[off + i] = modq(u[off + i] - static_cast<std::int64_t>(
                                                   static_cast<unsigned __int128>(c) * v[i] % q));
            trim(u);
            if (u.empty()) break;
        }
        std::swap(u, v);
    }
    const int gcd_deg = u.empty() ? 0 : static_cast<int>(u.size()) - 1;
    return static_cast<int>(d.size()) - 1 - gcd_deg;
}

bool j_nonconstant(const EllipticFamily& fam) {
    poly d = fam.delta_poly();
    if (d.empty()) fail(errc::zero_discriminant_poly, "Delta(t) is identically zero");
    poly a3 = poly_mul(poly_mul(fam.a_poly, fam.a_poly), fam.a_poly);
    poly_trim(a3);
    // j constant <=> a^3 proportional to Delta over Q (including a^3 == 0).
    const std::size_t n = std::max(a3.size(), d.size());
    a3.resize(n, 0);
    poly dd = d;
    dd.resize(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const __int128 lhs = static_cast<__int128>(a3[i]) * dd[j];
            const __int128 rhs = static_cast<__int128>(a3[j]) * dd[i];
            if (lhs != rhs) return true;
        }
    return false;
}

EllipticResult elliptic_traces(const FieldContext& ctx, const EllipticFamily& fam,
                               const SubsetFp& T) {
    if (!j_nonconstant(fam))
        fail(errc::constant_j_invariant, "family has constant j-invariant");
    const std::int64_t p = ctx.p();
    if (T.p != p) fail(errc::field_mismatch, "parameter set lives in a different field");
    if (static_cast<double>(T.size()) * static_cast<double>(p) > 1e9)
        fail(errc::cost_cap_exceeded, "|T| * p exceeds the elliptic cost cap");

    std::vector<std::int8_t> chi2(static_cast<std::size_t>(p));
    for (std::int64_t x = 0; x < p; ++x)
        chi2[static_cast<std::size_t>(x)] = static_cast<std::int8_t>(ctx.legendre(x));

    const poly dpoly = fam.delta_poly();
    const double sqrtp = std::sqrt(static_cast<double>(p));

    EllipticResult res;
    res.traces.kind = TraceKind::elliptic_sym_power;
    res.traces.p = p;
    res.traces.k = 1;
    res.traces.values.assign(static_cast<std::size_t>(p), cplx(0.0, 0.0));
    res.traces.meta = "a_p(t)/sqrt(p) on Delta(t) != 0";
    res.angles.p = p;
    res.angles.angles.assign(static_cast<std::size_t>(p), 0.0);
    res.angles.domain.assign(static_cast<std::size_t>(p), 0);
    res.ap.assign(static_cast<std::size_t>(p), 0);
    res.mask.assign(static_cast<std::size_t>(p), 0);

    for (std::int64_t t : T.elems) {
        if (poly_eval_mod(dpoly, t, ctx) == 0) continue;
        const std::int64_t at = poly_eval_mod(fam.a_poly, t, ctx);
        const std::int64_t bt = poly_eval_mod(fam.b_poly, t, ctx);
        std::int64_t acc = 0;
        for (std::int64_t x = 0; x < p; ++x) {
            const std::int64_t rhs = (ctx.mul(ctx.mul(x, x), x) + ctx.mul(at, x) + bt) % p;
            acc += chi2[static_cast<std::size_t>(rhs)];
        }
        const std::int64_t ap = -acc;
        const auto idx = static_cast<std::size_t>(t);
        res.ap[idx] = ap;
        res.mask[idx] = 1;
        const double scaled = static_cast<double>(ap) / sqrtp;
        res.traces.values[idx] = cplx(scaled, 0.0);
        res.angles.angles[idx] = std::acos(std::clamp(scaled / 2.0, -1.0, 1.0));
        res.angles.domain[idx] = 1;
    }
    return res;
}

void write_trace_csv(std::ostream& os, const TraceTable& table, const AngleTable* angles) {
    os << "# kind=" << kind_name(table.kind) << " p=" << table.p << " k=" << table.k << "\n";
    os << (angles ? "a,re,im,angle\n" : "a,re,im\n");
    char buf[128];
    for (std::size_t a = 0; a < table.values.size(); ++a) {
        const auto& z = table.values[a];
        if (angles) {
            std::snprintf(buf, sizeof(buf), "%zu,%.12g,%.12g,%.12g\n", a, z.real(), z.imag(),
                          angles->domain[a] ? angles->angles[a] : 0.0);
        } else {
            std::snprintf(buf, sizeof(buf), "%zu,%.12g,%.12g\n", a, z.real(), z.imag());
        }
        os << buf;
    }
}

}  // namespace tf
