#include "traceforms/setcomb.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

namespace tf {

double uint128_to_double(uint128 v) {
    return static_cast<double>(static_cast<std::uint64_t>(v >> 64)) * 18446744073709551616.0 +
           static_cast<double>(static_cast<std::uint64_t>(v));
}

std::string uint128_to_string(uint128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

SubsetFp sumset(const SubsetFp& A, const SubsetFp& B) {
    require_same_field(A, B);
    const std::int64_t p = A.p;
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(p), 0);
    for (std::int64_t a : A.elems)
        for (std::int64_t b : B.elems) seen[static_cast<std::size_t>((a + b) % p)] = 1;
    std::vector<std::int64_t> out;
    for (std::int64_t x = 0; x < p; ++x)
        if (seen[static_cast<std::size_t>(x)]) out.push_back(x);
    return SubsetFp{p, std::move(out)};
}

double doubling(const SubsetFp& A) {
    if (A.empty()) fail(errc::empty_set, "doubling constant of the empty set");
    return static_cast<double>(sumset(A, A).size()) / static_cast<double>(A.size());
}

std::uint64_t mult_energy(const SubsetFp& A, const SubsetFp& B) {
    require_same_field(A, B);
    const std::int64_t p = A.p;
    std::vector<std::uint64_t> freq(static_cast<std::size_t>(p), 0);
    for (std::int64_t a : A.elems)
        for (std::int64_t b : B.elems) {
            const auto u = static_cast<std::size_t>(
                static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(b) % p);
            ++freq[u];
        }
    std::uint64_t e = 0;
    for (std::uint64_t r : freq) e += r * r;
    return e;
}

uint128 quad_D(const FieldContext& ctx, const SubsetFp& A) {
    const std::int64_t p = ctx.p();
    if (A.p != p) fail(errc::field_mismatch, "set lives in a different field");
    const std::uint64_t n = A.size();
    if (n == 0) return 0;

    // r(t) = #{(x, y) in A^2 : x - y = t}
    std::vector<double> r(static_cast<std::size_t>(p), 0.0);
    for (std::int64_t x : A.elems)
        for (std::int64_t y : A.elems) {
            std::int64_t t = x - y;
            if (t < 0) t += p;
            r[static_cast<std::size_t>(t)] += 1.0;
        }

    // t = 0 bookkeeping done exactly: s(0) = 2 r(0) T - r(0)^2 with T = |A|^2.
    const std::uint64_t r0 = n;
    const std::uint64_t T = n * n;
    const uint128 s0 = uint128(2) * r0 * T - uint128(r0) * r0;

    // s(u) for u != 0 is the multiplicative self-convolution of r on t != 0.
    cvec f(static_cast<std::size_t>(p), cplx(0.0, 0.0));
    for (std::int64_t t = 1; t < p; ++t)
        f[static_cast<std::size_t>(t)] = cplx(r[static_cast<std::size_t>(t)], 0.0);
    cvec fhat = mellin_forward(ctx, f);
    for (auto& z : fhat) z *= z;
    cvec s = mellin_inverse(ctx, fhat);

    uint128 d = s0 * s0;
    for (std::int64_t u = 1; u < p; ++u) {
        const double v = s[static_cast<std::size_t>(u)].real();
        const double rounded = std::round(v);
        if (std::abs(v - rounded) >= 0.4 || std::abs(s[static_cast<std::size_t>(u)].imag()) >= 0.4)
            fail(errc::rounding_drift_exceeded,
                 "convolution entry too far from an integer at u=" + std::to_string(u));
        const auto iv = static_cast<std::uint64_t>(rounded);
        d += uint128(iv) * iv;
    }
    return d;
}

double shkredov_ratio(const FieldContext& ctx, const SubsetFp& A) {
    const double dA = static_cast<double>(A.size());
    return uint128_to_double(quad_D(ctx, A)) * static_cast<double>(ctx.p()) / std::pow(dA, 8.0);
}

GapSet gap_enumerate(const GAProgression& P) {
    if (P.dim() < 1) fail(errc::out_of_range, "progression needs at least one generator");
    for (std::int64_t n : P.bounds)
        if (n < 1) fail(errc::out_of_range, "progression bounds must be >= 1");
    const std::int64_t vol = P.volume();
    if (vol > 10'000'000) fail(errc::volume_cap_exceeded, "progression volume exceeds 1e7");

    const std::int64_t p = P.p;
    std::vector<std::int64_t> x(P.omegas.size(), 0);
    std::vector<std::int64_t> vals;
    vals.reserve(static_cast<std::size_t>(vol));
    std::int64_t cur = P.a0 % p;
    if (cur < 0) cur += p;
    while (true) {
        vals.push_back(cur);
        std::size_t i = 0;
        while (i < x.size() && x[i] == P.bounds[i] - 1) {
            const auto step = static_cast<std::int64_t>(
                static_cast<unsigned __int128>(((P.omegas[i] % p) + p) % p) *
                static_cast<unsigned __int128>(x[i]) % p);
            cur = (cur - step % p + p) % p;
            x[i] = 0;
            ++i;
        }
        if (i == x.size()) break;
        ++x[i];
        cur = (cur + P.omegas[i]) % p;
        if (cur < 0) cur += p;
    }
    auto set = SubsetFp::from_elements(p, std::move(vals));
    const bool proper = static_cast<std::int64_t>(set.size()) == vol;
    return GapSet{std::move(set), proper};
}

bool gap_contains(const GAProgression& P, const SubsetFp& A) {
    const GapSet g = gap_enumerate(P);
    for (std::int64_t a : A.elems)
        if (!g.set.contains(a)) return false;
    return true;
}

double chang_energy_ratio(const GAProgression& P) {
    const GapSet g = gap_enumerate(P);
    const double sz = static_cast<double>(g.set.size());
    const double lg = std::log(sz);
    const double bound = std::pow(16.0, static_cast<double>(P.dim())) *
                         (std::pow(sz, 4.0) / static_cast<double>(P.p) +
                          std::pow(sz, 2.5) * lg * lg);
    return static_cast<double>(mult_energy(g.set, g.set)) / bound;
}

BurgessResult burgess_quantities(const FieldContext& ctx, const SubsetFp& M,
                                 const SubsetFp& N0, const SubsetFp& N2) {
    const std::int64_t p = ctx.p();
    if (M.p != p || N0.p != p || N2.p != p)
        fail(errc::field_mismatch, "burgess inputs disagree on p");
    const double cost = static_cast<double>(M.size()) * static_cast<double>(M.size()) *
                        static_cast<double>(N0.size()) * static_cast<double>(N2.size());
    if (cost > 2e8) fail(errc::cost_cap_exceeded, "|M|^2 |N0| |N2| exceeds the cost cap");
    if (p > 2'000'000) fail(errc::cost_cap_exceeded, "burgess key packing requires p <= 2e6");

    // sigma keyed by (x1, x2, y); a = 0 admits no y with n = a y for n != 0
    // and is skipped.
    std::unordered_map<std::uint64_t, std::uint32_t> sigma;
    sigma.reserve(static_cast<std::size_t>(std::min(cost, 4e7)));
    const auto up = static_cast<std::uint64_t>(p);
    for (std::int64_t a : N0.elems) {
        if (a == 0) continue;
        const std::int64_t ainv = ctx.inv(a);
        for (std::int64_t m1 : M.elems) {
            const std::uint64_t x1 = static_cast<std::uint64_t>(ctx.mul(m1, a));
            for (std::int64_t m2 : M.elems) {
                if (m1 == m2) continue;
                const std::uint64_t x2 = static_cast<std::uint64_t>(ctx.mul(m2, a));
                const std::uint64_t base = (x1 * up + x2) * up;
                for (std::int64_t n : N2.elems) {
                    const std::uint64_t y = static_cast<std::uint64_t>(ctx.mul(n, ainv));
                    ++sigma[base + y];
                }
            }
        }
    }
    BurgessResult res;
    for (const auto& [key, cnt] : sigma) {
        res.pi1 += cnt;
        res.pi2 += static_cast<std::uint64_t>(cnt) * cnt;
    }
    return res;
}

}  // namespace tf
