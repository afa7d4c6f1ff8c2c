#include "traceforms/sato_tate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace tf {

double st_cdf(double x) {
    if (x < -2.0 || x > 2.0) fail(errc::out_of_range, "st_cdf domain is [-2, 2]");
    return 0.5 + (x * std::sqrt(4.0 - x * x) / 2.0 + 2.0 * std::asin(x / 2.0)) /
                     (2.0 * std::numbers::pi);
}

std::vector<double> weyl_sums(std::span<const double> angles, int kmax) {
    if (kmax < 1) fail(errc::out_of_range, "kmax must be >= 1");
    std::vector<double> sums(static_cast<std::size_t>(kmax), 0.0);
    // sym_k via the shared Chebyshev recurrence, all k at once per angle.
    for (double theta : angles) {
        const double x = std::cos(theta);
        double um1 = 1.0, u = 2.0 * x;
        for (int k = 1; k <= kmax; ++k) {
            sums[static_cast<std::size_t>(k - 1)] += u;
            const double next = 2.0 * x * u - um1;
            um1 = u;
            u = next;
        }
    }
    return sums;
}

double fit_weyl_level(std::span<const double> sums, std::size_t n, double a) {
    if (n == 0) fail(errc::out_of_range, "sample count must be >= 1");
    double delta = 0.0;
    for (std::size_t i = 0; i < sums.size(); ++i) {
        const double k = static_cast<double>(i + 1);
        delta = std::max(delta, std::abs(sums[i]) / (std::pow(k, a) * static_cast<double>(n)));
    }
    return delta;
}

double theoretical_delta(int r, std::int64_t size_m, std::int64_t size_n, std::int64_t p) {
    const double rr = static_cast<double>(r);
    const double dp = static_cast<double>(p);
    return std::pow(static_cast<double>(size_m), -1.0 / (2.0 * rr)) *
           (std::pow(dp, 1.0 / (2.0 * rr)) / std::sqrt(static_cast<double>(size_n)) +
            std::pow(dp, 1.0 / (4.0 * rr)));
}

double discrepancy(std::vector<double> samples) {
    const std::size_t n = samples.size();
    if (n == 0) fail(errc::out_of_range, "discrepancy needs at least one sample");
    std::sort(samples.begin(), samples.end());
    double d = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double f = st_cdf(samples[i]);
        const double hi = static_cast<double>(i + 1) / static_cast<double>(n) - f;
        const double lo = f - static_cast<double>(i) / static_cast<double>(n);
        d = std::max({d, hi, lo});
    }
    return d;
}

STReport equidist_experiment(const FieldContext& ctx, EquidistKind kind, std::int64_t a,
                             const SubsetFp& M, const SubsetFp& N,
                             const EllipticFamily* family, int kmax, double a_exponent) {
    const std::int64_t p = ctx.p();
    if (M.p != p || N.p != p) fail(errc::field_mismatch, "sets disagree with the field");
    if (a % p == 0) fail(errc::zero_argument, "scale a must be nonzero");

    std::vector<double> values;   // trace values in [-2, 2]
    std::vector<double> angles;   // matching angles
    values.reserve(M.size() * N.size());
    angles.reserve(M.size() * N.size());
    std::size_t masked = 0;

    if (kind == EquidistKind::kloosterman) {
        const TraceTable kl2 = kl_bulk(ctx, 2);
        const AngleTable th = kl_angles(ctx, kl2);
        for (std::int64_t m : M.elems)
            for (std::int64_t n : N.elems) {
                const std::int64_t idx = ctx.mul(ctx.mul(a, m), n);
                if (idx == 0) {
                    ++masked;  // K(0) = 0 lies outside the F_p^x orbit
                    continue;
                }
                values.push_back(kl2.values[static_cast<std::size_t>(idx)].real());
                angles.push_back(th.angles[static_cast<std::size_t>(idx)]);
            }
    } else {
        if (!family) fail(errc::out_of_range, "elliptic experiment needs a family");
        const EllipticResult er = elliptic_traces(ctx, *family, SubsetFp::full(p));
        for (std::int64_t m : M.elems)
            for (std::int64_t n : N.elems) {
                const std::int64_t idx = ctx.mul(ctx.mul(a, m), n);
                if (!er.mask[static_cast<std::size_t>(idx)]) {
                    ++masked;
                    continue;
                }
                values.push_back(er.traces.values[static_cast<std::size_t>(idx)].real());
                angles.push_back(er.angles.angles[static_cast<std::size_t>(idx)]);
            }
    }

    STReport rep;
    rep.n = values.size();
    rep.a_exponent = a_exponent;
    rep.masked = masked;
    rep.size_m = static_cast<std::int64_t>(M.size());
    rep.size_n = static_cast<std::int64_t>(N.size());
    if (!values.empty()) {
        rep.weyl = weyl_sums(angles, kmax);
        rep.delta = fit_weyl_level(rep.weyl, rep.n, a_exponent);
        rep.predicted = std::pow(rep.delta, 1.0 / (a_exponent + 1.0));
        rep.ks = discrepancy(values);
    }
    rep.hist = histogram64(values);
    return rep;
}

std::vector<std::size_t> histogram64(std::span<const double> samples) {
    std::vector<std::size_t> bins(64, 0);
    for (double v : samples) {
        int b = static_cast<int>((v + 2.0) / 4.0 * 64.0);
        b = std::clamp(b, 0, 63);
        ++bins[static_cast<std::size_t>(b)];
    }
    return bins;
}

}  // namespace tf
