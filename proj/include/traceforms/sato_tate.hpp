#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "traceforms/fp_core.hpp"
#include "traceforms/subset.hpp"
#include "traceforms/trace_fn.hpp"

namespace tf {

// Sato-Tate CDF: F(x) = 1/2 + (x sqrt(4-x^2)/2 + 2 arcsin(x/2)) / (2 pi)
// on [-2, 2]. Throws OutOfRange outside.
double st_cdf(double x);

// S_k = sum_n sym_k(theta_n), 1 <= k <= kmax.
std::vector<double> weyl_sums(std::span<const double> angles, int kmax);

// Minimal level Delta with |S_k| <= k^A N Delta over the computed range.
double fit_weyl_level(std::span<const double> sums, std::size_t n, double a);

// The theoretical level |M|^{-1/2r} (p^{1/2r} |N|^{-1/2} + p^{1/4r}).
double theoretical_delta(int r, std::int64_t size_m, std::int64_t size_n, std::int64_t p);

// Kolmogorov-Smirnov statistic of samples (values in [-2,2]) against the
// Sato-Tate CDF; exact sup over the sorted samples.
double discrepancy(std::vector<double> samples);

enum class EquidistKind { kloosterman, elliptic };

struct STReport {
    std::size_t n = 0;                 // sample count
    std::vector<double> weyl;          // S_1 .. S_kmax
    double a_exponent = 2.0;           // the A in |S_k| <= k^A N Delta
    double delta = 0.0;                // fitted level
    double ks = 1.0;                   // KS discrepancy
    double predicted = 1.0;            // Delta^{1/(A+1)}
    std::size_t masked = 0;            // elliptic points with Delta(t) = 0
    std::int64_t size_m = 0, size_n = 0;
    std::vector<std::size_t> hist;     // 64 bins on [-2, 2]
};

// Builds the multiset {K(a m n)} over (m, n) in M x N for K = Kl_2 or the
// scaled elliptic trace, and measures its Sato-Tate statistics.
STReport equidist_experiment(const FieldContext& ctx, EquidistKind kind, std::int64_t a,
                             const SubsetFp& M, const SubsetFp& N,
                             const EllipticFamily* family = nullptr, int kmax = 10,
                             double a_exponent = 2.0);

// 64 equal bins on [-2, 2].
std::vector<std::size_t> histogram64(std::span<const double> samples);

}  // namespace tf
