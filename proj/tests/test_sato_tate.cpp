#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "traceforms/sato_tate.hpp"

using namespace tf;

namespace {

// Inverse Sato-Tate CDF by bisection (test-only helper).
double st_quantile(double q) {
    double lo = -2.0, hi = 2.0;
    for (int i = 0; i < 80; ++i) {
        const double mid = 0.5 * (lo + hi);
        (st_cdf(mid) < q ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("st_cdf values and shape") {
    CHECK(st_cdf(-2.0) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(st_cdf(2.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(st_cdf(0.0) == doctest::Approx(0.5));
    CHECK(st_cdf(1.0) == doctest::Approx(0.80450).epsilon(1e-4));
    CHECK_THROWS_AS(st_cdf(2.1), error);
    CHECK_THROWS_AS(st_cdf(-2.0000001), error);

    SUBCASE("monotone and symmetric") {
        double prev = -1.0;
        for (int i = 0; i <= 400; ++i) {
            const double x = -2.0 + 4.0 * i / 400.0;
            const double f = st_cdf(x);
            CHECK(f >= prev);
            prev = f;
            CHECK(st_cdf(-x) == doctest::Approx(1.0 - f).epsilon(1e-12));
        }
    }
    SUBCASE("matches midpoint quadrature of the semicircle density") {
        // F(x) = int_{-2}^{x} sqrt(4-u^2)/(2 pi) du
        for (double x : {-1.5, -0.3, 0.7, 1.9}) {
            const int n = 200000;
            double acc = 0.0;
            const double h = (x + 2.0) / n;
            for (int i = 0; i < n; ++i) {
                const double u = -2.0 + (i + 0.5) * h;
                acc += std::sqrt(4.0 - u * u) / (2.0 * std::numbers::pi) * h;
            }
            CHECK(st_cdf(x) == doctest::Approx(acc).epsilon(1e-7));
        }
    }
}

TEST_CASE("weyl_sums") {
    SUBCASE("single angle reproduces sym_k") {
        const std::vector<double> a = {1.3};
        const auto s = weyl_sums(a, 6);
        for (int k = 1; k <= 6; ++k)
            CHECK(s[static_cast<std::size_t>(k - 1)] ==
                  doctest::Approx(sym_eval(k, 1.3)).epsilon(1e-12));
    }
    SUBCASE("theta = pi/2 alternates 0, -1, 0, 1") {
        const std::vector<double> a = {std::numbers::pi / 2.0};
        const auto s = weyl_sums(a, 4);
        CHECK(s[0] == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(s[1] == doctest::Approx(-1.0));
        CHECK(std::abs(s[2]) < 1e-12);
        CHECK(s[3] == doctest::Approx(1.0));
    }
    SUBCASE("additivity over samples") {
        const std::vector<double> a = {0.4, 2.1, 1.0};
        const auto s = weyl_sums(a, 5);
        for (int k = 1; k <= 5; ++k) {
            const double direct = sym_eval(k, 0.4) + sym_eval(k, 2.1) + sym_eval(k, 1.0);
            CHECK(s[static_cast<std::size_t>(k - 1)] == doctest::Approx(direct).epsilon(1e-12));
        }
    }
    SUBCASE("stratified Sato-Tate angles give small sums") {
        // theta_i = angle of the i-th quantile; Weyl sums should be o(N).
        const int n = 2000;
        std::vector<double> angles(n);
        for (int i = 0; i < n; ++i)
            angles[static_cast<std::size_t>(i)] =
                std::acos(st_quantile((i + 0.5) / n) / 2.0);
        const auto s = weyl_sums(angles, 8);
        for (double v : s) CHECK(std::abs(v) / n < 0.01);
    }
    CHECK_THROWS_AS(weyl_sums(std::vector<double>{0.5}, 0), error);
}

TEST_CASE("fit_weyl_level") {
    const std::vector<double> sums = {10.0, -40.0, 18.0};
    // N = 100, A = 2: max(10/100, 40/400, 18/900) = 0.1
    CHECK(fit_weyl_level(sums, 100, 2.0) == doctest::Approx(0.1));
    // A = 0: max |S_k| / N = 0.4
    CHECK(fit_weyl_level(sums, 100, 0.0) == doctest::Approx(0.4));
    CHECK_THROWS_AS(fit_weyl_level(sums, 0, 2.0), error);
}

TEST_CASE("theoretical_delta") {
    // r=1, |M|=|N|=p: p^{-1/2}(p^{1/2} p^{-1/2} + p^{1/4})
    const double p = 1009.0;
    const double expect = std::pow(p, -0.5) * (1.0 + std::pow(p, 0.25));
    CHECK(theoretical_delta(1, 1009, 1009, 1009) == doctest::Approx(expect).epsilon(1e-12));
    // shrinking M or N can only raise the level
    CHECK(theoretical_delta(1, 100, 1009, 1009) > theoretical_delta(1, 1009, 1009, 1009));
    CHECK(theoretical_delta(1, 1009, 50, 1009) > theoretical_delta(1, 1009, 1009, 1009));
    // larger r weakens the saving
    CHECK(theoretical_delta(2, 20000, 50, 100003) >
          theoretical_delta(1, 20000, 50, 100003) * 0.0);  // positive
    CHECK(theoretical_delta(2, 20000, 50, 100003) > 0.0);
}

TEST_CASE("discrepancy") {
    SUBCASE("single sample at the median") {
        // sup over {F(0) - 0, 1 - F(0)} = 1/2
        CHECK(discrepancy({0.0}) == doctest::Approx(0.5));
    }
    SUBCASE("single extreme sample") {
        CHECK(discrepancy({-2.0}) == doctest::Approx(1.0));
    }
    SUBCASE("stratified quantiles converge at rate 1/(2N)") {
        const int n = 100;
        std::vector<double> xs(n);
        for (int i = 0; i < n; ++i)
            xs[static_cast<std::size_t>(i)] = st_quantile((i + 0.5) / n);
        CHECK(discrepancy(xs) == doctest::Approx(0.005).epsilon(1e-6));
    }
    SUBCASE("permutation invariance") {
        std::vector<double> xs = {0.3, -1.2, 1.9, 0.0, -0.4};
        const double d1 = discrepancy(xs);
        std::mt19937_64 rng(7);
        std::shuffle(xs.begin(), xs.end(), rng);
        CHECK(discrepancy(xs) == doctest::Approx(d1).epsilon(1e-15));
    }
    CHECK_THROWS_AS(discrepancy({}), error);
}

TEST_CASE("equidist_experiment with Kloosterman traces") {
    const auto ctx = make_field(1009);
    const auto M = SubsetFp::units(1009);
    const auto N = SubsetFp::from_elements(1009, {1});
    const STReport rep = equidist_experiment(ctx, EquidistKind::kloosterman, 1, M, N);
    CHECK(rep.n == 1008);
    CHECK(rep.masked == 0);
    // full F_p^x orbit: vertical Sato-Tate holds, so both stats are small
    CHECK(rep.ks < 0.1);
    CHECK(rep.delta < 0.1);
    CHECK(rep.predicted < 1.0);

    SUBCASE("scale invariance: a m n runs over the same multiset") {
        const STReport rep3 = equidist_experiment(ctx, EquidistKind::kloosterman, 3, M, N);
        CHECK(rep3.ks == doctest::Approx(rep.ks).epsilon(1e-12));
        for (std::size_t i = 0; i < rep.weyl.size(); ++i)
            CHECK(rep3.weyl[i] == doctest::Approx(rep.weyl[i]).epsilon(1e-9));
    }
    SUBCASE("zero products are masked") {
        const auto M0 = SubsetFp::from_elements(1009, {0, 1, 2});
        const STReport repm =
            equidist_experiment(ctx, EquidistKind::kloosterman, 1, M0, SubsetFp::units(1009));
        CHECK(repm.masked == 1008);
        CHECK(repm.n == 2 * 1008);
    }
    CHECK_THROWS_AS(equidist_experiment(ctx, EquidistKind::kloosterman, 0, M, N), error);
}

TEST_CASE("equidist_experiment with elliptic traces") {
    const auto ctx = make_field(1009);
    const EllipticFamily fam{{0, 1}, {1}};  // y^2 = x^3 + t x + 1
    const auto M = SubsetFp::units(1009);
    const auto N = SubsetFp::from_elements(1009, {1});
    const STReport rep =
        equidist_experiment(ctx, EquidistKind::elliptic, 1, M, N, &fam);
    // Delta(t) = -16(4 t^3 + 27) kills at most 3 parameters
    CHECK(rep.masked <= 3);
    CHECK(rep.n + rep.masked == 1008);
    CHECK(rep.ks < 0.1);
    for (std::size_t i = 0; i < rep.weyl.size(); ++i) {
        const double k = static_cast<double>(i + 1);
        // Katz-style square-root cancellation with a generous constant
        CHECK(std::abs(rep.weyl[i]) <= 4.0 * (k + 1.0) * std::sqrt(1009.0));
    }
    CHECK_THROWS_AS(equidist_experiment(ctx, EquidistKind::elliptic, 1, M, N, nullptr), error);
}

TEST_CASE("histogram64") {
    const std::vector<double> xs = {-2.0, -1.99, 0.0, 1.999, 2.0};
    const auto bins = histogram64(xs);
    CHECK(bins.size() == 64);
    CHECK(bins[0] == 2);
    CHECK(bins[32] == 1);
    CHECK(bins[63] == 2);
    std::size_t total = 0;
    for (auto b : bins) total += b;
    CHECK(total == xs.size());
}
