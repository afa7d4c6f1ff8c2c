#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "traceforms/fp_core.hpp"

using namespace tf;

namespace {

cvec random_cvec(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto u = [&] { return static_cast<double>(rng()) / 1.8446744073709552e19 - 0.5; };
    cvec v(n);
    for (auto& z : v) z = cplx(u(), u());
    return v;
}

double max_diff(const cvec& a, const cvec& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

// Brute-force smallest primitive root: order check over all exponents.
std::int64_t primitive_root_naive(std::int64_t p) {
    for (std::int64_t g = 2; g < p; ++g) {
        std::int64_t x = g % p;
        std::int64_t order = 1;
        while (x != 1) {
            x = x * g % p;
            ++order;
        }
        if (order == p - 1) return g;
    }
    return 0;
}

}  // namespace

TEST_CASE("make_field validates input") {
    CHECK_THROWS_WITH_AS(make_field(4), doctest::Contains("NotPrime"), error);
    CHECK_THROWS_AS(make_field(2), error);
    CHECK_THROWS_AS(make_field(1), error);
    CHECK_THROWS_AS(make_field((std::int64_t{1} << 26) + 1), error);
}

TEST_CASE("generator is the smallest primitive root") {
    CHECK(make_field(7).generator() == 3);
    CHECK(make_field(101).generator() == 2);
    for (std::int64_t p : {5, 11, 13, 17, 19, 23}) {
        CAPTURE(p);
        CHECK(make_field(p).generator() == primitive_root_naive(p));
    }
}

TEST_CASE("dlog reconstructs every unit") {
    for (std::int64_t p : {7, 101, 9973}) {
        const auto ctx = make_field(p);
        for (std::int64_t a = 1; a < p; ++a) {
            REQUIRE(ctx.pow_mod(ctx.generator(), ctx.dlog(a)) == a);
        }
        CHECK_THROWS_AS(ctx.dlog(0), error);
    }
}

TEST_CASE("additive character basics") {
    const auto ctx = make_field(7);
    CHECK(additive_char(ctx, 0) == cplx(1.0, 0.0));
    cplx prod(1.0, 0.0);
    cplx sum(0.0, 0.0);
    for (std::int64_t x = 0; x < 7; ++x) {
        prod *= additive_char(ctx, x);
        sum += additive_char(ctx, x);
        CHECK(std::abs(std::abs(additive_char(ctx, x)) - 1.0) < 1e-14);
    }
    CHECK(std::abs(prod - cplx(1.0, 0.0)) < 1e-12);  // 0+1+...+6 = 21 = 0 mod 7
    CHECK(std::abs(sum) < 1e-12);
}

TEST_CASE("multiplicative characters") {
    const auto ctx = make_field(101);
    for (std::int64_t a = 1; a < 101; ++a) CHECK(mult_char(ctx, 0, a) == cplx(1.0, 0.0));
    CHECK(std::abs(mult_char(ctx, 5, ctx.generator()) - oracle::unit(5.0 / 100.0)) < 1e-12);
    CHECK_THROWS_AS(mult_char(ctx, 3, 0), error);

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const std::int64_t j = static_cast<std::int64_t>(rng() % 100);
        const std::int64_t a = 1 + static_cast<std::int64_t>(rng() % 100);
        const std::int64_t b = 1 + static_cast<std::int64_t>(rng() % 100);
        const cplx lhs = mult_char(ctx, j, a * b % 101);
        const cplx rhs = mult_char(ctx, j, a) * mult_char(ctx, j, b);
        CHECK(std::abs(lhs - rhs) < 1e-12);
    }
}

TEST_CASE("dft trivial shapes") {
    cvec ones(8, cplx(1.0, 0.0));
    const cvec hat = dft(ones);
    CHECK(std::abs(hat[0] - cplx(8.0, 0.0)) < 1e-12);
    for (std::size_t j = 1; j < 8; ++j) CHECK(std::abs(hat[j]) < 1e-12);

    cvec delta(13, cplx(0.0, 0.0));
    delta[0] = cplx(1.0, 0.0);
    for (const auto& z : dft(delta)) CHECK(std::abs(z - cplx(1.0, 0.0)) < 1e-12);
}

TEST_CASE("dft matches the quadratic definition") {
    for (std::size_t L : {1u, 2u, 3u, 16u, 97u, 100u, 255u, 512u}) {
        CAPTURE(L);
        const cvec v = random_cvec(L, 1000 + L);
        CHECK(max_diff(dft(v), oracle::dft_naive(v)) < 1e-10);
    }
    // round trip
    const cvec v = random_cvec(360, 42);
    CHECK(max_diff(idft(dft(v)), v) < 1e-12);
}

TEST_CASE("gauss sums") {
    SUBCASE("against direct summation at p=7 and p=11") {
        for (std::int64_t p : {7, 11}) {
            const auto ctx = make_field(p);
            const cvec tau = gauss_sums(ctx);
            for (std::int64_t j = 0; j < p - 1; ++j) {
                CAPTURE(p);
                CAPTURE(j);
                CHECK(std::abs(tau[static_cast<std::size_t>(j)] -
                               oracle::gauss_sum_naive(ctx, j)) < 1e-12);
            }
        }
    }
    SUBCASE("tau(chi_0) = -1 and |tau| = sqrt(p) at p=101") {
        const auto ctx = make_field(101);
        const cvec tau = gauss_sums(ctx);
        CHECK(std::abs(tau[0] - cplx(-1.0, 0.0)) < 1e-10);
        const double sqrtp = std::sqrt(101.0);
        for (std::size_t j = 1; j < tau.size(); ++j)
            CHECK(std::abs(std::abs(tau[j]) - sqrtp) / sqrtp < 1e-8);
    }
}

TEST_CASE("mellin pair") {
    const auto ctx = make_field(101);
    SUBCASE("indicator of {1} transforms to the constant 1") {
        cvec f(101, cplx(0.0, 0.0));
        f[1] = cplx(1.0, 0.0);
        for (const auto& z : mellin_forward(ctx, f)) CHECK(std::abs(z - cplx(1.0, 0.0)) < 1e-10);
    }
    SUBCASE("f(a) = e(a/p) transforms to the Gauss sums") {
        cvec f(101, cplx(0.0, 0.0));
        for (std::int64_t a = 1; a < 101; ++a) f[static_cast<std::size_t>(a)] = additive_char(ctx, a);
        const cvec got = mellin_forward(ctx, f);
        const cvec tau = gauss_sums(ctx);
        CHECK(max_diff(got, tau) < 1e-10);
    }
    SUBCASE("round trip and Parseval") {
        cvec f = random_cvec(101, 99);
        f[0] = cplx(0.0, 0.0);
        const cvec fhat = mellin_forward(ctx, f);
        const cvec back = mellin_inverse(ctx, fhat);
        CHECK(max_diff(back, f) < 1e-9);

        double lhs = 0.0, rhs = 0.0;
        for (const auto& z : fhat) lhs += std::norm(z);
        for (const auto& z : f) rhs += std::norm(z);
        CHECK(std::abs(lhs - 100.0 * rhs) / (100.0 * rhs) < 1e-8);
    }
}
