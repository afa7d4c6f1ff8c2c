#include "traceforms/fp_core.hpp"

#include <bit>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

namespace tf {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Iterative radix-2 transform, n a power of two, sign = +1 or -1.
void fft_pow2(cvec& a, int sign) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * kTwoPi / static_cast<double>(len);
        const cplx wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            cplx w(1.0, 0.0);
            for (std::size_t j = 0; j < len / 2; ++j) {
                cplx u = a[i + j];
                cplx v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

// Chirp-z (Bluestein) transform for arbitrary L. sign as above.
cvec dft_any(const cvec& v, int sign) {
    const std::size_t L = v.size();
    if (L == 0) return {};
    if (L == 1) return v;
    if (std::has_single_bit(L)) {
        cvec a = v;
        fft_pow2(a, sign);
        return a;
    }

    // jt = (j^2 + t^2 - (j-t)^2) / 2; reduce squares mod 2L before the
    // complex exponential to keep the argument small.
    const std::size_t M = std::bit_ceil(2 * L - 1);
    const std::uint64_t twoL = 2 * static_cast<std::uint64_t>(L);
    cvec chirp(L);
    for (std::size_t t = 0; t < L; ++t) {
        std::uint64_t q = (static_cast<std::uint64_t>(t) * t) % twoL;
        double ang = sign * std::numbers::pi * static_cast<double>(q) / static_cast<double>(L);
        chirp[t] = cplx(std::cos(ang), std::sin(ang));
    }

    cvec a(M, cplx(0.0, 0.0)), b(M, cplx(0.0, 0.0));
    for (std::size_t t = 0; t < L; ++t) a[t] = v[t] * chirp[t];
    b[0] = cplx(1.0, 0.0);
    for (std::size_t t = 1; t < L; ++t) {
        b[t] = std::conj(chirp[t]);
        b[M - t] = b[t];
    }

    fft_pow2(a, +1);
    fft_pow2(b, +1);
    for (std::size_t i = 0; i < M; ++i) a[i] *= b[i];
    fft_pow2(a, -1);

    cvec out(L);
    const double scale = 1.0 / static_cast<double>(M);
    for (std::size_t j = 0; j < L; ++j) out[j] = a[j] * chirp[j] * scale;
    return out;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
    std::vector<std::int64_t> fs;
    for (std::int64_t q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            fs.push_back(q);
            while (n % q == 0) n /= q;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

}  // namespace

std::int64_t field_cap() {
    if (const char* env = std::getenv("TRACE_FORMS_CAP")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end != env && v >= 3) return static_cast<std::int64_t>(v);
    }
    return kDefaultFieldCap;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

std::int64_t FieldContext::pow_mod(std::int64_t base, std::int64_t e) const {
    base %= p_;
    if (base < 0) base += p_;
    std::int64_t r = 1;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

FieldContext make_field(std::int64_t p) {
    if (p < 3)
        fail(errc::even_or_too_small, "p must be an odd prime >= 3, got " + std::to_string(p));
    if (p > field_cap())
        fail(errc::too_large, "p = " + std::to_string(p) + " exceeds the configured cap " +
                                  std::to_string(field_cap()));
    if (!is_prime(p)) fail(errc::not_prime, std::to_string(p) + " is not prime");

    FieldContext ctx;
    ctx.p_ = p;

    const auto qs = prime_factors(p - 1);
    for (std::int64_t g = 2; g < p; ++g) {
        bool primitive = true;
        for (std::int64_t q : qs) {
            if (ctx.pow_mod(g, (p - 1) / q) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            ctx.g_ = g;
            break;
        }
    }

    ctx.dlog_.assign(static_cast<std::size_t>(p), FieldContext::kDlogSentinel);
    std::int64_t x = 1;
    for (std::int64_t t = 0; t < p - 1; ++t) {
        ctx.dlog_[static_cast<std::size_t>(x)] = static_cast<std::uint32_t>(t);
        x = ctx.mul(x, ctx.g_);
    }
    return ctx;
}

cplx additive_char(const FieldContext& ctx, std::int64_t x) {
    x %= ctx.p();
    if (x < 0) x += ctx.p();
    const double ang = kTwoPi * static_cast<double>(x) / static_cast<double>(ctx.p());
    return cplx(std::cos(ang), std::sin(ang));
}

cplx mult_char(const FieldContext& ctx, std::int64_t j, std::int64_t a) {
    const std::int64_t L = ctx.p() - 1;
    const std::uint64_t t = ctx.dlog(a);
    const std::uint64_t e = (static_cast<std::uint64_t>(j % L) * t) % static_cast<std::uint64_t>(L);
    const double ang = kTwoPi * static_cast<double>(e) / static_cast<double>(L);
    return cplx(std::cos(ang), std::sin(ang));
}

cvec dft(const cvec& values) { return dft_any(values, +1); }

cvec idft(const cvec& values) {
    cvec out = dft_any(values, -1);
    const double scale = 1.0 / static_cast<double>(values.empty() ? 1 : values.size());
    for (auto& z : out) z *= scale;
    return out;
}

cvec gauss_sums(const FieldContext& ctx) {
    const std::int64_t p = ctx.p();
    cvec seq(static_cast<std::size_t>(p - 1));
    std::int64_t x = 1;
    for (std::int64_t t = 0; t < p - 1; ++t) {
        seq[static_cast<std::size_t>(t)] = additive_char(ctx, x);
        x = ctx.mul(x, ctx.generator());
    }
    return dft(seq);
}

cvec mellin_forward(const FieldContext& ctx, const cvec& f) {
    const std::int64_t p = ctx.p();
    cvec seq(static_cast<std::size_t>(p - 1));
    std::int64_t x = 1;
    for (std::int64_t t = 0; t < p - 1; ++t) {
        seq[static_cast<std::size_t>(t)] = f[static_cast<std::size_t>(x)];
        x = ctx.mul(x, ctx.generator());
    }
    return dft(seq);
}

cvec mellin_inverse(const FieldContext& ctx, const cvec& fhat) {
    const std::int64_t p = ctx.p();
    cvec seq = idft(fhat);
    cvec f(static_cast<std::size_t>(p), cplx(0.0, 0.0));
    std::int64_t x = 1;
    for (std::int64_t t = 0; t < p - 1; ++t) {
        f[static_cast<std::size_t>(x)] = seq[static_cast<std::size_t>(t)];
        x = ctx.mul(x, ctx.generator());
    }
    return f;
}

}  // namespace tf
