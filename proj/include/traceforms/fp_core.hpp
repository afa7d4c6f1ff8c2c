#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "traceforms/errors.hpp"

namespace tf {

using cplx = std::complex<double>;
using cvec = std::vector<cplx>;

// Hard cap on p: all bulk operations keep O(p) tables in memory.
inline constexpr std::int64_t kDefaultFieldCap = std::int64_t{1} << 26;

// Returns the active cap: kDefaultFieldCap unless TRACE_FORMS_CAP is set.
std::int64_t field_cap();

bool is_prime(std::int64_t n);

// An odd prime p together with its smallest primitive root g and the full
// discrete-log table. Immutable after construction; safe to share.
class FieldContext {
public:
    static constexpr std::uint32_t kDlogSentinel = 0xffffffffu;

    std::int64_t p() const { return p_; }
    std::int64_t generator() const { return g_; }

    std::int64_t mul(std::int64_t a, std::int64_t b) const {
        return static_cast<std::int64_t>(
            static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(b) % p_);
    }

    std::int64_t pow_mod(std::int64_t base, std::int64_t e) const;

    // dlog(a) for a in [1, p); throws ZeroArgument on a == 0.
    std::uint32_t dlog(std::int64_t a) const {
        if (a == 0) fail(errc::zero_argument, "dlog(0) is undefined");
        return dlog_[static_cast<std::size_t>(a)];
    }

    std::int64_t inv(std::int64_t a) const {
        if (a % p_ == 0) fail(errc::zero_argument, "0 has no inverse");
        return pow_mod(a % p_ < 0 ? a % p_ + p_ : a % p_, p_ - 2);
    }

    // Legendre symbol via dlog parity; chi2(0) = 0.
    int legendre(std::int64_t a) const {
        a %= p_;
        if (a < 0) a += p_;
        if (a == 0) return 0;
        return (dlog_[static_cast<std::size_t>(a)] & 1u) ? -1 : 1;
    }

    friend FieldContext make_field(std::int64_t p);

private:
    std::int64_t p_ = 0;
    std::int64_t g_ = 0;
    std::vector<std::uint32_t> dlog_;
};

// Verifies primality, finds the smallest primitive root and builds the dlog
// table. Throws NotPrime / EvenOrTooSmall / TooLarge.
FieldContext make_field(std::int64_t p);

// e(x/p) = exp(2*pi*i*x/p).
cplx additive_char(const FieldContext& ctx, std::int64_t x);

// chi_j(a) = e(j*dlog(a)/(p-1)); chi_0 == 1. Throws ZeroArgument on a == 0.
cplx mult_char(const FieldContext& ctx, std::int64_t j, std::int64_t a);

// Forward DFT with the e(jt/L) = exp(+2*pi*i*jt/L) kernel, any length L >= 1
// (chirp-z reduction to a power-of-two transform for composite L).
cvec dft(const cvec& values);

// Inverse of dft (negative kernel, divided by L).
cvec idft(const cvec& values);

// tau(chi_j) for 0 <= j < p-1, as one length-(p-1) DFT of t -> e(g^t/p).
cvec gauss_sums(const FieldContext& ctx);

// Mellin transform over F_p^x: fhat(chi_j) = sum_{a != 0} f(a) chi_j(a).
// f is indexed by residues 0..p-1 (f[0] ignored); the result is indexed by
// character index 0..p-2.
cvec mellin_forward(const FieldContext& ctx, const cvec& f);

// Inverse Mellin transform; returns a residue-indexed table with entry 0 = 0.
cvec mellin_inverse(const FieldContext& ctx, const cvec& fhat);

}  // namespace tf
