#pragma once

#include <cstdint>
#include <vector>

#include "traceforms/fp_core.hpp"
#include "traceforms/subset.hpp"

namespace tf {

using uint128 = unsigned __int128;

double uint128_to_double(uint128 v);
std::string uint128_to_string(uint128 v);

// A + B = {a + b mod p}, deduplicated.
SubsetFp sumset(const SubsetFp& A, const SubsetFp& B);

// |A + A| / |A|. Throws EmptySet on empty A.
double doubling(const SubsetFp& A);

// E(A,B) = #{(a1,a2,b1,b2) : a1 b1 = a2 b2 mod p}, exact, via the product
// frequency table.
std::uint64_t mult_energy(const SubsetFp& A, const SubsetFp& B);

// D(A) = #{(a1..a8) in A^8 : (a1-a2)(a3-a4) = (a5-a6)(a7-a8) mod p}.
// The t != 0 part of the difference-product convolution runs through one
// multiplicative (Mellin) convolution; the t = 0 bookkeeping is exact integer
// arithmetic. Throws RoundingDriftExceeded if the transform noise on any
// convolution entry reaches 0.4.
uint128 quad_D(const FieldContext& ctx, const SubsetFp& A);

// D(A) * p / |A|^8 — the main-term ratio of Shkredov's asymptotic.
double shkredov_ratio(const FieldContext& ctx, const SubsetFp& A);

// Generalized arithmetic progression {a0 + sum x_j w_j : 0 <= x_j < N_j}.
struct GAProgression {
    std::int64_t p = 0;
    std::int64_t a0 = 0;
    std::vector<std::int64_t> omegas;
    std::vector<std::int64_t> bounds;  // N_j >= 1

    int dim() const { return static_cast<int>(omegas.size()); }
    std::int64_t volume() const {
        std::int64_t v = 1;
        for (std::int64_t n : bounds) v *= n;
        return v;
    }
};

struct GapSet {
    SubsetFp set;
    bool proper = false;  // |set| == volume
};

// Enumerates the value set mod p. Volume cap 1e7.
GapSet gap_enumerate(const GAProgression& P);

// Containment verifier for a claimed covering progression.
bool gap_contains(const GAProgression& P, const SubsetFp& A);

// E(P) / [16^d (|P|^4/p + |P|^{5/2} log^2 |P|)]
double chang_energy_ratio(const GAProgression& P);

struct BurgessResult {
    std::uint64_t pi1 = 0;  // sum of sigma
    std::uint64_t pi2 = 0;  // sum of sigma^2
};

// sigma(x1,x2,y) counts (m1 != m2 in M, n in N2, a in N0 \ {0}) with
// m1 a = x1, m2 a = x2, n = a y. Direct enumeration; cost cap
// |M|^2 |N0| |N2| <= 2e8.
BurgessResult burgess_quantities(const FieldContext& ctx, const SubsetFp& M,
                                 const SubsetFp& N0, const SubsetFp& N2);

}  // namespace tf
