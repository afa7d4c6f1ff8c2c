#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "traceforms/fp_core.hpp"
#include "traceforms/subset.hpp"

namespace tf {

enum class TraceKind { hyper_kloosterman, sym_power_kl, elliptic_sym_power };

// The values K(a) of one trace function for every a in F_p.
// Kloosterman tables store K(0) = 0 (the sum ranges over F_p^x only).
struct TraceTable {
    TraceKind kind = TraceKind::hyper_kloosterman;
    std::int64_t p = 0;
    int k = 2;
    std::vector<int> twist;  // character indices; empty = untwisted
    cvec values;             // indexed by residue 0..p-1
    std::string meta;

    double norm_inf() const;
};

// Kloosterman angles theta(a) in [0, pi] (or elliptic angles indexed by the
// curve parameter). domain[a] == 0 marks excluded points (a = 0, or
// Delta(t) = 0 mod p).
struct AngleTable {
    std::int64_t p = 0;
    std::vector<double> angles;
    std::vector<std::uint8_t> domain;
};

// Kl_k(a, p) by direct enumeration over (x_1, ..., x_{k-1}).
// Oracle-scale only: requires p^{k-1} <= 1e8.
cplx kl_direct(const FieldContext& ctx, std::int64_t a, int k);

// All Kl_k values at once via the Mellin route: two length-(p-1) fast
// transforms. `twist` holds up to k character indices (missing entries are
// the trivial character).
TraceTable kl_bulk(const FieldContext& ctx, int k, std::span<const int> twist = {});

// theta_p(a) = arccos(clamp(Kl_2(a)/2, -1, 1)); raises NonRealValue if the
// transform noise on Im Kl_2 exceeds 1e-6.
AngleTable kl_angles(const FieldContext& ctx, const TraceTable& kl2);

// sym_k(theta) = sin((k+1)theta)/sin(theta) with removable singularities
// filled (theta = 0 -> k+1, theta = pi -> (-1)^k (k+1)).
double sym_eval(int k, double theta);

// values[a] = sym_k(theta(a)) on the angle domain, 0 elsewhere.
TraceTable sym_power_table(const AngleTable& angles, int k);

// A Weierstrass family y^2 = x^3 + a(t) x + b(t) with integer coefficient
// polynomials in t (coefficient i of x^i).
struct EllipticFamily {
    std::vector<std::int64_t> a_poly;
    std::vector<std::int64_t> b_poly;

    // Delta(t) = -16 (4 a(t)^3 + 27 b(t)^2)
    std::vector<std::int64_t> delta_poly() const;
    // Number of distinct complex roots of Delta.
    int r_delta() const;
};

// True iff j(t) = -1728 (4a)^3 / Delta is non-constant, i.e. a^3 and Delta
// are not proportional over Q. Throws ZeroDiscriminantPoly when Delta == 0.
bool j_nonconstant(const EllipticFamily& fam);

struct EllipticResult {
    TraceTable traces;               // a_p(t)/sqrt(p) on unmasked t, 0 elsewhere
    AngleTable angles;               // theta~ with domain mask
    std::vector<std::int64_t> ap;    // exact integer traces (0 on masked t)
    std::vector<std::uint8_t> mask;  // 1 = Delta(t) != 0 mod p
};

// Exact integer Frobenius traces a_p(t) = -sum_x chi2(x^3 + a(t)x + b(t))
// over t in T, with a precomputed quadratic-character table.
// Cost cap |T| * p <= 1e9.
EllipticResult elliptic_traces(const FieldContext& ctx, const EllipticFamily& fam,
                               const SubsetFp& T);

// CSV export: header naming kind/p/k, then rows a, re, im [, angle].
void write_trace_csv(std::ostream& os, const TraceTable& table,
                     const AngleTable* angles = nullptr);

}  // namespace tf
