#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pfolia/derivation.hpp"

namespace pfolia {

// Albanese separability class of a degree-bounded field, read off the linear
// coefficients: for p = 3 the condition is Delta = a1 b0 - a0 b1 != 0, for
// p = 2 it is that one of Delta01, Delta12, Delta02 is nonzero.
enum class Separability { InseparableAlbanese, SeparableOrOther, Degenerate };

std::string separability_name(Separability s);

struct FoliationReport {
    bool saturated = false;
    bool degree_bounds_ok = false;
    bool involutive = true; // rank-one modules are involutive for free
    bool p_closed = false;
    std::optional<Poly> lambda; // present iff p_closed (rank one only)
    Separability separability = Separability::Degenerate;
    int det_twist = 0;
    bool k_trivial = false;
    std::vector<std::string> matched_rows; // table-case labels, possibly several
};

// The s-chart coefficient triple of D read as a section of the twisted bundle
// T_A(i) + T_P1(i): bound-aware coefficient reversal (rev_i u, rev_i v,
// rev_{i+2} w), where i is the twist bound for p enlarged if D overflows it.
std::array<Poly, 3> s_chart_triple(const Derivation& d);

// gcd(u, v, w) = 1 on the t-chart and on the s-chart (the two unit-ideal
// conditions of the smoothness criterion).
bool is_saturated(const Derivation& d);

// Proportionality test D^[p] = lambda * D via vanishing of the three 2x2
// minors of the coefficient matrix; lambda is recovered by exact division and
// never by division through an untested denominator.
std::pair<bool, std::optional<Poly>> is_p_closed(const Derivation& d, LieType type);

Separability separability_class(const Derivation& d);

// P1-twist degree of the determinant line of the rank-one module generated by
// a saturated D: minus the chart-transform clearing exponent.
int det_twist(const Derivation& d);

// det F ~ pr2^* O(-2/(p-1))
bool k_trivial_check(int twist, int p);

// Aggregate verdict for one generator (table matching is layered on top).
FoliationReport check_rank1(const Derivation& d, LieType type);

// ---------------------------------------------------------------------------

struct Rank2Module {
    Derivation d1, d2;
};

// 2x2 minors (uv, uw, vw) of the stacked coefficient matrix.
std::array<Poly, 3> rank2_minors(const Rank2Module& m);

// Twist of det F computed from the primitive wedge; chart-symmetric.
int rank2_det_twist(const Rank2Module& m);

// Membership of X in the k(t)-span of {D1, D2}: the stacked 3x3 determinant
// vanishes (valid once rank 2 is established).
bool in_span(const Rank2Module& m, const Derivation& x);

// Verifies rank 2 (else RankError), involutivity and p-closure by span
// membership, saturation of the wedge on both charts, and the det twist.
FoliationReport rank2_check(const Rank2Module& m, LieType type);

} // namespace pfolia
