#pragma once

#include <string>

#include "pfolia/poly.hpp"

namespace pfolia {

// The four p-power laws an invariant basis (alpha, beta) of Lie(A) can
// satisfy on an abelian surface:
//   Superspecial:       alpha^[p] = 0,     beta^[p] = 0
//   SupersingularNotSS: alpha^[p] = beta,  beta^[p] = 0
//   PRankOne:           alpha^[p] = alpha, beta^[p] = 0
//   Ordinary:           alpha^[p] = alpha, beta^[p] = beta
enum class LieType { Superspecial, SupersingularNotSS, PRankOne, Ordinary };

constexpr LieType kAllLieTypes[] = {LieType::Superspecial, LieType::SupersingularNotSS,
                                    LieType::PRankOne, LieType::Ordinary};

// alpha^[p] = aa*alpha + ab*beta, beta^[p] = bb*beta with aa,ab,bb in {0,1}
struct LieLaw {
    int aa, ab, bb;
};
LieLaw lie_law(LieType t);

std::string lie_type_name(LieType t);
LieType lie_type_from_name(const std::string& name); // throws ConstraintError

enum class Chart { T, S };

// D = u*alpha + v*beta + w*d/dt (resp. d/ds) with u, v, w in k[t].  alpha and
// beta annihilate k[t]; only the last summand acts on the coefficient ring.
class Derivation {
public:
    Derivation(Poly u, Poly v, Poly w, Chart chart = Chart::T);

    const Poly& u() const { return u_; }
    const Poly& v() const { return v_; }
    const Poly& w() const { return w_; }
    Chart chart() const { return chart_; }
    const Field& field() const { return u_.field(); }
    int p() const { return field().p(); }

    bool is_zero() const { return u_.is_zero() && v_.is_zero() && w_.is_zero(); }

    Derivation operator+(const Derivation& o) const;
    Derivation operator-(const Derivation& o) const;
    Derivation scaled(const Poly& f) const;
    bool operator==(const Derivation& o) const;
    bool operator!=(const Derivation& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    Poly u_, v_, w_;
    Chart chart_;
};

// [D1, D2] = (w1 u2' - w2 u1') alpha + (w1 v2' - w2 v1') beta
//            + (w1 w2' - w2 w1') d/dt,
// from [alpha,beta] = [alpha,dt] = [beta,dt] = 0 and alpha(k[t]) = beta(k[t]) = 0.
Derivation bracket(const Derivation& a, const Derivation& b);

// Closed-form p-th power in the restricted structure.
//
// p = 3 (printed expansion):
//   D^[3] = u^3 alpha^[3] + v^3 beta^[3] + w w' u' alpha + w w' v' beta
//           + (w w'^2 + w^2 w'') dt
// p = 2 (derived from the same operator expansion; certified against
// p_power_oracle by the test suite):
//   D^[2] = u^2 alpha^[2] + v^2 beta^[2] + w u' alpha + w v' beta + w w' dt
Derivation p_power(const Derivation& d, LieType type);

// Independent oracle: composes D with itself p times inside the restricted
// enveloping algebra spanned by the monomials alpha^i beta^j dt^k (i,j,k < p)
// over k[t], rewriting alpha^p, beta^p by the Lie law and dt^p = 0, then reads
// off the degree-one part.  Any surviving higher-order or scalar term throws
// ConsistencyError: the result being a derivation is asserted, not assumed.
// max_deg bounds intermediate coefficient degrees as a runaway guard.
Derivation p_power_oracle(const Derivation& d, LieType type, int max_deg = 256);

// Chart change t = 1/s, dt = s^2 ds.  Substitutes, clears denominators by the
// minimal power s^N regular at s = 0, and returns the cleared triple plus N.
// The same rule inverts an s-chart derivation back to the t-chart.
struct ChartImage {
    Derivation image;
    int clearing_exponent; // N
};
ChartImage chart_transform(const Derivation& d);

// twist of the line subbundle generated by degree-bounded fields:
// i = 1 for p = 3, i = 2 for p = 2
int twist_bound(int p);

// deg u, deg v <= i and deg w <= i + 2 in the t-chart
bool degree_bounds_ok(const Derivation& d);

// coefficientwise invariance under the substitution t -> t + 1
bool sigma_shift_invariant(const Derivation& d);

} // namespace pfolia
