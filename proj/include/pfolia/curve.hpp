#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pfolia/mpoly.hpp"

namespace pfolia {

// Finitely presented affine algebra k[x1..xn]/(rel) with at most one relation,
// monic in a designated variable so that every element has a normal form of
// bounded degree in it (e.g. y^2 + y + x^3 with designated variable y).
class PresentedRing {
public:
    // free polynomial ring (no relation, no reduction)
    PresentedRing(const Field& f, VarSetPtr vars);
    // single relation, solved for lead_var^d where d = deg_{lead_var}(relation)
    PresentedRing(const Field& f, VarSetPtr vars, MPoly relation, const std::string& lead_var);

    const Field& field() const { return *f_; }
    const VarSetPtr& vars() const { return vars_; }
    bool has_relation() const { return relation_.has_value(); }
    const MPoly& relation() const;

    MPoly reduce(MPoly x) const;
    MPoly var(const std::string& name) const { return MPoly::var(*f_, vars_, name); }
    MPoly parse(const std::string& expr) const { return MPoly::parse(*f_, vars_, expr); }

    // the Weierstrass models of the worked example, over F_2:
    //   E:  y^2 + y = x^3          (supersingular)
    //   E': y'^2 + x'y' = x'^3 + 1 (ordinary; primes spelled xp, yp)
    static PresentedRing curve_E(const Field& f);
    static PresentedRing curve_Eprime(const Field& f);
    // E x A^1: same relation inside k[x, y, t]
    static PresentedRing curve_E_times_line(const Field& f);

private:
    const Field* f_;
    VarSetPtr vars_;
    std::optional<MPoly> relation_;
    int lead_index_ = -1;
    int lead_degree_ = 0;
    std::optional<MPoly> lead_rhs_; // lead_var^lead_degree -> lead_rhs
};

// A derivation given by its values on the ring generators; the Leibniz rule
// determines it everywhere: D(f) = sum_i (df/dx_i) D(x_i).
class RingDerivation {
public:
    RingDerivation(const PresentedRing& ring, std::vector<MPoly> images);

    const std::vector<MPoly>& images() const { return images_; }
    MPoly apply(const MPoly& f) const;
    bool is_zero() const;
    bool operator==(const RingDerivation& o) const { return images_ == o.images_; }

private:
    const PresentedRing* ring_;
    std::vector<MPoly> images_;
};

// D descends to the quotient iff D(relation) reduces to zero.
bool derivation_well_defined(const RingDerivation& d, const PresentedRing& ring);

// p-fold iterate on each generator; the result is checked to be well defined
// again (a failure signals inconsistent inputs and throws ConsistencyError).
RingDerivation ring_derivation_p_power(const RingDerivation& d, const PresentedRing& ring, int p);

// (alpha + d/dt)^[2] on E x A^1 vanishes; beta + d/dt on E' x A^1 squares to
// beta.  Returns whether the p-th power of (field + d/dt) is zero.
bool verify_product_field(const RingDerivation& d, const PresentedRing& ring, int p);

} // namespace pfolia
