#include "pfolia/curve.hpp"

#include "pfolia/errors.hpp"

namespace pfolia {

PresentedRing::PresentedRing(const Field& f, VarSetPtr vars) : f_(&f), vars_(std::move(vars)) {}

PresentedRing::PresentedRing(const Field& f, VarSetPtr vars, MPoly relation,
                             const std::string& lead_var)
    : f_(&f), vars_(std::move(vars)), relation_(std::move(relation)) {
    lead_index_ = vars_->index(lead_var);
    if (lead_index_ < 0)
        throw ConstraintError("PresentedRing: unknown designated variable " + lead_var);
    lead_degree_ = relation_->degree_in(lead_var);
    if (lead_degree_ == 0)
        throw ConstraintError("PresentedRing: relation does not involve " + lead_var);

    // the designated leading term must be the pure power lead_var^d with an
    // invertible coefficient, so that lead_var^d -> -(rest)/coeff is a
    // terminating rewrite
    MPoly::Exp pure(vars_->size(), 0);
    pure[lead_index_] = uint8_t(lead_degree_);
    uint8_t coeff = 0;
    for (const auto& [e, c] : relation_->terms())
        if (e == pure)
            coeff = c;
    if (coeff == 0)
        throw ConstraintError("PresentedRing: designated leading term is not solvable");
    MPoly lead_term = MPoly::term(f, vars_, coeff, pure);
    lead_rhs_ = (lead_term - *relation_).scaled(f.inv(coeff));
    if (lead_rhs_->degree_in(lead_var) >= lead_degree_)
        throw ConstraintError("PresentedRing: relation is not monic enough to reduce");
}

const MPoly& PresentedRing::relation() const {
    if (!relation_)
        throw ConstraintError("PresentedRing: free ring has no relation");
    return *relation_;
}

MPoly PresentedRing::reduce(MPoly x) const {
    if (!relation_)
        return x;
    for (;;) {
        bool hit = false;
        for (const auto& [e, c] : x.terms()) {
            if (e[lead_index_] < lead_degree_)
                continue;
            MPoly::Exp rest = e;
            rest[lead_index_] = uint8_t(rest[lead_index_] - lead_degree_);
            MPoly tau = MPoly::term(*f_, vars_, c, e);
            x = x - tau + MPoly::term(*f_, vars_, c, rest) * *lead_rhs_;
            hit = true;
            break;
        }
        if (!hit)
            return x;
    }
}

PresentedRing PresentedRing::curve_E(const Field& f) {
    auto vars = std::make_shared<VarSet>(std::vector<std::string>{"x", "y"});
    MPoly rel = MPoly::parse(f, vars, "y^2 + y + x^3");
    return PresentedRing(f, vars, rel, "y");
}

PresentedRing PresentedRing::curve_Eprime(const Field& f) {
    auto vars = std::make_shared<VarSet>(std::vector<std::string>{"xp", "yp"});
    MPoly rel = MPoly::parse(f, vars, "yp^2 + xp*yp + xp^3 + 1");
    return PresentedRing(f, vars, rel, "yp");
}

PresentedRing PresentedRing::curve_E_times_line(const Field& f) {
    auto vars = std::make_shared<VarSet>(std::vector<std::string>{"x", "y", "t"});
    MPoly rel = MPoly::parse(f, vars, "y^2 + y + x^3");
    return PresentedRing(f, vars, rel, "y");
}

RingDerivation::RingDerivation(const PresentedRing& ring, std::vector<MPoly> images)
    : ring_(&ring), images_(std::move(images)) {
    if (images_.size() != ring.vars()->size())
        throw ConstraintError("RingDerivation: one image per generator required");
    for (auto& im : images_)
        im = ring.reduce(im);
}

MPoly RingDerivation::apply(const MPoly& f) const {
    MPoly acc = MPoly::zero(ring_->field(), ring_->vars());
    for (size_t i = 0; i < images_.size(); ++i)
        acc = acc + f.partial(ring_->vars()->name(i)) * images_[i];
    return ring_->reduce(acc);
}

bool RingDerivation::is_zero() const {
    for (const auto& im : images_)
        if (!im.is_zero())
            return false;
    return true;
}

bool derivation_well_defined(const RingDerivation& d, const PresentedRing& ring) {
    if (!ring.has_relation())
        return true;
    MPoly acc = MPoly::zero(ring.field(), ring.vars());
    for (size_t i = 0; i < ring.vars()->size(); ++i)
        acc = acc + ring.relation().partial(ring.vars()->name(i)) * d.images()[i];
    return ring.reduce(acc).is_zero();
}

RingDerivation ring_derivation_p_power(const RingDerivation& d, const PresentedRing& ring,
                                       int p) {
    if (!derivation_well_defined(d, ring))
        throw ConstraintError("ring_derivation_p_power: input is not well defined");
    std::vector<MPoly> images;
    for (size_t i = 0; i < ring.vars()->size(); ++i) {
        MPoly x = ring.var(ring.vars()->name(i));
        for (int k = 0; k < p; ++k)
            x = d.apply(x);
        images.push_back(x);
    }
    RingDerivation power(ring, std::move(images));
    if (!derivation_well_defined(power, ring))
        throw ConsistencyError("ring_derivation_p_power: p-th power is not well defined");
    return power;
}

bool verify_product_field(const RingDerivation& d, const PresentedRing& ring, int p) {
    return ring_derivation_p_power(d, ring, p).is_zero();
}

} // namespace pfolia
