#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "pfolia/gf.hpp"

namespace pfolia {

// Ordered list of indeterminate names shared by a family of polynomials.
class VarSet {
public:
    explicit VarSet(std::vector<std::string> names);

    size_t size() const { return names_.size(); }
    const std::string& name(size_t i) const { return names_[i]; }
    int index(const std::string& name) const; // -1 if absent

    bool operator==(const VarSet& o) const { return names_ == o.names_; }

private:
    std::vector<std::string> names_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

// Sparse multivariate polynomial over the prime field F_p in the variables of
// a shared VarSet.  Terms are kept in a map ordered by descending lex exponent
// (earlier variables are more significant), with no zero coefficients, so two
// polynomials are equal iff their representations are identical: the map IS
// the canonical sorted-term normal form.
class MPoly {
public:
    using Exp = std::vector<uint8_t>;

    struct LexGreater {
        bool operator()(const Exp& a, const Exp& b) const;
    };
    using Terms = std::map<Exp, uint8_t, LexGreater>;

    MPoly(const Field& f, VarSetPtr vars);

    static MPoly zero(const Field& f, VarSetPtr vars) { return MPoly(f, vars); }
    static MPoly constant(const Field& f, VarSetPtr vars, long c);
    static MPoly var(const Field& f, VarSetPtr vars, const std::string& name);
    static MPoly term(const Field& f, VarSetPtr vars, uint8_t c, Exp e);

    // Parses "+-*^()" expressions over integers and variable names, e.g.
    // "a0*b1 + 2*a1^3*b0".  Unknown names throw ConstraintError.
    static MPoly parse(const Field& f, VarSetPtr vars, const std::string& expr);

    const Field& field() const { return *f_; }
    const VarSetPtr& vars() const { return vars_; }
    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    size_t term_count() const { return t_.size(); }

    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly operator-() const;
    MPoly scaled(uint8_t c) const;
    MPoly pow(int n) const;

    bool operator==(const MPoly& o) const;
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    MPoly partial(const std::string& name) const;
    MPoly subst(const std::string& name, const MPoly& value) const;

    // Evaluation at a point over F_{p^e} (same characteristic); coefficients
    // ride along the canonical embedding F_p -> F_{p^e}.
    Fq eval(const Field& ext, const std::vector<uint8_t>& point) const;

    int degree_in(const std::string& name) const;

    // Identity-map cleanup kept as an explicit operation: returns *this with
    // the representation invariants re-asserted.
    MPoly normalized() const;

    std::string to_string() const;

private:
    void add_term(const Exp& e, uint8_t c);

    const Field* f_; // prime field
    VarSetPtr vars_;
    Terms t_;
};

} // namespace pfolia
