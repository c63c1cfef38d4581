#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "pfolia/gf.hpp"

namespace pfolia {

// Univariate polynomial over a fixed F_{p^e}, coefficients low degree first.
// The zero polynomial has an empty coefficient vector and degree() == -1;
// otherwise the leading coefficient is nonzero.  All arithmetic is exact.
class Poly {
public:
    explicit Poly(const Field& f) : f_(&f) {}
    Poly(const Field& f, std::vector<uint8_t> coeffs);
    Poly(const Field& f, std::initializer_list<int> coeffs);

    static Poly zero(const Field& f) { return Poly(f); }
    static Poly constant(const Field& f, uint8_t c);
    static Poly t(const Field& f) { return Poly(f, {0, 1}); }
    // c * t^k
    static Poly monomial(const Field& f, uint8_t c, int k);

    const Field& field() const { return *f_; }
    int degree() const { return int(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

    // coefficient of t^k (0 beyond the degree)
    uint8_t coeff(int k) const { return (k >= 0 && k < int(c_.size())) ? c_[k] : 0; }
    uint8_t leading() const { return c_.empty() ? 0 : c_.back(); }
    const std::vector<uint8_t>& coeffs() const { return c_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly scaled(uint8_t c) const;
    Poly pow(int n) const;

    bool operator==(const Poly& o) const { return f_ == o.f_ && c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // division with remainder; the divisor must be nonzero
    struct DivRem;
    DivRem divrem(const Poly& d) const;
    // exact division; throws ConsistencyError if the remainder is nonzero
    Poly exact_div(const Poly& d) const;

    Poly derivative() const;
    Poly monic() const;

    uint8_t eval(uint8_t x) const;
    // evaluation in an extension of the coefficient field (coefficients are
    // carried along the canonical embedding, which is only defined from F_p)
    Fq eval(const Fq& x) const;
    Poly compose(const Poly& g) const; // this(g(t))

    // coefficient reversal t -> 1/t cleared to degree bound n >= degree():
    // returns sum_k coeff(k) t^(n-k)
    Poly reverse(int n) const;

    std::string to_string(const std::string& var = "t") const;

private:
    void trim();

    const Field* f_;
    std::vector<uint8_t> c_;
};

struct Poly::DivRem {
    Poly quot, rem;
};

// Monic gcd by the Euclidean algorithm; gcd(0,0) is defined to be 0 so that
// saturation predicates on the zero derivation fail instead of crashing.
Poly poly_gcd(const Poly& f, const Poly& g);

// Formal derivative (the product rule holds exactly; p-th powers die).
inline Poly poly_derivative(const Poly& f) {
    return f.derivative();
}

} // namespace pfolia
