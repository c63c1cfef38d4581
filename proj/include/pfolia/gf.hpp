#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pfolia/errors.hpp"

namespace pfolia {

// Exact arithmetic in F_{p^e} for p in {2,3} and e <= 4.
//
// Elements are stored as an index in 0..q-1.  The index encodes the
// coordinates of the element in the polynomial basis 1, g, g^2, ... of
// F_p[g]/(m(g)): index = d0 + d1*p + d2*p^2 + ..., so the representation is
// canonical and equality of elements is equality of indices.  Indices of the
// scalars 0..p-1 are the scalars themselves, which gives the canonical
// embedding F_p -> F_{p^e}.
//
// One fixed irreducible modulus is hard-coded per (p, e), so indices mean the
// same element in every run.  All operation tables are precomputed; fields are
// created once and handed out by reference.
class Field {
public:
    static const Field& get(int p, int e);

    int p() const { return p_; }
    int e() const { return e_; }
    int q() const { return q_; }

    // Modulus digits, low degree first, including the leading 1 (empty for e=1).
    const std::vector<uint8_t>& modulus() const { return modulus_; }

    uint8_t add(uint8_t a, uint8_t b) const { return add_[idx(a, b)]; }
    uint8_t sub(uint8_t a, uint8_t b) const { return add_[idx(a, neg_[b])]; }
    uint8_t neg(uint8_t a) const { return neg_[a]; }
    uint8_t mul(uint8_t a, uint8_t b) const { return mul_[idx(a, b)]; }
    uint8_t inv(uint8_t a) const;
    uint8_t div(uint8_t a, uint8_t b) const { return mul(a, inv(b)); }
    uint8_t frobenius(uint8_t a) const { return frob_[a]; }
    uint8_t pow(uint8_t a, long n) const;

    // Scalar c in 0..p-1 viewed as an element (canonical prime-field embedding).
    uint8_t scalar(long c) const;

    std::string to_string(uint8_t a) const;
    std::string name() const; // "F_2", "F_9", ...

    bool operator==(const Field& other) const { return this == &other; }

private:
    Field(int p, int e);

    size_t idx(uint8_t a, uint8_t b) const { return size_t(a) * q_ + b; }

    int p_, e_, q_;
    std::vector<uint8_t> modulus_;
    std::vector<uint8_t> add_, mul_, neg_, inv_, frob_;
};

// A field element tagged with its field.  Operations between elements of
// different fields throw FieldMismatchError.
class Fq {
public:
    Fq() : f_(nullptr), v_(0) {}
    Fq(const Field& f, uint8_t v) : f_(&f), v_(v) {}

    const Field& field() const;
    uint8_t value() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    Fq operator+(const Fq& o) const { return Fq(same(o), f_->add(v_, o.v_)); }
    Fq operator-(const Fq& o) const { return Fq(same(o), f_->sub(v_, o.v_)); }
    Fq operator*(const Fq& o) const { return Fq(same(o), f_->mul(v_, o.v_)); }
    Fq operator/(const Fq& o) const { return Fq(same(o), f_->div(v_, o.v_)); }
    Fq operator-() const { return Fq(field(), f_->neg(v_)); }
    Fq inv() const { return Fq(field(), f_->inv(v_)); }
    Fq frobenius() const { return Fq(field(), f_->frobenius(v_)); }
    Fq pow(long n) const { return Fq(field(), f_->pow(v_, n)); }

    bool operator==(const Fq& o) const { return f_ == o.f_ && v_ == o.v_; }
    bool operator!=(const Fq& o) const { return !(*this == o); }

    std::string to_string() const { return field().to_string(v_); }

private:
    const Field& same(const Fq& o) const;

    const Field* f_;
    uint8_t v_;
};

} // namespace pfolia
