#include "pfolia/poly.hpp"

namespace pfolia {

Poly::Poly(const Field& f, std::vector<uint8_t> coeffs) : f_(&f), c_(std::move(coeffs)) {
    for (uint8_t c : c_)
        if (c >= f.q())
            throw ConstraintError("Poly: coefficient index out of range for " + f.name());
    trim();
}

Poly::Poly(const Field& f, std::initializer_list<int> coeffs) : f_(&f) {
    c_.reserve(coeffs.size());
    for (int c : coeffs) {
        // negative literals denote scalar negation in the prime subfield
        int r = c >= 0 ? c % f.q() : (c % f.p() + f.p()) % f.p();
        c_.push_back(uint8_t(r));
    }
    trim();
}

Poly Poly::constant(const Field& f, uint8_t c) {
    Poly r(f);
    if (c != 0)
        r.c_ = {c};
    return r;
}

Poly Poly::monomial(const Field& f, uint8_t c, int k) {
    Poly r(f);
    if (c != 0) {
        r.c_.assign(k + 1, 0);
        r.c_[k] = c;
    }
    return r;
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

namespace {
const Field& same_field(const Poly& a, const Poly& b) {
    if (&a.field() != &b.field())
        throw FieldMismatchError("Poly: operands over different fields (" + a.field().name() +
                                 " vs " + b.field().name() + ")");
    return a.field();
}
} // namespace

Poly Poly::operator+(const Poly& o) const {
    const Field& f = same_field(*this, o);
    Poly r(f);
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < r.c_.size(); ++i)
        r.c_[i] = f.add(coeff(int(i)), o.coeff(int(i)));
    r.trim();
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    return *this + (-o);
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& c : r.c_)
        c = f_->neg(c);
    return r;
}

Poly Poly::scaled(uint8_t c) const {
    Poly r(field());
    if (c == 0)
        return r;
    r.c_ = c_;
    for (auto& x : r.c_)
        x = f_->mul(x, c);
    r.trim();
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    const Field& f = same_field(*this, o);
    if (is_zero() || o.is_zero())
        return Poly(f);
    Poly r(f);
    r.c_.assign(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0)
            continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            r.c_[i + j] = f.add(r.c_[i + j], f.mul(c_[i], o.c_[j]));
    }
    r.trim();
    return r;
}

Poly Poly::pow(int n) const {
    Poly r = Poly::constant(field(), 1);
    Poly x = *this;
    while (n > 0) {
        if (n & 1)
            r = r * x;
        x = x * x;
        n >>= 1;
    }
    return r;
}

Poly::DivRem Poly::divrem(const Poly& d) const {
    const Field& f = same_field(*this, d);
    if (d.is_zero())
        throw DegenerateInputError("Poly::divrem: division by the zero polynomial");
    Poly q(f), r(*this);
    const uint8_t lead_inv = f.inv(d.leading());
    if (degree() >= d.degree())
        q.c_.assign(degree() - d.degree() + 1, 0);
    while (!r.is_zero() && r.degree() >= d.degree()) {
        int k = r.degree() - d.degree();
        uint8_t c = f.mul(r.leading(), lead_inv);
        q.c_[k] = c;
        for (int i = 0; i <= d.degree(); ++i)
            r.c_[i + k] = f.sub(r.c_[i + k], f.mul(c, d.c_[i]));
        r.trim();
    }
    q.trim();
    return {q, r};
}

Poly Poly::exact_div(const Poly& d) const {
    auto qr = divrem(d);
    if (!qr.rem.is_zero())
        throw ConsistencyError("Poly::exact_div: division is not exact");
    return qr.quot;
}

Poly Poly::derivative() const {
    Poly r(field());
    if (degree() < 1)
        return r;
    r.c_.assign(c_.size() - 1, 0);
    for (size_t k = 1; k < c_.size(); ++k)
        r.c_[k - 1] = f_->mul(c_[k], f_->scalar(long(k)));
    r.trim();
    return r;
}

Poly Poly::monic() const {
    if (is_zero())
        return *this;
    return scaled(f_->inv(leading()));
}

uint8_t Poly::eval(uint8_t x) const {
    uint8_t acc = 0;
    for (size_t i = c_.size(); i-- > 0;)
        acc = f_->add(f_->mul(acc, x), c_[i]);
    return acc;
}

Fq Poly::eval(const Fq& x) const {
    const Field& g = x.field();
    if (&g != f_ && (f_->e() != 1 || g.p() != f_->p()))
        throw FieldMismatchError("Poly::eval: can only evaluate across the F_p embedding");
    // prime-subfield indices coincide with their embedded values
    Fq acc(g, 0);
    for (size_t i = c_.size(); i-- > 0;)
        acc = acc * x + Fq(g, c_[i]);
    return acc;
}

Poly Poly::compose(const Poly& g) const {
    same_field(*this, g);
    Poly acc(field());
    for (size_t i = c_.size(); i-- > 0;)
        acc = acc * g + Poly::constant(field(), c_[i]);
    return acc;
}

Poly Poly::reverse(int n) const {
    if (n < degree())
        throw ConstraintError("Poly::reverse: bound below the degree");
    Poly r(field());
    if (is_zero())
        return r;
    r.c_.assign(n + 1, 0);
    for (int k = 0; k <= degree(); ++k)
        r.c_[n - k] = c_[k];
    r.trim();
    return r;
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero())
        return "0";
    std::string s;
    for (int k = degree(); k >= 0; --k) {
        uint8_t c = c_[k];
        if (c == 0)
            continue;
        if (!s.empty())
            s += "+";
        std::string cs = f_->to_string(c);
        if (k == 0) {
            s += cs;
        } else {
            if (c != 1)
                s += (f_->e() > 1 && c >= f_->p()) ? "(" + cs + ")*" : cs + "*";
            s += var;
            if (k > 1)
                s += "^" + std::to_string(k);
        }
    }
    return s;
}

Poly poly_gcd(const Poly& f, const Poly& g) {
    if (&f.field() != &g.field())
        throw FieldMismatchError("poly_gcd: operands over different fields");
    Poly a = f, b = g;
    while (!b.is_zero()) {
        Poly r = a.divrem(b).rem;
        a = b;
        b = r;
    }
    return a.monic(); // gcd(0,0) stays 0
}

} // namespace pfolia
