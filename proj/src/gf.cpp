#include "pfolia/gf.hpp"

#include <map>
#include <mutex>

namespace pfolia {

namespace {

// Fixed irreducible moduli, low degree first, leading coefficient included.
// One choice per (p, e); changing any of these changes every element index.
const std::vector<uint8_t>& modulus_for(int p, int e) {
    static const std::map<std::pair<int, int>, std::vector<uint8_t>> tab = {
        {{2, 2}, {1, 1, 1}},       // g^2 + g + 1
        {{2, 3}, {1, 1, 0, 1}},    // g^3 + g + 1
        {{2, 4}, {1, 1, 0, 0, 1}}, // g^4 + g + 1
        {{3, 2}, {1, 0, 1}},       // g^2 + 1
        {{3, 3}, {1, 2, 0, 1}},    // g^3 + 2g + 1
        {{3, 4}, {2, 1, 0, 0, 1}}, // g^4 + g + 2
    };
    static const std::vector<uint8_t> empty;
    if (e == 1)
        return empty;
    return tab.at({p, e});
}

std::vector<uint8_t> digits_of(int idx, int p, int e) {
    std::vector<uint8_t> d(e);
    for (int i = 0; i < e; ++i) {
        d[i] = uint8_t(idx % p);
        idx /= p;
    }
    return d;
}

int index_of(const std::vector<uint8_t>& d, int p, int e) {
    int idx = 0;
    for (int i = e - 1; i >= 0; --i)
        idx = idx * p + d[i];
    return idx;
}

} // namespace

Field::Field(int p, int e) : p_(p), e_(e) {
    if ((p != 2 && p != 3) || e < 1 || e > 4)
        throw ConstraintError("Field: need p in {2,3} and 1 <= e <= 4");
    q_ = 1;
    for (int i = 0; i < e; ++i)
        q_ *= p;
    modulus_ = modulus_for(p, e);

    add_.resize(size_t(q_) * q_);
    mul_.resize(size_t(q_) * q_);
    neg_.resize(q_);
    inv_.resize(q_, 0);
    frob_.resize(q_);

    for (int a = 0; a < q_; ++a) {
        auto da = digits_of(a, p, e);
        std::vector<uint8_t> dn(e);
        for (int i = 0; i < e; ++i)
            dn[i] = uint8_t((p - da[i]) % p);
        neg_[a] = uint8_t(index_of(dn, p, e));
        for (int b = 0; b < q_; ++b) {
            auto db = digits_of(b, p, e);
            std::vector<uint8_t> ds(e);
            for (int i = 0; i < e; ++i)
                ds[i] = uint8_t((da[i] + db[i]) % p);
            add_[idx(uint8_t(a), uint8_t(b))] = uint8_t(index_of(ds, p, e));

            // multiply as polynomials in g, then reduce by the modulus
            std::vector<int> prod(2 * e - 1, 0);
            for (int i = 0; i < e; ++i)
                for (int j = 0; j < e; ++j)
                    prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
            for (int d = 2 * e - 2; d >= e; --d) {
                int c = prod[d];
                if (c == 0)
                    continue;
                prod[d] = 0;
                // g^d = g^(d-e) * (-(m_0 + ... + m_{e-1} g^{e-1}))
                for (int i = 0; i < e; ++i)
                    prod[d - e + i] = (prod[d - e + i] + c * (p - modulus_[i])) % p;
            }
            std::vector<uint8_t> dp(e);
            for (int i = 0; i < e; ++i)
                dp[i] = uint8_t(prod[i]);
            mul_[idx(uint8_t(a), uint8_t(b))] = uint8_t(index_of(dp, p, e));
        }
    }
    for (int a = 1; a < q_; ++a)
        for (int b = 1; b < q_; ++b)
            if (mul_[idx(uint8_t(a), uint8_t(b))] == 1) {
                inv_[a] = uint8_t(b);
                break;
            }
    for (int a = 0; a < q_; ++a) {
        uint8_t r = uint8_t(a);
        for (int i = 1; i < p; ++i)
            r = mul_[idx(r, uint8_t(a))];
        frob_[a] = r;
    }
}

const Field& Field::get(int p, int e) {
    static std::mutex m;
    static std::map<std::pair<int, int>, const Field*> cache;
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find({p, e});
    if (it == cache.end())
        it = cache.emplace(std::make_pair(p, e), new Field(p, e)).first;
    return *it->second;
}

uint8_t Field::inv(uint8_t a) const {
    if (a == 0)
        throw std::domain_error("Field::inv: division by zero in " + name());
    return inv_[a];
}

uint8_t Field::pow(uint8_t a, long n) const {
    if (n < 0) {
        a = inv(a);
        n = -n;
    }
    uint8_t r = 1, x = a;
    while (n > 0) {
        if (n & 1)
            r = mul(r, x);
        x = mul(x, x);
        n >>= 1;
    }
    return r;
}

uint8_t Field::scalar(long c) const {
    long r = c % p_;
    if (r < 0)
        r += p_;
    return uint8_t(r);
}

std::string Field::to_string(uint8_t a) const {
    if (e_ == 1 || a < p_)
        return std::to_string(int(a));
    // polynomial in the generator g, low degree last: e.g. "g2+g+1"
    auto d = digits_of(a, p_, e_);
    std::string s;
    for (int i = e_ - 1; i >= 0; --i) {
        if (d[i] == 0)
            continue;
        if (!s.empty())
            s += "+";
        if (i == 0) {
            s += std::to_string(int(d[i]));
        } else {
            if (d[i] != 1)
                s += std::to_string(int(d[i]));
            s += (i == 1) ? "g" : "g" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

std::string Field::name() const {
    return "F_" + std::to_string(q_);
}

const Field& Fq::field() const {
    if (!f_)
        throw ConstraintError("Fq: uninitialized element");
    return *f_;
}

const Field& Fq::same(const Fq& o) const {
    if (f_ != o.f_)
        throw FieldMismatchError("Fq: operands live in different fields (" + field().name() +
                                 " vs " + o.field().name() + ")");
    return field();
}

} // namespace pfolia
