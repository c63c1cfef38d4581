#include "pfolia/derivation.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "pfolia/errors.hpp"

namespace pfolia {

LieLaw lie_law(LieType t) {
    switch (t) {
    case LieType::Superspecial:
        return {0, 0, 0};
    case LieType::SupersingularNotSS:
        return {0, 1, 0};
    case LieType::PRankOne:
        return {1, 0, 0};
    case LieType::Ordinary:
        return {1, 0, 1};
    }
    throw ConstraintError("lie_law: bad LieType");
}

std::string lie_type_name(LieType t) {
    switch (t) {
    case LieType::Superspecial:
        return "superspecial";
    case LieType::SupersingularNotSS:
        return "supersingular-not-ss";
    case LieType::PRankOne:
        return "p-rank-one";
    case LieType::Ordinary:
        return "ordinary";
    }
    throw ConstraintError("lie_type_name: bad LieType");
}

LieType lie_type_from_name(const std::string& name) {
    for (LieType t : kAllLieTypes)
        if (lie_type_name(t) == name)
            return t;
    throw ConstraintError("unknown Lie type: " + name);
}

Derivation::Derivation(Poly u, Poly v, Poly w, Chart chart)
    : u_(std::move(u)), v_(std::move(v)), w_(std::move(w)), chart_(chart) {
    if (&u_.field() != &v_.field() || &u_.field() != &w_.field())
        throw FieldMismatchError("Derivation: components over different fields");
}

namespace {
void check_same(const Derivation& a, const Derivation& b) {
    if (&a.field() != &b.field())
        throw FieldMismatchError("Derivation: operands over different fields");
    if (a.chart() != b.chart())
        throw ChartError("Derivation: operands on different charts");
}
} // namespace

Derivation Derivation::operator+(const Derivation& o) const {
    check_same(*this, o);
    return Derivation(u_ + o.u_, v_ + o.v_, w_ + o.w_, chart_);
}

Derivation Derivation::operator-(const Derivation& o) const {
    check_same(*this, o);
    return Derivation(u_ - o.u_, v_ - o.v_, w_ - o.w_, chart_);
}

Derivation Derivation::scaled(const Poly& f) const {
    return Derivation(u_ * f, v_ * f, w_ * f, chart_);
}

bool Derivation::operator==(const Derivation& o) const {
    return chart_ == o.chart_ && u_ == o.u_ && v_ == o.v_ && w_ == o.w_;
}

std::string Derivation::to_string() const {
    const std::string var = chart_ == Chart::T ? "t" : "s";
    std::string s = "(" + u_.to_string(var) + ")*alpha + (" + v_.to_string(var) + ")*beta + (" +
                    w_.to_string(var) + ")*d/d" + var;
    return s;
}

Derivation bracket(const Derivation& a, const Derivation& b) {
    check_same(a, b);
    Poly cu = a.w() * b.u().derivative() - b.w() * a.u().derivative();
    Poly cv = a.w() * b.v().derivative() - b.w() * a.v().derivative();
    Poly cw = a.w() * b.w().derivative() - b.w() * a.w().derivative();
    return Derivation(cu, cv, cw, a.chart());
}

Derivation p_power(const Derivation& d, LieType type) {
    if (d.chart() != Chart::T)
        throw ChartError("p_power: convert to the t-chart first");
    const Field& f = d.field();
    const LieLaw law = lie_law(type);
    const Poly &u = d.u(), &v = d.v(), &w = d.w();
    const Poly du = u.derivative(), dv = v.derivative(), dw = w.derivative();
    Poly up = u.pow(f.p());
    Poly vp = v.pow(f.p());
    Poly eu(f), ev(f), ew(f);
    if (f.p() == 2) {
        eu = w * du;
        ev = w * dv;
        ew = w * dw;
    } else {
        Poly wdw = w * dw;
        eu = wdw * du;
        ev = wdw * dv;
        ew = w * dw * dw + w * w * dw.derivative();
    }
    if (law.aa)
        eu = eu + up;
    if (law.ab)
        ev = ev + up;
    if (law.bb)
        ev = ev + vp;
    return Derivation(eu, ev, ew, Chart::T);
}

// --------------------------------------------------------------------------
// oracle: operators sum_{i,j,k < p} f_{ijk}(t) alpha^i beta^j dt^k

namespace {

struct Mono {
    int i, j, k;
    bool operator<(const Mono& o) const {
        return std::tie(i, j, k) < std::tie(o.i, o.j, o.k);
    }
};

using Op = std::map<Mono, Poly>;

void op_insert(Op& op, const LieLaw& law, int p, Mono m, const Poly& c, int max_deg) {
    if (c.is_zero())
        return;
    if (c.degree() > max_deg)
        throw ConsistencyError("p_power_oracle: coefficient degree exceeded max_deg");
    // reduce alpha^p -> law image, beta^p -> law image, dt^p -> 0
    if (m.k >= p)
        return;
    if (m.i >= p) {
        Mono base{m.i - p, m.j, m.k};
        if (law.aa)
            op_insert(op, law, p, Mono{base.i + 1, base.j, base.k}, c, max_deg);
        if (law.ab)
            op_insert(op, law, p, Mono{base.i, base.j + 1, base.k}, c, max_deg);
        return;
    }
    if (m.j >= p) {
        if (law.bb)
            op_insert(op, law, p, Mono{m.i, m.j - p + 1, m.k}, c, max_deg);
        return;
    }
    auto it = op.find(m);
    if (it == op.end()) {
        op.emplace(m, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero())
            op.erase(it);
    }
}

// binomial coefficient mod p for small arguments
uint8_t binom_mod(const Field& f, int n, int r) {
    long b = 1;
    for (int i = 0; i < r; ++i)
        b = b * (n - i) / (i + 1);
    return f.scalar(b);
}

// compose a*b: only dt fails to commute with k[t]:
// dt^k g = sum_r C(k,r) g^(r) dt^(k-r)
Op op_mul(const Op& a, const Op& b, const LieLaw& law, int p, int max_deg) {
    Op r;
    for (const auto& [ma, fa] : a) {
        for (const auto& [mb, fb] : b) {
            Poly g = fb;
            for (int rr = 0; rr <= ma.k; ++rr) {
                if (g.is_zero())
                    break;
                uint8_t c = binom_mod(fa.field(), ma.k, rr);
                if (c != 0) {
                    Poly coeff = fa * g.scaled(c);
                    op_insert(r, law, p, Mono{ma.i + mb.i, ma.j + mb.j, ma.k - rr + mb.k}, coeff,
                              max_deg);
                }
                g = g.derivative();
            }
        }
    }
    return r;
}

} // namespace

Derivation p_power_oracle(const Derivation& d, LieType type, int max_deg) {
    if (d.chart() != Chart::T)
        throw ChartError("p_power_oracle: convert to the t-chart first");
    const Field& f = d.field();
    const int p = f.p();
    const LieLaw law = lie_law(type);

    Op D;
    op_insert(D, law, p, Mono{1, 0, 0}, d.u(), max_deg);
    op_insert(D, law, p, Mono{0, 1, 0}, d.v(), max_deg);
    op_insert(D, law, p, Mono{0, 0, 1}, d.w(), max_deg);

    Op acc = D;
    for (int step = 1; step < p; ++step)
        acc = op_mul(D, acc, law, p, max_deg);

    Poly u(f), v(f), w(f);
    for (const auto& [m, c] : acc) {
        if (m.i + m.j + m.k != 1)
            throw ConsistencyError("p_power_oracle: non-derivation term alpha^" +
                                   std::to_string(m.i) + " beta^" + std::to_string(m.j) + " dt^" +
                                   std::to_string(m.k) + " survived reduction");
        if (m.i == 1)
            u = c;
        else if (m.j == 1)
            v = c;
        else
            w = c;
    }
    return Derivation(u, v, w, Chart::T);
}

ChartImage chart_transform(const Derivation& d) {
    if (d.is_zero())
        throw DegenerateInputError("chart_transform: zero derivation");
    // u(1/s) = s^(-du) rev(u); w(1/s) dt = s^(2-dw) rev(w) ds
    const int du = d.u().degree(), dv = d.v().degree(), dw = d.w().degree();
    int n = 0;
    if (du >= 0)
        n = std::max(n, du);
    if (dv >= 0)
        n = std::max(n, dv);
    if (dw >= 0)
        n = std::max(n, dw - 2);
    const Field& f = d.field();
    Poly u(f), v(f), w(f);
    if (du >= 0)
        u = d.u().reverse(n); // s^(n-du) * rev(u)
    if (dv >= 0)
        v = d.v().reverse(n);
    if (dw >= 0)
        w = d.w().reverse(n + 2);
    Chart target = d.chart() == Chart::T ? Chart::S : Chart::T;
    return {Derivation(u, v, w, target), n};
}

int twist_bound(int p) {
    if (p == 2)
        return 2;
    if (p == 3)
        return 1;
    throw ConstraintError("twist_bound: p must be 2 or 3");
}

bool degree_bounds_ok(const Derivation& d) {
    if (d.chart() != Chart::T)
        throw ChartError("degree_bounds_ok: t-chart only");
    const int i = twist_bound(d.p());
    return d.u().degree() <= i && d.v().degree() <= i && d.w().degree() <= i + 2;
}

bool sigma_shift_invariant(const Derivation& d) {
    const Field& f = d.field();
    Poly t_plus_1(f, {1, 1});
    return d.u().compose(t_plus_1) == d.u() && d.v().compose(t_plus_1) == d.v() &&
           d.w().compose(t_plus_1) == d.w();
}

} // namespace pfolia
