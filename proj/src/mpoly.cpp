#include "pfolia/mpoly.hpp"

#include <cctype>

namespace pfolia {

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
    for (size_t i = 0; i < names_.size(); ++i)
        for (size_t j = i + 1; j < names_.size(); ++j)
            if (names_[i] == names_[j])
                throw ConstraintError("VarSet: duplicate variable " + names_[i]);
}

int VarSet::index(const std::string& name) const {
    for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name)
            return int(i);
    return -1;
}

bool MPoly::LexGreater::operator()(const Exp& a, const Exp& b) const {
    return a > b; // vector lexicographic, earlier variables more significant
}

MPoly::MPoly(const Field& f, VarSetPtr vars) : f_(&f), vars_(std::move(vars)) {
    if (f.e() != 1)
        throw ConstraintError("MPoly: coefficients must live in a prime field");
    if (!vars_)
        throw ConstraintError("MPoly: null variable set");
}

MPoly MPoly::constant(const Field& f, VarSetPtr vars, long c) {
    MPoly r(f, std::move(vars));
    uint8_t v = f.scalar(c);
    if (v != 0)
        r.t_.emplace(Exp(r.vars_->size(), 0), v);
    return r;
}

MPoly MPoly::var(const Field& f, VarSetPtr vars, const std::string& name) {
    MPoly r(f, std::move(vars));
    int i = r.vars_->index(name);
    if (i < 0)
        throw ConstraintError("MPoly: unknown variable " + name);
    Exp e(r.vars_->size(), 0);
    e[i] = 1;
    r.t_.emplace(std::move(e), uint8_t(1));
    return r;
}

MPoly MPoly::term(const Field& f, VarSetPtr vars, uint8_t c, Exp e) {
    MPoly r(f, std::move(vars));
    if (e.size() != r.vars_->size())
        throw ConstraintError("MPoly::term: exponent arity mismatch");
    if (c % f.p() != 0)
        r.t_.emplace(std::move(e), uint8_t(c % f.p()));
    return r;
}

void MPoly::add_term(const Exp& e, uint8_t c) {
    if (c == 0)
        return;
    auto it = t_.find(e);
    if (it == t_.end()) {
        t_.emplace(e, c);
    } else {
        it->second = f_->add(it->second, c);
        if (it->second == 0)
            t_.erase(it);
    }
}

namespace {
void check_compat(const MPoly& a, const MPoly& b) {
    if (&a.field() != &b.field() || !(*a.vars() == *b.vars()))
        throw FieldMismatchError("MPoly: operands over different rings");
}
} // namespace

MPoly MPoly::operator+(const MPoly& o) const {
    check_compat(*this, o);
    MPoly r(*this);
    for (const auto& [e, c] : o.t_)
        r.add_term(e, c);
    return r;
}

MPoly MPoly::operator-() const {
    MPoly r(*this);
    for (auto& [e, c] : r.t_)
        c = f_->neg(c);
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
    return *this + (-o);
}

MPoly MPoly::scaled(uint8_t c) const {
    MPoly r(*f_, vars_);
    uint8_t cc = uint8_t(c % f_->p());
    if (cc == 0)
        return r;
    for (const auto& [e, v] : t_)
        r.t_.emplace(e, f_->mul(v, cc));
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    check_compat(*this, o);
    MPoly r(*f_, vars_);
    for (const auto& [ea, ca] : t_)
        for (const auto& [eb, cb] : o.t_) {
            Exp e(ea.size());
            for (size_t i = 0; i < e.size(); ++i)
                e[i] = uint8_t(ea[i] + eb[i]);
            r.add_term(e, f_->mul(ca, cb));
        }
    return r;
}

MPoly MPoly::pow(int n) const {
    MPoly r = MPoly::constant(*f_, vars_, 1);
    MPoly x = *this;
    while (n > 0) {
        if (n & 1)
            r = r * x;
        x = x * x;
        n >>= 1;
    }
    return r;
}

bool MPoly::operator==(const MPoly& o) const {
    return f_ == o.f_ && *vars_ == *o.vars_ && t_ == o.t_;
}

MPoly MPoly::partial(const std::string& name) const {
    int i = vars_->index(name);
    if (i < 0)
        throw ConstraintError("MPoly::partial: unknown variable " + name);
    MPoly r(*f_, vars_);
    for (const auto& [e, c] : t_) {
        if (e[i] == 0)
            continue;
        uint8_t nc = f_->mul(c, f_->scalar(e[i]));
        if (nc == 0)
            continue;
        Exp ne = e;
        ne[i] -= 1;
        r.add_term(ne, nc);
    }
    return r;
}

MPoly MPoly::subst(const std::string& name, const MPoly& value) const {
    check_compat(*this, value);
    int i = vars_->index(name);
    if (i < 0)
        throw ConstraintError("MPoly::subst: unknown variable " + name);
    MPoly r(*f_, vars_);
    for (const auto& [e, c] : t_) {
        Exp ne = e;
        int k = ne[i];
        ne[i] = 0;
        MPoly part = MPoly::term(*f_, vars_, c, ne) * value.pow(k);
        r = r + part;
    }
    return r;
}

Fq MPoly::eval(const Field& ext, const std::vector<uint8_t>& point) const {
    if (ext.p() != f_->p())
        throw FieldMismatchError("MPoly::eval: characteristic mismatch");
    if (point.size() != vars_->size())
        throw ConstraintError("MPoly::eval: point arity mismatch");
    Fq acc(ext, 0);
    for (const auto& [e, c] : t_) {
        Fq term(ext, c); // scalars embed as themselves
        for (size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k)
                term = term * Fq(ext, point[i]);
        acc = acc + term;
    }
    return acc;
}

int MPoly::degree_in(const std::string& name) const {
    int i = vars_->index(name);
    if (i < 0)
        throw ConstraintError("MPoly::degree_in: unknown variable " + name);
    int d = 0;
    for (const auto& [e, c] : t_)
        d = std::max(d, int(e[i]));
    return d;
}

MPoly MPoly::normalized() const {
    MPoly r(*f_, vars_);
    for (const auto& [e, c] : t_)
        r.add_term(e, c);
    return r;
}

std::string MPoly::to_string() const {
    if (t_.empty())
        return "0";
    std::string s;
    for (const auto& [e, c] : t_) {
        if (!s.empty())
            s += " + ";
        bool wrote = false;
        if (c != 1) {
            s += std::to_string(int(c));
            wrote = true;
        }
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (wrote)
                s += "*";
            s += vars_->name(i);
            if (e[i] > 1)
                s += "^" + std::to_string(int(e[i]));
            wrote = true;
        }
        if (!wrote)
            s += "1";
    }
    return s;
}

// ---------------------------------------------------------------------------
// expression parser: expr := term (('+'|'-') term)*
//                    term := factor ('*' factor)*
//                    factor := atom ('^' uint)?
//                    atom := uint | name | '(' expr ')' | '-' atom

namespace {

struct Parser {
    const Field& f;
    VarSetPtr vars;
    const std::string& s;
    size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(uint8_t(s[pos])))
            ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw ConstraintError("MPoly::parse: " + what + " at position " + std::to_string(pos) +
                              " in \"" + s + "\"");
    }

    MPoly expr() {
        MPoly acc = term();
        for (;;) {
            if (eat('+'))
                acc = acc + term();
            else if (eat('-'))
                acc = acc - term();
            else
                return acc;
        }
    }
    MPoly term() {
        MPoly acc = factor();
        for (;;) {
            skip();
            if (eat('*')) {
                acc = acc * factor();
            } else if (pos < s.size() && (std::isalpha(uint8_t(s[pos])) || s[pos] == '(')) {
                acc = acc * factor(); // juxtaposition
            } else {
                return acc;
            }
        }
    }
    MPoly factor() {
        MPoly base = atom();
        if (eat('^')) {
            skip();
            if (pos >= s.size() || !std::isdigit(uint8_t(s[pos])))
                fail("expected exponent");
            int n = 0;
            while (pos < s.size() && std::isdigit(uint8_t(s[pos])))
                n = n * 10 + (s[pos++] - '0');
            return base.pow(n);
        }
        return base;
    }
    MPoly atom() {
        skip();
        if (pos >= s.size())
            fail("unexpected end of input");
        if (eat('(')) {
            MPoly inner = expr();
            if (!eat(')'))
                fail("expected ')'");
            return inner;
        }
        if (s[pos] == '-') {
            ++pos;
            return -atom();
        }
        if (std::isdigit(uint8_t(s[pos]))) {
            long n = 0;
            while (pos < s.size() && std::isdigit(uint8_t(s[pos])))
                n = n * 10 + (s[pos++] - '0');
            return MPoly::constant(f, vars, n);
        }
        if (std::isalpha(uint8_t(s[pos]))) {
            std::string name;
            while (pos < s.size() && (std::isalnum(uint8_t(s[pos])) || s[pos] == '_' || s[pos] == '\''))
                name += s[pos++];
            return MPoly::var(f, vars, name);
        }
        fail("unexpected character");
    }
};

} // namespace

MPoly MPoly::parse(const Field& f, VarSetPtr vars, const std::string& expr) {
    Parser p{f, std::move(vars), expr};
    MPoly r = p.expr();
    p.skip();
    if (p.pos != expr.size())
        p.fail("trailing input");
    return r;
}

} // namespace pfolia
