#include "pfolia/tables.hpp"

#include <algorithm>
#include <mutex>

#include <json.hpp>

namespace pfolia {

using nlohmann::json;

VarSetPtr table_vars(int p) {
    static const VarSetPtr v2 = std::make_shared<VarSet>(std::vector<std::string>{
        "a0", "a1", "a2", "b0", "b1", "b2", "c0", "c1", "c2", "c3", "c4"});
    static const VarSetPtr v3 = std::make_shared<VarSet>(
        std::vector<std::string>{"a0", "a1", "b0", "b1", "c0", "c1", "c2", "c3"});
    if (p == 2)
        return v2;
    if (p == 3)
        return v3;
    throw ConstraintError("table_vars: p must be 2 or 3");
}

size_t table_arity(int p) {
    return table_vars(p)->size();
}

namespace {

// Delta discriminants plus every plain variable, usable in expressions and as
// denominator symbols.
std::map<std::string, MPoly> symbol_table(int p) {
    const Field& f = Field::get(p, 1);
    VarSetPtr vars = table_vars(p);
    std::map<std::string, MPoly> syms;
    auto add = [&](const std::string& n, const std::string& expr) {
        syms.emplace(n, MPoly::parse(f, vars, expr));
    };
    if (p == 2) {
        add("D01", "a0*b1 + a1*b0");
        add("D12", "a1*b2 + a2*b1");
        add("D02", "a0*b2 + a2*b0");
    } else {
        add("D", "a1*b0 - a0*b1");
    }
    for (size_t i = 0; i < vars->size(); ++i)
        syms.emplace(vars->name(i), MPoly::var(f, vars, vars->name(i)));
    return syms;
}

// Parse over the variable set extended by the Delta names, then eliminate the
// Delta coordinates by substituting their expansions.
MPoly parse_with_symbols(int p, const std::string& expr) {
    const Field& f = Field::get(p, 1);
    VarSetPtr base = table_vars(p);
    std::vector<std::string> ext_names;
    for (size_t i = 0; i < base->size(); ++i)
        ext_names.push_back(base->name(i));
    std::vector<std::string> deltas =
        p == 2 ? std::vector<std::string>{"D01", "D12", "D02"} : std::vector<std::string>{"D"};
    for (const auto& d : deltas)
        ext_names.push_back(d);
    VarSetPtr ext = std::make_shared<VarSet>(ext_names);

    MPoly raw = MPoly::parse(f, ext, expr);
    auto syms = symbol_table(p);
    for (const auto& d : deltas) {
        // lift the expansion to the extended set
        MPoly lifted(f, ext);
        for (const auto& [e, c] : syms.at(d).terms()) {
            MPoly::Exp le(ext->size(), 0);
            std::copy(e.begin(), e.end(), le.begin());
            lifted = lifted + MPoly::term(f, ext, c, le);
        }
        raw = raw.subst(d, lifted);
    }
    // project down: delta coordinates must now be unused
    MPoly out(f, base);
    for (const auto& [e, c] : raw.terms()) {
        for (size_t i = base->size(); i < ext->size(); ++i)
            if (e[i] != 0)
                throw ConstraintError("table expression kept a raw Delta power: " + expr);
        MPoly::Exp be(e.begin(), e.begin() + base->size());
        out = out + MPoly::term(f, base, c, be);
    }
    return out;
}

// chart swap t -> 1/t on coefficient indices
std::vector<int> mirror_permutation(int p) {
    if (p == 2) // a0<->a2, b0<->b2, c0<->c4, c1<->c3
        return {2, 1, 0, 5, 4, 3, 10, 9, 8, 7, 6};
    return {1, 0, 3, 2, 7, 6, 5, 4};
}

MPoly mirror_mpoly(int p, const MPoly& x) {
    auto perm = mirror_permutation(p);
    MPoly out(x.field(), x.vars());
    for (const auto& [e, c] : x.terms()) {
        MPoly::Exp me(e.size(), 0);
        for (size_t i = 0; i < e.size(); ++i)
            me[perm[i]] = e[i];
        out = out + MPoly::term(x.field(), x.vars(), c, me);
    }
    return out;
}

std::string mirror_symbol(int p, const std::string& name) {
    if (p == 2) {
        if (name == "D01")
            return "D12";
        if (name == "D12")
            return "D01";
        if (name == "D02")
            return "D02";
    } else {
        if (name == "D")
            return "D";
    }
    VarSetPtr vars = table_vars(p);
    int i = vars->index(name);
    if (i < 0)
        throw ConstraintError("mirror_symbol: unknown symbol " + name);
    return vars->name(mirror_permutation(p)[i]);
}

TableRow mirror_row(int p, const TableRow& src, const std::string& id) {
    TableRow r;
    r.id = id;
    for (const auto& grp : src.nonzero) {
        std::vector<MPoly> g;
        for (const auto& m : grp)
            g.push_back(mirror_mpoly(p, m));
        r.nonzero.push_back(std::move(g));
    }
    for (const auto& z : src.zero)
        r.zero.push_back(mirror_mpoly(p, z));
    for (const auto& eq : src.equations) {
        std::map<std::string, int> den;
        for (const auto& [name, pow] : eq.den)
            den[mirror_symbol(p, name)] += pow;
        r.equations.push_back(
            CEquation{mirror_mpoly(p, eq.lhs), mirror_mpoly(p, eq.rhs), std::move(den)});
    }
    for (const auto& z : src.implied_zero)
        r.implied_zero.push_back(mirror_mpoly(p, z));
    return r;
}

MPoly den_expansion(const TableSet& ts, const std::map<std::string, int>& den) {
    MPoly d = MPoly::constant(Field::get(ts.p, 1), ts.vars, 1);
    for (const auto& [name, pow] : den) {
        auto it = ts.symbols.find(name);
        if (it == ts.symbols.end())
            throw ConstraintError("unknown denominator symbol " + name);
        d = d * it->second.pow(pow);
    }
    return d;
}

void validate_row(const TableSet& ts, const TableRow& row) {
    // every denominator symbol must be pinned nonzero by a singleton group
    for (const auto& eq : row.equations)
        for (const auto& [name, pow] : eq.den) {
            auto it = ts.symbols.find(name);
            if (it == ts.symbols.end())
                throw ConstraintError("row " + row.id + ": unknown denominator " + name);
            bool pinned = false;
            for (const auto& grp : row.nonzero)
                if (grp.size() == 1 && grp[0] == it->second)
                    pinned = true;
            if (!pinned)
                throw ConstraintError("row " + row.id + ": denominator " + name +
                                      " not pinned nonzero by a singleton condition");
        }
}

void finalize_row(const TableSet& ts, TableRow& row) {
    // duplicate-lhs equations induce cleared consistency polynomials
    for (size_t i = 0; i < row.equations.size(); ++i)
        for (size_t j = i + 1; j < row.equations.size(); ++j) {
            const auto &e1 = row.equations[i], &e2 = row.equations[j];
            if (!(e1.lhs == e2.lhs))
                continue;
            MPoly d1 = den_expansion(ts, e1.den), d2 = den_expansion(ts, e2.den);
            MPoly cons = e1.rhs * d2 - e2.rhs * d1;
            if (!cons.is_zero())
                row.implied_zero.push_back(cons);
        }
    validate_row(ts, row);
}

struct Registry {
    std::map<std::pair<int, int>, TableSet> sets; // (p, lie index)
};

Registry load_registry(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& ex) {
        throw ConstraintError(std::string("table data: JSON parse error: ") + ex.what());
    }
    if (!doc.is_object() || doc.value("schema", "") != "pfolia.tables.v1")
        throw ConstraintError("table data: missing or unknown schema tag");
    Registry reg;
    for (const auto& tj : doc.at("tables")) {
        TableSet ts;
        ts.p = tj.at("p").get<int>();
        if (ts.p != 2 && ts.p != 3)
            throw ConstraintError("table data: p must be 2 or 3");
        ts.lie = lie_type_from_name(tj.at("lie").get<std::string>());
        ts.vars = table_vars(ts.p);
        ts.symbols = symbol_table(ts.p);

        std::map<std::string, size_t> by_id;
        for (const auto& rj : tj.at("rows")) {
            if (rj.contains("mirror_of")) {
                const std::string src = rj.at("mirror_of").get<std::string>();
                auto it = by_id.find(src);
                if (it == by_id.end())
                    throw ConstraintError("table data: mirror_of unknown row " + src);
                TableRow m = mirror_row(ts.p, ts.rows[it->second],
                                        rj.at("id").get<std::string>());
                validate_row(ts, m);
                by_id[m.id] = ts.rows.size();
                ts.rows.push_back(std::move(m));
                continue;
            }
            TableRow row;
            row.id = rj.at("id").get<std::string>();
            for (const auto& gj : rj.at("nonzero")) {
                std::vector<MPoly> grp;
                for (const auto& sj : gj)
                    grp.push_back(parse_with_symbols(ts.p, sj.get<std::string>()));
                row.nonzero.push_back(std::move(grp));
            }
            for (const auto& zj : rj.at("zero"))
                row.zero.push_back(parse_with_symbols(ts.p, zj.get<std::string>()));
            for (const auto& ej : rj.at("eqs")) {
                std::map<std::string, int> den;
                for (auto it = ej.at("den").begin(); it != ej.at("den").end(); ++it)
                    den[it.key()] = it.value().get<int>();
                row.equations.push_back(
                    CEquation{parse_with_symbols(ts.p, ej.at("lhs").get<std::string>()),
                              parse_with_symbols(ts.p, ej.at("rhs").get<std::string>()),
                              std::move(den)});
            }
            finalize_row(ts, row);
            by_id[row.id] = ts.rows.size();
            ts.rows.push_back(std::move(row));
        }
        reg.sets[{ts.p, int(ts.lie)}] = std::move(ts);
    }
    for (int p : {2, 3})
        for (LieType t : kAllLieTypes)
            if (!reg.sets.count({p, int(t)}))
                throw ConstraintError("table data: missing table for p=" + std::to_string(p) +
                                      " lie=" + lie_type_name(t));
    return reg;
}

std::mutex registry_mutex;
Registry* current_registry() {
    static Registry reg = load_registry(builtin_table_json());
    return &reg;
}

} // namespace

const TableSet& table_for(int p, LieType lie) {
    std::lock_guard<std::mutex> lock(registry_mutex);
    return current_registry()->sets.at({p, int(lie)});
}

void load_tables_from_json(const std::string& text) {
    Registry next = load_registry(text); // parse first, swap only on success
    std::lock_guard<std::mutex> lock(registry_mutex);
    *current_registry() = std::move(next);
}

void reset_builtin_tables() {
    Registry next = load_registry(builtin_table_json());
    std::lock_guard<std::mutex> lock(registry_mutex);
    *current_registry() = std::move(next);
}

// ---------------------------------------------------------------------------
// point evaluation

namespace {

bool row_matches(const TableSet& ts, const TableRow& row, const Field& fq,
                 const std::vector<uint8_t>& coeffs) {
    for (const auto& grp : row.nonzero) {
        bool any = false;
        for (const auto& m : grp)
            if (!m.eval(fq, coeffs).is_zero()) {
                any = true;
                break;
            }
        if (!any)
            return false;
    }
    for (const auto& z : row.zero)
        if (!z.eval(fq, coeffs).is_zero())
            return false;
    for (const auto& eq : row.equations) {
        Fq den(fq, 1);
        for (const auto& [name, pow] : eq.den)
            den = den * ts.symbols.at(name).eval(fq, coeffs).pow(pow);
        if (den.is_zero())
            throw ConsistencyError("row " + row.id + ": denominator vanished despite side conditions");
        if (eq.lhs.eval(fq, coeffs) * den != eq.rhs.eval(fq, coeffs))
            return false;
    }
    return true;
}

} // namespace

std::vector<std::string> matching_rows(int p, LieType lie, const Field& fq,
                                       const std::vector<uint8_t>& coeffs) {
    if (fq.p() != p)
        throw FieldMismatchError("matching_rows: field characteristic mismatch");
    if (coeffs.size() != table_arity(p))
        throw ConstraintError("matching_rows: expected " + std::to_string(table_arity(p)) +
                              " coefficients, got " + std::to_string(coeffs.size()));
    const TableSet& ts = table_for(p, lie);
    std::vector<std::string> out;
    for (const auto& row : ts.rows)
        if (row_matches(ts, row, fq, coeffs))
            out.push_back(row.id);
    return out;
}

bool table_conditions(int p, LieType lie, const Field& fq, const std::vector<uint8_t>& coeffs) {
    if (fq.p() != p)
        throw FieldMismatchError("table_conditions: field characteristic mismatch");
    if (coeffs.size() != table_arity(p))
        throw ConstraintError("table_conditions: expected " + std::to_string(table_arity(p)) +
                              " coefficients, got " + std::to_string(coeffs.size()));
    const TableSet& ts = table_for(p, lie);
    for (const auto& row : ts.rows)
        if (row_matches(ts, row, fq, coeffs))
            return true;
    return false;
}

Derivation derivation_from_coeffs(int p, const Field& fq, const std::vector<uint8_t>& coeffs) {
    if (coeffs.size() != table_arity(p))
        throw ConstraintError("derivation_from_coeffs: wrong arity");
    const int i = twist_bound(p);
    auto slice = [&](size_t from, size_t len) {
        return Poly(fq, std::vector<uint8_t>(coeffs.begin() + from, coeffs.begin() + from + len));
    };
    Poly u = slice(0, i + 1);
    Poly v = slice(i + 1, i + 1);
    Poly w = slice(2 * (i + 1), i + 3);
    return Derivation(u, v, w, Chart::T);
}

bool ground_truth(int p, LieType lie, const Field& fq, const std::vector<uint8_t>& coeffs) {
    if (coeffs.size() != table_arity(p))
        throw ConstraintError("ground_truth: wrong arity");
    auto F = [&](uint8_t x) { return Fq(fq, x); };
    if (p == 3) {
        // Delta = a1 b0 - a0 b1 != 0
        Fq delta = F(coeffs[1]) * F(coeffs[2]) - F(coeffs[0]) * F(coeffs[3]);
        if (delta.is_zero())
            return false;
    } else {
        Fq d01 = F(coeffs[0]) * F(coeffs[4]) + F(coeffs[1]) * F(coeffs[3]);
        Fq d12 = F(coeffs[1]) * F(coeffs[5]) + F(coeffs[2]) * F(coeffs[4]);
        Fq d02 = F(coeffs[0]) * F(coeffs[5]) + F(coeffs[2]) * F(coeffs[3]);
        if (d01.is_zero() && d12.is_zero() && d02.is_zero())
            return false;
        if (coeffs[0] == 0 && coeffs[3] == 0 && coeffs[6] == 0) // (a0,b0,c0)
            return false;
        if (coeffs[2] == 0 && coeffs[5] == 0 && coeffs[10] == 0) // (a2,b2,c4)
            return false;
    }
    Derivation d = derivation_from_coeffs(p, fq, coeffs);
    if (d.is_zero())
        return false;
    return is_p_closed(d, lie).first;
}

ExhaustiveReport verify_table_exhaustive(int p, LieType lie, int e) {
    if (e < 1 || e > 2)
        throw ConstraintError("verify_table_exhaustive: e must be 1 or 2");
    const Field& fq = Field::get(p, e);
    const size_t arity = table_arity(p);
    ExhaustiveReport rep;
    rep.p = p;
    rep.lie = lie;
    rep.e = e;

    std::vector<uint8_t> coeffs(arity, 0);
    const uint64_t total = [&] {
        uint64_t n = 1;
        for (size_t k = 0; k < arity; ++k)
            n *= uint64_t(fq.q());
        return n;
    }();
    constexpr size_t kWitnessCap = 1000;
    for (uint64_t n = 0; n < total; ++n) {
        uint64_t x = n;
        for (size_t k = arity; k-- > 0;) {
            coeffs[k] = uint8_t(x % fq.q());
            x /= fq.q();
        }
        const bool truth = ground_truth(p, lie, fq, coeffs);
        const bool table = table_conditions(p, lie, fq, coeffs);
        rep.scanned++;
        if (truth)
            rep.truth_count++;
        if (table)
            rep.table_count++;
        if (table && !truth && rep.table_only.size() < kWitnessCap)
            rep.table_only.push_back(coeffs);
        if (truth && !table && rep.truth_only.size() < kWitnessCap)
            rep.truth_only.push_back(coeffs);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// symbolic verification

namespace {

// dense polynomial in t with MPoly coefficients
struct TPoly {
    std::vector<MPoly> c;
};

TPoly tp_add(const TPoly& a, const TPoly& b) {
    TPoly r;
    size_t n = std::max(a.c.size(), b.c.size());
    for (size_t k = 0; k < n; ++k) {
        if (k < a.c.size() && k < b.c.size())
            r.c.push_back(a.c[k] + b.c[k]);
        else
            r.c.push_back(k < a.c.size() ? a.c[k] : b.c[k]);
    }
    return r;
}

TPoly tp_neg(const TPoly& a) {
    TPoly r;
    for (const auto& x : a.c)
        r.c.push_back(-x);
    return r;
}

TPoly tp_sub(const TPoly& a, const TPoly& b) {
    return tp_add(a, tp_neg(b));
}

TPoly tp_mul(const TPoly& a, const TPoly& b) {
    TPoly r;
    if (a.c.empty() || b.c.empty())
        return r;
    const MPoly z = MPoly::zero(a.c[0].field(), a.c[0].vars());
    r.c.assign(a.c.size() + b.c.size() - 1, z);
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    return r;
}

TPoly tp_derivative(const TPoly& a) {
    TPoly r;
    for (size_t k = 1; k < a.c.size(); ++k)
        r.c.push_back(a.c[k].scaled(uint8_t(k % a.c[k].field().p())));
    return r;
}

struct Rule {
    MPoly::Exp pivot;     // c-monomial being rewritten
    uint8_t pivot_coeff;  // its coefficient in the lhs
    MPoly replacement;    // pivot -> replacement / den, after moving lhs rest over
    MPoly den;            // expanded denominator polynomial
};

bool divides(const MPoly::Exp& m, const MPoly::Exp& e) {
    for (size_t i = 0; i < m.size(); ++i)
        if (m[i] > e[i])
            return false;
    return true;
}

bool any_divisible(const MPoly& n, const MPoly::Exp& pivot) {
    for (const auto& [e, c] : n.terms())
        if (divides(pivot, e))
            return true;
    return false;
}

// Eliminate every occurrence of the rule pivot in one batched step: splitting
// n = keep + hit and replacing hit/pivot at once keeps the denominator
// multiplication from duplicating not-yet-rewritten occurrences (term-at-a-
// time rewriting need not terminate).  The final zero test is unaffected by
// the cleared denominators, which are units in the localized ring.
MPoly apply_rule(MPoly n, const Rule& rule) {
    const Field& f = n.field();
    for (int round = 0; any_divisible(n, rule.pivot); ++round) {
        if (round > 64)
            throw ConsistencyError("apply_rule: pivot keeps re-appearing");
        MPoly keep(f, n.vars()), quo(f, n.vars());
        for (const auto& [e, coef] : n.terms()) {
            if (!divides(rule.pivot, e)) {
                keep = keep + MPoly::term(f, n.vars(), coef, e);
                continue;
            }
            MPoly::Exp rest = e;
            for (size_t i = 0; i < rest.size(); ++i)
                rest[i] -= rule.pivot[i];
            quo = quo + MPoly::term(f, n.vars(), f.mul(coef, f.inv(rule.pivot_coeff)), rest);
        }
        n = keep * rule.den + quo * rule.replacement;
    }
    return n;
}

MPoly apply_rules(MPoly n, const std::vector<Rule>& rules) {
    // A pass can in principle re-create an earlier pivot through a rule's
    // replacement, so sweep until stable (our tables settle in one pass).
    for (int pass = 0; pass < 16; ++pass) {
        bool hit = false;
        for (const auto& rule : rules) {
            if (!any_divisible(n, rule.pivot))
                continue;
            n = apply_rule(n, rule);
            hit = true;
        }
        if (!hit)
            return n;
    }
    throw ConsistencyError("apply_rules: rewriting did not stabilize");
}

// Multivariate division with remainder by the moduli (polynomials the row
// asserts to vanish); remainder zero certifies ideal membership.
MPoly reduce_by_moduli(MPoly n, const std::vector<MPoly>& moduli) {
    if (moduli.empty())
        return n;
    const Field& f = n.field();
    bool changed = true;
    while (changed && !n.is_zero()) {
        changed = false;
        for (const auto& [e, coef] : n.terms()) {
            for (const auto& v : moduli) {
                if (v.is_zero())
                    continue;
                const auto& lead = *v.terms().begin();
                if (!divides(lead.first, e))
                    continue;
                MPoly::Exp q = e;
                for (size_t i = 0; i < q.size(); ++i)
                    q[i] -= lead.first[i];
                MPoly quot =
                    MPoly::term(f, n.vars(), f.mul(coef, f.inv(lead.second)), q);
                n = n - quot * v;
                changed = true;
                break;
            }
            if (changed)
                break;
        }
    }
    return n;
}

// Buchberger closure of the vanishing ideal's generators, so that division
// with remainder decides ideal membership instead of depending on the
// reduction path.  The per-row ideals here are tiny; the caps are generous.
std::vector<MPoly> groebner_closure(std::vector<MPoly> gens) {
    std::vector<MPoly> basis;
    for (auto& g : gens)
        if (!g.is_zero())
            basis.push_back(g);
    std::vector<std::pair<size_t, size_t>> todo;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j)
            todo.emplace_back(i, j);
    size_t steps = 0;
    while (!todo.empty()) {
        if (++steps > 4000 || basis.size() > 200)
            throw ConsistencyError("groebner_closure: ideal closure exceeded caps");
        auto [i, j] = todo.back();
        todo.pop_back();
        const MPoly f = basis[i];
        const MPoly g = basis[j];
        const auto ltf = *f.terms().begin();
        const auto ltg = *g.terms().begin();
        MPoly::Exp lcm(ltf.first.size());
        for (size_t k = 0; k < lcm.size(); ++k)
            lcm[k] = std::max(ltf.first[k], ltg.first[k]);
        const Field& fld = f.field();
        MPoly::Exp qf = lcm, qg = lcm;
        for (size_t k = 0; k < lcm.size(); ++k) {
            qf[k] = uint8_t(qf[k] - ltf.first[k]);
            qg[k] = uint8_t(qg[k] - ltg.first[k]);
        }
        MPoly s = MPoly::term(fld, f.vars(), fld.inv(ltf.second), qf) * f -
                  MPoly::term(fld, f.vars(), fld.inv(ltg.second), qg) * g;
        s = reduce_by_moduli(s, basis);
        if (s.is_zero())
            continue;
        for (size_t k = 0; k < basis.size(); ++k)
            todo.emplace_back(k, basis.size());
        basis.push_back(std::move(s));
    }
    return basis;
}

std::vector<Rule> rules_for_row(const TableSet& ts, const TableRow& row) {
    std::vector<Rule> rules;
    std::vector<MPoly::Exp> seen;
    for (const auto& eq : row.equations) {
        if (eq.lhs.is_zero())
            throw ConstraintError("row " + row.id + ": equation with zero lhs");
        const auto& pivot = *eq.lhs.terms().begin(); // lex-greatest term
        if (std::find(seen.begin(), seen.end(), pivot.first) != seen.end())
            continue; // duplicate lhs: the consistency polynomial covers it
        seen.push_back(pivot.first);
        MPoly den = den_expansion(ts, eq.den);
        MPoly rest = eq.lhs - MPoly::term(eq.lhs.field(), eq.lhs.vars(), pivot.second, pivot.first);
        rules.push_back(Rule{pivot.first, pivot.second, eq.rhs - den * rest, den});
    }
    return rules;
}

// single-variable vanishing conditions become substitutions
std::vector<int> zero_variables(const TableSet& ts, const TableRow& row) {
    std::vector<int> out;
    for (const auto& z : row.zero) {
        if (z.term_count() != 1)
            continue;
        const auto& [e, c] = *z.terms().begin();
        int idx = -1;
        int total = 0;
        for (size_t i = 0; i < e.size(); ++i) {
            total += e[i];
            if (e[i] == 1)
                idx = int(i);
        }
        if (total == 1 && idx >= 0)
            out.push_back(idx);
    }
    return out;
}

} // namespace

bool SymbolicReport::ok() const {
    for (const auto& r : rows)
        if (!r.ok())
            return false;
    return true;
}

SymbolicReport verify_table_symbolic(int p, LieType lie) {
    const TableSet& ts = table_for(p, lie);
    const Field& f = Field::get(p, 1);
    const LieLaw law = lie_law(lie);
    const int i = twist_bound(p);

    SymbolicReport rep;
    rep.p = p;
    rep.lie = lie;

    for (const auto& row : ts.rows) {
        SymbolicRowVerdict verdict;
        verdict.row = row.id;

        auto zvars = zero_variables(ts, row);
        auto coeff_var = [&](const char* stem, int k) -> MPoly {
            std::string name = stem + std::to_string(k);
            MPoly m = MPoly::var(f, ts.vars, name);
            int idx = ts.vars->index(name);
            for (int z : zvars)
                if (z == idx)
                    return MPoly::zero(f, ts.vars);
            return m;
        };
        TPoly u, v, w;
        for (int k = 0; k <= i; ++k) {
            u.c.push_back(coeff_var("a", k));
            v.c.push_back(coeff_var("b", k));
        }
        for (int k = 0; k <= i + 2; ++k)
            w.c.push_back(coeff_var("c", k));

        TPoly du = tp_derivative(u), dv = tp_derivative(v), dw = tp_derivative(w);
        TPoly up = u, vp = v;
        for (int k = 1; k < p; ++k) {
            up = tp_mul(up, u);
            vp = tp_mul(vp, v);
        }
        TPoly eu, ev, ew1; // E_w = w * ew1
        if (p == 2) {
            eu = tp_mul(w, du);
            ev = tp_mul(w, dv);
            ew1 = dw;
        } else {
            TPoly wdw = tp_mul(w, dw);
            eu = tp_mul(wdw, du);
            ev = tp_mul(wdw, dv);
            ew1 = tp_add(tp_mul(dw, dw), tp_mul(w, tp_derivative(dw)));
        }
        if (law.aa)
            eu = tp_add(eu, up);
        if (law.ab)
            ev = tp_add(ev, up);
        if (law.bb)
            ev = tp_add(ev, vp);

        // factored minors: M_uw = w * (u*ew1 - eu), M_vw = w * (v*ew1 - ev)
        std::array<TPoly, 3> minors = {
            tp_sub(tp_mul(u, ev), tp_mul(v, eu)),
            tp_sub(tp_mul(u, ew1), eu),
            tp_sub(tp_mul(v, ew1), ev),
        };

        auto rules = rules_for_row(ts, row);
        std::vector<MPoly> moduli;
        {
            // single-variable vanishing conditions were substituted already;
            // everything else the row asserts to vanish reduces residuals
            for (const auto& z : row.zero) {
                bool is_subst = false;
                if (z.term_count() == 1) {
                    int total = 0;
                    for (auto ev : z.terms().begin()->first)
                        total += ev;
                    is_subst = total == 1;
                }
                if (!is_subst)
                    moduli.push_back(z);
            }
            for (const auto& z : row.implied_zero)
                moduli.push_back(z);
            moduli = groebner_closure(std::move(moduli));
        }

        // pinned units (singleton nonzero groups) allow saturation: a residual
        // R is zero on the row locus if S^k * R falls in the vanishing ideal
        // for an invertible S.  A not-all-zero group {S1..Sm} gives a sound
        // case split when every member certifies R.
        std::vector<MPoly> pinned;
        std::vector<std::vector<MPoly>> split_groups;
        for (const auto& grp : row.nonzero) {
            if (grp.size() == 1)
                pinned.push_back(grp[0]);
            else
                split_groups.push_back(grp);
        }
        std::vector<MPoly> units; // products of pinned symbols, up to 3 factors
        units.push_back(MPoly::constant(f, ts.vars, 1));
        {
            size_t lo = 0;
            for (int round = 0; round < 3; ++round) {
                size_t hi = units.size();
                for (size_t k = lo; k < hi; ++k)
                    for (const auto& s : pinned)
                        units.push_back(units[k] * s);
                lo = hi;
            }
        }
        auto in_ideal = [&](const MPoly& r) {
            for (const auto& u : units)
                if (reduce_by_moduli(r * u, moduli).is_zero())
                    return true;
            return false;
        };
        auto certify_zero = [&](const MPoly& r) {
            if (r.is_zero() || in_ideal(r))
                return true;
            for (const auto& grp : split_groups) {
                bool all = true;
                for (const auto& s : grp) {
                    bool member_ok = false;
                    MPoly sk = s;
                    for (int k = 1; k <= 3 && !member_ok; ++k, sk = sk * s)
                        member_ok = in_ideal(r * sk);
                    if (!member_ok) {
                        all = false;
                        break;
                    }
                }
                if (all)
                    return true;
            }
            return false;
        };

        for (int mi = 0; mi < 3; ++mi) {
            bool ok = true;
            std::string residual;
            for (const auto& coeff : minors[mi].c) {
                MPoly n = apply_rules(coeff, rules);
                n = reduce_by_moduli(n, moduli);
                if (!certify_zero(n)) {
                    ok = false;
                    residual = n.to_string();
                    break;
                }
            }
            verdict.minor_ok[mi] = ok;
            verdict.residual[mi] = residual;
        }
        rep.rows.push_back(std::move(verdict));
    }
    return rep;
}

} // namespace pfolia
