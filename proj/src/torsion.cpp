#include "pfolia/torsion.hpp"

#include <array>
#include <map>
#include <numeric>

#include "pfolia/errors.hpp"

namespace pfolia {

using nlohmann::ordered_json;

PChar pchar_of(long p) {
    if (p == 2)
        return PChar::Two;
    if (p == 3)
        return PChar::Three;
    if (p < 2)
        throw ConstraintError("pchar_of: not a characteristic: " + std::to_string(p));
    return PChar::Generic;
}

std::string pchar_name(PChar c) {
    switch (c) {
    case PChar::Two:
        return "2";
    case PChar::Three:
        return "3";
    case PChar::Generic:
        return "generic";
    }
    throw ConstraintError("pchar_name: bad value");
}

namespace {

TorsionCase c1(const std::string& sub, char letter, int n, const std::string& group,
               const std::string& note, bool p2, bool p3, bool gen) {
    TorsionCase c;
    c.id = "C1." + sub;
    c.family = "C1";
    c.letter = letter;
    c.n = n;
    c.group = group;
    c.note = note;
    c.admits_p2 = p2;
    c.admits_p3 = p3;
    c.admits_generic = gen;
    return c;
}

TorsionCase plain(const std::string& id, const std::string& family, const std::string& note,
                  bool p2, bool p3, bool gen, bool open = false) {
    TorsionCase c;
    c.id = id;
    c.family = family;
    c.note = note;
    c.admits_p2 = p2;
    c.admits_p3 = p3;
    c.admits_generic = gen;
    c.open_bound = open;
    return c;
}

} // namespace

const std::vector<TorsionCase>& torsion_catalog() {
    static const std::vector<TorsionCase> cases = {
        plain("A", "A", "q = 3: X is an abelian threefold, K_X ~ 0", true, true, true),
        plain("B", "B", "q = 1: no uniform torsion bound is stated", true, true, true,
              /*open=*/true),

        c1("a1", 'a', 2, "Z/2", "A has p-rank >= 1 if p = 2", true, true, true),
        c1("a2", 'a', 2, "Z/2 x Z/2", "A and F ordinary if p = 2", true, true, true),
        c1("a3", 'a', 2, "(Z/2)^2 x Z/2", "p != 2", false, true, true),
        c1("a4", 'a', 2, "mu_2 x Z/2", "p = 2; A of p-rank >= 1, F ordinary", true, false, false),
        c1("a5", 'a', 2, "Z/2 x mu_2 x Z/2", "p = 2; A and F ordinary", true, false, false),
        c1("a6", 'a', 2, "alpha_2 x Z/2", "p = 2; A of p-rank 1, F supersingular", true, false,
           false),
        c1("a7", 'a', 2, "M_2 x Z/2",
           "p = 2; M_2 the non-split extension of alpha_2 by alpha_2", true, false, false),
        c1("b1", 'b', 3, "Z/3", "j(F) = 0", true, true, true),
        c1("b2", 'b', 3, "(Z/3)^2", "j(F) = 0, p != 3", true, false, true),
        c1("b3", 'b', 3, "alpha_3 x Z/3", "j(F) = 0, p = 3; F supersingular", false, true, false),
        c1("c1", 'c', 4, "Z/4", "j(F) = 12^3", true, true, true),
        c1("c2", 'c', 4, "Z/2 x Z/4", "j(F) = 12^3, p != 2", false, true, true),
        c1("c3", 'c', 4, "alpha_2 x Z/4", "j(F) = 0, p = 2; F supersingular", true, false, false),
        c1("d", 'd', 6, "Z/6", "j(F) = 0", true, true, true),

        plain("C2.1a", "C2", "divisor (p+1)p, p = 2 or 3", true, true, false),
        plain("C2.1b", "C2", "divisor p^3, p = 2 or 3", true, true, false),
        plain("C2.2a", "C2", "divisor 4*2^2, p = 2", true, false, false),
        plain("C2.2b", "C2", "divisor 2^4, p = 2", true, false, false),
        plain("C3", "C3", "divisor 3 for p = 3, 4 for p = 2", true, true, false),
    };
    return cases;
}

bool case_admissible(const TorsionCase& c, PChar p) {
    switch (p) {
    case PChar::Two:
        return c.admits_p2;
    case PChar::Three:
        return c.admits_p3;
    case PChar::Generic:
        return c.admits_generic;
    }
    return false;
}

namespace {

long pval(PChar p) {
    return p == PChar::Two ? 2 : 3; // only for formulas restricted to p in {2,3}
}

// the stated divisor for one admissible catalog entry
std::optional<long> entry_bound(const TorsionCase& c, PChar p) {
    if (c.open_bound)
        return std::nullopt;
    if (c.family == "A")
        return 1;
    if (c.family == "C1") {
        static const std::map<char, std::array<long, 3>> table = {
            // {generic, p=2, p=3}
            {'a', {2, 1, 2}},
            {'b', {3, 3, 1}},
            {'c', {4, 1, 4}},
            {'d', {6, 3, 2}},
        };
        const auto& row = table.at(c.letter);
        if (p == PChar::Generic)
            return row[0];
        return p == PChar::Two ? row[1] : row[2];
    }
    if (c.id == "C2.1a")
        return (pval(p) + 1) * pval(p);
    if (c.id == "C2.1b")
        return pval(p) * pval(p) * pval(p);
    if (c.id == "C2.2a")
        return 4 * 2 * 2;
    if (c.id == "C2.2b")
        return 2 * 2 * 2 * 2;
    if (c.id == "C3")
        return p == PChar::Two ? 4 : 3;
    throw ConstraintError("entry_bound: no divisor rule for " + c.id);
}

// "C1.b" means every C1 entry with letter b; "C3.1", "C3.2a", "C3.2b" are the
// sub-cases sharing the C3 divisor; everything else must match exactly.
std::vector<const TorsionCase*> resolve_case(const std::string& id) {
    std::vector<const TorsionCase*> out;
    for (const auto& c : torsion_catalog())
        if (c.id == id)
            out.push_back(&c);
    if (!out.empty())
        return out;
    if (id.size() == 4 && id.rfind("C1.", 0) == 0 && id[3] >= 'a' && id[3] <= 'd') {
        for (const auto& c : torsion_catalog())
            if (c.family == "C1" && c.letter == id[3])
                out.push_back(&c);
        return out;
    }
    if (id == "C1") {
        for (const auto& c : torsion_catalog())
            if (c.family == "C1")
                out.push_back(&c);
        return out;
    }
    if (id == "C3.1" || id == "C3.2a" || id == "C3.2b") {
        for (const auto& c : torsion_catalog())
            if (c.id == "C3")
                out.push_back(&c);
        return out;
    }
    return out;
}

} // namespace

std::optional<long> torsion_bound(const std::string& case_id, PChar p) {
    auto cases = resolve_case(case_id);
    if (cases.empty())
        throw ConstraintError("torsion_bound: unknown case " + case_id);
    std::optional<long> bound;
    bool any_admissible = false, open = false;
    for (const auto* c : cases) {
        if (!case_admissible(*c, p))
            continue;
        any_admissible = true;
        if (c->open_bound) {
            open = true;
            continue;
        }
        auto b = entry_bound(*c, p);
        if (bound && *bound != *b)
            throw ConstraintError("torsion_bound: " + case_id +
                                  " is ambiguous at p=" + pchar_name(p) +
                                  " (sub-cases carry different divisors)");
        bound = b;
    }
    if (!any_admissible)
        throw ConstraintError("torsion_bound: case " + case_id + " is not admissible at p=" +
                              pchar_name(p));
    if (open && !bound)
        return std::nullopt;
    return bound;
}

long global_lcm() {
    long acc = 1;
    for (const auto& c : torsion_catalog())
        for (PChar p : {PChar::Two, PChar::Three, PChar::Generic}) {
            if (!case_admissible(c, p) || c.open_bound)
                continue;
            auto b = entry_bound(c, p);
            acc = std::lcm(acc, *b);
        }
    if (432 % acc != 0)
        throw ConsistencyError("global_lcm: catalog bound " + std::to_string(acc) +
                               " does not divide 432");
    return acc;
}

std::vector<TorsionCase> bielliptic_catalog(std::optional<PChar> p, std::optional<int> n) {
    std::vector<TorsionCase> out;
    for (const auto& c : torsion_catalog()) {
        if (c.family != "C1")
            continue;
        if (p && !case_admissible(c, *p))
            continue;
        if (n && c.n != *n)
            continue;
        out.push_back(c);
    }
    return out;
}

ordered_json catalog_json(std::optional<PChar> p, std::optional<int> n) {
    ordered_json j;
    j["schema"] = "pfolia.torsion.v1";
    ordered_json arr = ordered_json::array();
    for (const auto& c : torsion_catalog()) {
        if (c.family == "C1") {
            if (p && !case_admissible(c, *p))
                continue;
            if (n && c.n != *n)
                continue;
        } else if (p || n) {
            if (n)
                continue; // group-order filter only makes sense for C1
            if (p && !case_admissible(c, *p))
                continue;
        }
        ordered_json cj;
        cj["id"] = c.id;
        cj["family"] = c.family;
        if (c.family == "C1") {
            cj["letter"] = std::string(1, c.letter);
            cj["n"] = c.n;
            cj["group"] = c.group;
        }
        cj["note"] = c.note;
        ordered_json bounds = ordered_json::object();
        for (PChar pc : {PChar::Two, PChar::Three, PChar::Generic}) {
            if (!case_admissible(c, pc))
                continue;
            if (c.open_bound) {
                bounds[pchar_name(pc)] = "open";
            } else {
                bounds[pchar_name(pc)] = *entry_bound(c, pc);
            }
        }
        cj["torsion_divisor"] = bounds;
        arr.push_back(std::move(cj));
    }
    j["cases"] = std::move(arr);
    return j;
}

} // namespace pfolia
