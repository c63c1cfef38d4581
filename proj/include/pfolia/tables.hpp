#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pfolia/foliation.hpp"
#include "pfolia/mpoly.hpp"

namespace pfolia {

// One coefficient-constraint row: a conjunction of nonvanishing conditions
// (each group demands at least one member nonzero), vanishing conditions, and
// c-value equations lhs = rhs / prod(den), where den names a product of
// declared symbols (the Delta discriminants or single variables) that the
// row's nonvanishing conditions make invertible.
struct CEquation {
    MPoly lhs;
    MPoly rhs;
    std::map<std::string, int> den;
};

struct TableRow {
    std::string id;
    std::vector<std::vector<MPoly>> nonzero; // AND over groups, OR inside
    std::vector<MPoly> zero;
    std::vector<CEquation> equations;
    std::vector<MPoly> implied_zero; // cleared pairwise consistency of duplicate lhs
};

struct TableSet {
    int p = 0;
    LieType lie = LieType::Superspecial;
    VarSetPtr vars;
    std::map<std::string, MPoly> symbols; // Delta expansions + variables
    std::vector<TableRow> rows;
};

// Coefficient variables of the classified families: (a0,a1,b0,b1,c0..c3) for
// p = 3 and (a0,a1,a2,b0,b1,b2,c0..c4) for p = 2.
VarSetPtr table_vars(int p);
size_t table_arity(int p);

// Built-in row data (transcribed tables); the JSON text it is parsed from is
// exposed so the CLI can round-trip or replace it.
const std::string& builtin_table_json();
const TableSet& table_for(int p, LieType lie);

// Replaces the built-in tables with rows parsed from JSON text (used by the
// CLI's --table-data); throws ConstraintError on malformed data.
void load_tables_from_json(const std::string& json_text);
void reset_builtin_tables();

// Point evaluation: does some row accept this coefficient tuple over F_{p^e}?
bool table_conditions(int p, LieType lie, const Field& fq, const std::vector<uint8_t>& coeffs);
std::vector<std::string> matching_rows(int p, LieType lie, const Field& fq,
                                       const std::vector<uint8_t>& coeffs);

// The quoted ground-truth predicate (club for p = 3, spade for p = 2),
// computed from the derivation/foliation operations only:
//   p = 3: Delta != 0 and D^3 = lambda D;
//   p = 2: D^2 = lambda D, one of Delta01/Delta12/Delta02 nonzero,
//          (a0,b0,c0) != 0 and (a2,b2,c4) != 0.
bool ground_truth(int p, LieType lie, const Field& fq, const std::vector<uint8_t>& coeffs);

Derivation derivation_from_coeffs(int p, const Field& fq, const std::vector<uint8_t>& coeffs);

// --------------------------------------------------------------------------

struct SymbolicRowVerdict {
    std::string row;
    std::array<bool, 3> minor_ok{false, false, false};
    std::array<std::string, 3> residual; // nonzero remainders, for diagnostics
    bool ok() const { return minor_ok[0] && minor_ok[1] && minor_ok[2]; }
};

struct SymbolicReport {
    int p;
    LieType lie;
    std::vector<SymbolicRowVerdict> rows;
    bool ok() const;
};

// Substitutes each row's c-values into the three proportionality minors of
// [(u,v,w); (D^p components)] over F_p[a.,b.][Delta^-1] and reduces; a row
// passes only if all three minors reduce to the zero polynomial.
SymbolicReport verify_table_symbolic(int p, LieType lie);

struct ExhaustiveReport {
    int p;
    LieType lie;
    int e = 1;
    uint64_t scanned = 0;
    uint64_t truth_count = 0;
    uint64_t table_count = 0;
    // symmetric-difference witnesses (coefficient tuples)
    std::vector<std::vector<uint8_t>> table_only;
    std::vector<std::vector<uint8_t>> truth_only;
    bool ok() const { return table_only.empty() && truth_only.empty(); }
};

// Scans every coefficient tuple over F_{p^e} (e <= 2) and compares the row
// predicate against the quoted ground truth; set equality is the verdict.
ExhaustiveReport verify_table_exhaustive(int p, LieType lie, int e);

} // namespace pfolia
