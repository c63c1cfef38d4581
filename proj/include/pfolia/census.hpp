#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "pfolia/tables.hpp"

namespace pfolia {

inline constexpr const char* kCensusSchema = "pfolia.census.v1";

struct CensusFilter {
    bool p_closed = false;
    bool saturated = false;
    bool inseparable = false;

    std::string to_string() const;
};

struct CensusRecord {
    std::vector<uint8_t> coeffs; // canonical field indices, a.. b.. c..
    FoliationReport report;      // matched_rows filled in
    bool sigma_invariant = false; // t -> t+1 substitution fixes D
    bool anomaly = false; // p-closed, saturated, inseparable, yet matches no row
};

struct CensusResult {
    int p = 0, e = 1;
    LieType lie = LieType::Superspecial;
    CensusFilter filter;
    uint64_t total_scanned = 0;
    uint64_t anomaly_count = 0;
    // bucket key "separability|rows" over every scanned tuple
    std::map<std::string, uint64_t> buckets;
    std::vector<CensusRecord> records; // tuples passing the filter, lex order
};

// Visits every degree-bounded coefficient tuple over F_{p^e} once, in
// lexicographic order of the canonical field representation, evaluating the
// full foliation report and the table match for each.  The scan partitions
// into contiguous index ranges per worker and merges in order, so the output
// is identical for any worker count.
CensusResult enumerate_foliations(int p, int e, LieType lie, const CensusFilter& filter,
                                  int workers = 1);

// Stable machine-readable emission; byte-identical for identical inputs.
std::string emit_csv(const CensusResult& r);
nlohmann::ordered_json emit_json(const CensusResult& r);

// JSON forms of the verification reports (shared by the CLI and tests).
nlohmann::ordered_json to_json(const SymbolicReport& r);
nlohmann::ordered_json to_json(const ExhaustiveReport& r);

} // namespace pfolia
