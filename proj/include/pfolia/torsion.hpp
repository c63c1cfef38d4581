#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace pfolia {

// Characteristic class of the ground field for torsion queries: the stated
// divisors only distinguish p = 2, p = 3 and everything else.
enum class PChar { Two, Three, Generic };

PChar pchar_of(long p); // 2 -> Two, 3 -> Three, other primes -> Generic
std::string pchar_name(PChar c);

// One classification case with its certified torsion-order divisor of K_X.
// C1 entries additionally carry the group-scheme data of the bielliptic list
// (group G = G0 x Z/n with the fixed-scheme constraints).
struct TorsionCase {
    std::string id;     // "C1.a1", "C2.1a", "C3", "A", "B", or letter "C1.a"
    std::string family; // "A", "B", "C1", "C2", "C3"
    char letter = 0;    // a..d for C1 entries
    int n = 0;          // order of the cyclic factor (C1 only): 2, 3, 4, 6
    std::string group;  // descriptor text, e.g. "Z/2 x Z/2"
    std::string note;   // j-invariant and characteristic annotations
    bool admits_p2 = true, admits_p3 = true, admits_generic = true;
    bool open_bound = false; // divisor not stated (case B)
};

// The 14-entry bielliptic group list a1..a7, b1..b3, c1..c3, d plus the
// aggregate cases A, B, C2.*, C3.
const std::vector<TorsionCase>& torsion_catalog();

bool case_admissible(const TorsionCase& c, PChar p);

// The certified divisor of the torsion order for an admissible (case, p);
// nullopt when the bound is open (case B).  Inadmissible pairs throw
// ConstraintError, as do unknown case ids.
std::optional<long> torsion_bound(const std::string& case_id, PChar p);

// lcm of every admissible (case, p) bound; checked to divide 2^4 * 3^3 = 432
// (a violation would mean the catalog is inconsistent and throws).
long global_lcm();

// C1 sub-list filtered by characteristic and/or cyclic order.
std::vector<TorsionCase> bielliptic_catalog(std::optional<PChar> p = std::nullopt,
                                            std::optional<int> n = std::nullopt);

nlohmann::ordered_json catalog_json(std::optional<PChar> p = std::nullopt,
                                    std::optional<int> n = std::nullopt);

} // namespace pfolia
