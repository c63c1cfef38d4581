#include <doctest.h>

#include <numeric>
#include <set>

#include "pfolia/torsion.hpp"
#include "pfolia/errors.hpp"

using namespace pfolia;

TEST_CASE("per-case bounds match the stated divisors") {
    CHECK(torsion_bound("C2.1a", PChar::Two) == 6);   // (p+1)p
    CHECK(torsion_bound("C2.1a", PChar::Three) == 12);
    CHECK(torsion_bound("C2.1b", PChar::Two) == 8);   // p^3
    CHECK(torsion_bound("C2.1b", PChar::Three) == 27);
    CHECK(torsion_bound("C2.2a", PChar::Two) == 16);  // 4 * 2^2
    CHECK(torsion_bound("C2.2b", PChar::Two) == 16);  // 2^4
    CHECK(torsion_bound("C3", PChar::Two) == 4);
    CHECK(torsion_bound("C3", PChar::Three) == 3);
    CHECK(torsion_bound("A", PChar::Generic) == 1);

    // C1 letters across the characteristics
    CHECK(torsion_bound("C1.a", PChar::Generic) == 2);
    CHECK(torsion_bound("C1.b", PChar::Generic) == 3);
    CHECK(torsion_bound("C1.c", PChar::Generic) == 4);
    CHECK(torsion_bound("C1.d", PChar::Generic) == 6);
    CHECK(torsion_bound("C1.a", PChar::Two) == 1);
    CHECK(torsion_bound("C1.b", PChar::Two) == 3);
    CHECK(torsion_bound("C1.c", PChar::Two) == 1);
    CHECK(torsion_bound("C1.d", PChar::Two) == 3);
    CHECK(torsion_bound("C1.a", PChar::Three) == 2);
    CHECK(torsion_bound("C1.b", PChar::Three) == 1);
    CHECK(torsion_bound("C1.c", PChar::Three) == 4);
    CHECK(torsion_bound("C1.d", PChar::Three) == 2);
}

TEST_CASE("inadmissible pairs and unknown cases are rejected") {
    CHECK_THROWS_AS(torsion_bound("C2.2a", PChar::Three), ConstraintError);
    CHECK_THROWS_AS(torsion_bound("C2.2b", PChar::Three), ConstraintError);
    CHECK_THROWS_AS(torsion_bound("C2.1a", PChar::Generic), ConstraintError);
    CHECK_THROWS_AS(torsion_bound("C3", PChar::Generic), ConstraintError);
    CHECK_THROWS_AS(torsion_bound("C1.b3", PChar::Two), ConstraintError);
    CHECK_THROWS_AS(torsion_bound("nonsense", PChar::Two), ConstraintError);
}

TEST_CASE("case B carries the open-bound marker") {
    CHECK(torsion_bound("B", PChar::Two) == std::nullopt);
    CHECK(torsion_bound("B", PChar::Generic) == std::nullopt);
}

TEST_CASE("catalog totality over the structure-theorem case ids") {
    // every case id of the structure theorem resolves in the catalog, either
    // to a stated divisor or to the explicit open marker
    for (const std::string& id :
         {"A", "B", "C1", "C2.1a", "C2.1b", "C2.2a", "C2.2b", "C3.1", "C3.2a", "C3.2b"}) {
        bool resolved = false;
        for (PChar p : {PChar::Two, PChar::Three, PChar::Generic}) {
            try {
                (void)torsion_bound(id, p);
                resolved = true;
            } catch (const ConstraintError& e) {
                std::string what = e.what();
                // ambiguity means the id resolved to several entries
                if (what.find("ambiguous") != std::string::npos)
                    resolved = true;
            }
        }
        CHECK(resolved);
    }
    CHECK(torsion_bound("C3.2a", PChar::Two) == 4);
    CHECK(torsion_bound("C3.1", PChar::Three) == 3);
}

TEST_CASE("global lcm is exactly 432 = 2^4 * 3^3") {
    CHECK(global_lcm() == 432);
    CHECK(432 % global_lcm() == 0);
}

TEST_CASE("intermediate lcm arithmetic from the stated entries") {
    long c2_at_2 = std::lcm(std::lcm(*torsion_bound("C2.1a", PChar::Two),
                                     *torsion_bound("C2.1b", PChar::Two)),
                            std::lcm(*torsion_bound("C2.2a", PChar::Two),
                                     *torsion_bound("C2.2b", PChar::Two)));
    CHECK(c2_at_2 == 48);
    long c2_at_3 =
        std::lcm(*torsion_bound("C2.1a", PChar::Three), *torsion_bound("C2.1b", PChar::Three));
    CHECK(c2_at_3 == 108);
}

TEST_CASE("away from 2 and 3 only C1 bounds remain and they are {2,3,4,6}") {
    std::set<long> bounds;
    for (const auto& c : torsion_catalog()) {
        if (!case_admissible(c, PChar::Generic) || c.open_bound)
            continue;
        auto b = torsion_bound(c.id, PChar::Generic);
        if (c.family == "C1")
            bounds.insert(*b);
        else
            CHECK(c.family == "A"); // the abelian case, torsion order 1
    }
    CHECK(bounds == std::set<long>{2, 3, 4, 6});
}

TEST_CASE("bielliptic catalog filtering") {
    CHECK(bielliptic_catalog().size() == 14); // a1-a7, b1-b3, c1-c3, d
    auto order6 = bielliptic_catalog(std::nullopt, 6);
    REQUIRE(order6.size() == 1);
    CHECK(order6[0].id == "C1.d");

    // p = 3 keeps the p != 2 entries (among them a3) and the p = 3 entry b3,
    // and drops the char-2 group schemes a4..a7, c3 and the p != 3 entry b2
    auto at3 = bielliptic_catalog(PChar::Three);
    std::set<std::string> ids;
    for (const auto& c : at3)
        ids.insert(c.id);
    CHECK(ids == std::set<std::string>{"C1.a1", "C1.a2", "C1.a3", "C1.b1", "C1.b3", "C1.c1",
                                       "C1.c2", "C1.d"});

    auto at2 = bielliptic_catalog(PChar::Two);
    ids.clear();
    for (const auto& c : at2)
        ids.insert(c.id);
    CHECK(ids == std::set<std::string>{"C1.a1", "C1.a2", "C1.a4", "C1.a5", "C1.a6", "C1.a7",
                                       "C1.b1", "C1.b2", "C1.c1", "C1.c3", "C1.d"});
}

TEST_CASE("catalog json dump") {
    auto j = catalog_json();
    CHECK(j.at("schema") == "pfolia.torsion.v1");
    size_t c1 = 0;
    bool b_open = false;
    for (const auto& c : j.at("cases")) {
        if (c.at("family") == "C1")
            c1++;
        if (c.at("id") == "B")
            b_open = c.at("torsion_divisor").at("2") == "open";
    }
    CHECK(c1 == 14);
    CHECK(b_open);
}
