#include <doctest.h>

#include <random>

#include "pfolia/curve.hpp"
#include "pfolia/derivation.hpp"

using namespace pfolia;

namespace {

const Field& F2 = Field::get(2, 1);

RingDerivation alpha_on(const PresentedRing& ring) {
    // alpha(x) = 1, alpha(y) = x^2 (and fixes any extra generators)
    std::vector<MPoly> images;
    for (size_t i = 0; i < ring.vars()->size(); ++i) {
        const std::string& n = ring.vars()->name(i);
        if (n == "x")
            images.push_back(ring.parse("1"));
        else if (n == "y")
            images.push_back(ring.parse("x^2"));
        else
            images.push_back(ring.parse("0"));
    }
    return RingDerivation(ring, images);
}

RingDerivation beta_on(const PresentedRing& ring) {
    // beta(x') = x', beta(y') = y' + x'^2
    std::vector<MPoly> images;
    for (size_t i = 0; i < ring.vars()->size(); ++i) {
        const std::string& n = ring.vars()->name(i);
        if (n == "xp")
            images.push_back(ring.parse("xp"));
        else if (n == "yp")
            images.push_back(ring.parse("yp + xp^2"));
        else
            images.push_back(ring.parse("0"));
    }
    return RingDerivation(ring, images);
}

MPoly random_element(const PresentedRing& ring, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coef(0, ring.field().q() - 1), deg(0, 2);
    MPoly acc = MPoly::zero(ring.field(), ring.vars());
    for (int terms = 0; terms < 4; ++terms) {
        MPoly::Exp e(ring.vars()->size(), 0);
        for (auto& x : e)
            x = uint8_t(deg(rng));
        acc = acc + MPoly::term(ring.field(), ring.vars(), uint8_t(coef(rng)), e);
    }
    return ring.reduce(acc);
}

} // namespace

TEST_CASE("the curve vector fields are well defined") {
    PresentedRing E = PresentedRing::curve_E(F2);
    CHECK(derivation_well_defined(alpha_on(E), E));

    PresentedRing Ep = PresentedRing::curve_Eprime(F2);
    CHECK(derivation_well_defined(beta_on(Ep), Ep));

    // D(x) = 1, D(y) = 0 does not descend: D(rel) = 3x^2 = x^2 != 0
    RingDerivation bad(E, {E.parse("1"), E.parse("0")});
    CHECK_FALSE(derivation_well_defined(bad, E));
}

TEST_CASE("restricted powers of the curve fields") {
    PresentedRing E = PresentedRing::curve_E(F2);
    CHECK(ring_derivation_p_power(alpha_on(E), E, 2).is_zero()); // alpha^[2] = 0

    PresentedRing Ep = PresentedRing::curve_Eprime(F2);
    RingDerivation beta = beta_on(Ep);
    CHECK(ring_derivation_p_power(beta, Ep, 2) == beta); // beta^[2] = beta

    RingDerivation zero(E, {E.parse("0"), E.parse("0")});
    CHECK(ring_derivation_p_power(zero, E, 2).is_zero());

    RingDerivation bad(E, {E.parse("1"), E.parse("0")});
    CHECK_THROWS_AS(ring_derivation_p_power(bad, E, 2), ConstraintError);
}

TEST_CASE("the product field alpha + dt squares to zero; beta + dt does not") {
    PresentedRing ExA = PresentedRing::curve_E_times_line(F2);
    std::vector<MPoly> d0 = {ExA.parse("1"), ExA.parse("x^2"), ExA.parse("1")};
    CHECK(verify_product_field(RingDerivation(ExA, d0), ExA, 2));

    auto vars = std::make_shared<VarSet>(std::vector<std::string>{"xp", "yp", "t"});
    PresentedRing EpxA(F2, vars, MPoly::parse(F2, vars, "yp^2 + xp*yp + xp^3 + 1"), "yp");
    RingDerivation bdt(EpxA, {EpxA.parse("xp"), EpxA.parse("yp + xp^2"), EpxA.parse("1")});
    CHECK_FALSE(verify_product_field(bdt, EpxA, 2));
    // its square is beta itself: the t-component dies, the rest is fixed
    RingDerivation sq = ring_derivation_p_power(bdt, EpxA, 2);
    CHECK(sq == RingDerivation(EpxA, {EpxA.parse("xp"), EpxA.parse("yp + xp^2"),
                                      EpxA.parse("0")}));

    // dt alone is 2-nilpotent
    RingDerivation dt(ExA, {ExA.parse("0"), ExA.parse("0"), ExA.parse("1")});
    CHECK(verify_product_field(dt, ExA, 2));
}

TEST_CASE("local coordinate identity: (t1 d/dt1 + x' d/dx')^2 = itself on k[t1, x']") {
    auto vars = std::make_shared<VarSet>(std::vector<std::string>{"t1", "xp"});
    PresentedRing free(F2, vars);
    RingDerivation d1(free, {free.parse("t1"), free.parse("xp")});
    CHECK(ring_derivation_p_power(d1, free, 2) == d1);
}

TEST_CASE("Leibniz consistency on random pairs in each presented ring") {
    std::mt19937_64 rng(1212);
    PresentedRing rings[] = {PresentedRing::curve_E(F2), PresentedRing::curve_Eprime(F2),
                             PresentedRing::curve_E_times_line(F2)};
    for (const auto& ring : rings) {
        RingDerivation d = ring.vars()->index("x") >= 0 ? alpha_on(ring) : beta_on(ring);
        for (int trial = 0; trial < 100; ++trial) {
            MPoly f = random_element(ring, rng), g = random_element(ring, rng);
            MPoly lhs = d.apply(ring.reduce(f * g));
            MPoly rhs = ring.reduce(d.apply(f) * g + f * d.apply(g));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("ring p-power agrees with the derivation oracle on trivially embedded k[t]") {
    std::mt19937_64 rng(8765);
    auto vars = std::make_shared<VarSet>(std::vector<std::string>{"t"});
    for (int p : {2, 3}) {
        const Field& f = Field::get(p, 1);
        PresentedRing line(f, vars);
        std::uniform_int_distribution<int> coef(0, p - 1);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<uint8_t> wc(p + 3);
            for (auto& c : wc)
                c = uint8_t(coef(rng));
            Poly w(f, wc);
            // as a ring derivation on k[t]
            MPoly img = MPoly::zero(f, vars);
            for (int k = 0; k <= w.degree(); ++k)
                img = img + MPoly::term(f, vars, w.coeff(k), MPoly::Exp{uint8_t(k)});
            RingDerivation d(line, {img});
            RingDerivation dp = ring_derivation_p_power(d, line, p);
            // as a module derivation w * dt
            Derivation dm(Poly::zero(f), Poly::zero(f), w);
            Derivation e = p_power_oracle(dm, LieType::Superspecial);
            MPoly expect = MPoly::zero(f, vars);
            for (int k = 0; k <= e.w().degree(); ++k)
                expect = expect + MPoly::term(f, vars, e.w().coeff(k), MPoly::Exp{uint8_t(k)});
            CHECK(dp.images()[0] == expect);
        }
    }
}
