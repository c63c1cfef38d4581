#include <doctest.h>

#include <random>

#include "pfolia/derivation.hpp"
#include "pfolia/errors.hpp"

using namespace pfolia;

namespace {

Poly rpoly(const Field& f, int max_deg, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> deg(-1, max_deg), coef(0, f.q() - 1);
    int d = deg(rng);
    std::vector<uint8_t> c;
    for (int i = 0; i <= d; ++i)
        c.push_back(uint8_t(coef(rng)));
    return Poly(f, c);
}

Derivation rderiv(const Field& f, std::mt19937_64& rng) {
    const int i = twist_bound(f.p());
    return Derivation(rpoly(f, i, rng), rpoly(f, i, rng), rpoly(f, i + 2, rng));
}

} // namespace

TEST_CASE("bracket worked examples") {
    const Field& f2 = Field::get(2, 1);
    // [t^2 a + b, b + dt] = -2t a = 0 in char 2
    Derivation d1(Poly(f2, {0, 0, 1}), Poly(f2, {1}), Poly::zero(f2));
    Derivation d2(Poly::zero(f2), Poly(f2, {1}), Poly(f2, {1}));
    CHECK(bracket(d1, d2).is_zero());
    CHECK(bracket(d1, d1).is_zero()); // antisymmetry on the diagonal
    // [(t^4+t) dt, a] = 0
    Derivation d3(Poly::zero(f2), Poly::zero(f2), Poly(f2, {0, 1, 0, 0, 1}));
    Derivation alpha(Poly(f2, {1}), Poly::zero(f2), Poly::zero(f2));
    CHECK(bracket(d3, alpha).is_zero());
}

TEST_CASE("bracket is bilinear, antisymmetric, and satisfies Jacobi (F_4, F_9)") {
    std::mt19937_64 rng(123);
    for (int p : {2, 3}) {
        const Field& f = Field::get(p, 2);
        for (int trial = 0; trial < 200; ++trial) {
            Derivation a = rderiv(f, rng), b = rderiv(f, rng), c = rderiv(f, rng);
            CHECK((bracket(a, b) + bracket(b, a)).is_zero());
            CHECK(bracket(a, b + c) == bracket(a, b) + bracket(a, c));
            Derivation jac = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) +
                             bracket(c, bracket(a, b));
            CHECK(jac.is_zero());
        }
    }
}

TEST_CASE("p_power worked examples") {
    const Field& f2 = Field::get(2, 1);
    const Field& f3 = Field::get(3, 1);

    // D = a + (t^2+t) b + (t^4+t) dt, ordinary, p = 2: D^[2] = D
    Derivation d(Poly(f2, {1}), Poly(f2, {0, 1, 1}), Poly(f2, {0, 1, 0, 0, 1}));
    CHECK(p_power(d, LieType::Ordinary) == d);

    // D = t a + b + dt, superspecial, p = 3: w' = 0 kills everything
    Derivation e(Poly(f3, {0, 1}), Poly(f3, {1}), Poly(f3, {1}));
    CHECK(p_power(e, LieType::Superspecial).is_zero());

    // D = t^2 a + b, superspecial, p = 2: w = 0 and alpha^2 = beta^2 = 0
    Derivation g(Poly(f2, {0, 0, 1}), Poly(f2, {1}), Poly::zero(f2));
    CHECK(p_power(g, LieType::Superspecial).is_zero());
}

TEST_CASE("oracle worked examples") {
    const Field& f2 = Field::get(2, 1);
    Derivation zero(Poly::zero(f2), Poly::zero(f2), Poly::zero(f2));
    for (LieType t : kAllLieTypes)
        CHECK(p_power_oracle(zero, t).is_zero());
    // a + b ordinary squares to itself (cross terms commute away)
    Derivation ab(Poly(f2, {1}), Poly(f2, {1}), Poly::zero(f2));
    CHECK(p_power_oracle(ab, LieType::Ordinary) == ab);
    // supersingular-not-ss: alpha^2 = beta
    Derivation a(Poly(f2, {1}), Poly::zero(f2), Poly::zero(f2));
    Derivation b(Poly::zero(f2), Poly(f2, {1}), Poly::zero(f2));
    CHECK(p_power_oracle(a, LieType::SupersingularNotSS) == b);
}

TEST_CASE("closed form equals oracle on the full degree-bounded set over F_p") {
    for (int p : {2, 3}) {
        const Field& f = Field::get(p, 1);
        const int i = twist_bound(p);
        const size_t arity = 2 * (i + 1) + (i + 3);
        uint64_t total = 1;
        for (size_t k = 0; k < arity; ++k)
            total *= f.q();
        for (LieType type : kAllLieTypes) {
            for (uint64_t n = 0; n < total; ++n) {
                uint64_t x = n;
                std::vector<uint8_t> cs(arity);
                for (size_t k = arity; k-- > 0;) {
                    cs[k] = uint8_t(x % f.q());
                    x /= f.q();
                }
                Poly u(f, std::vector<uint8_t>(cs.begin(), cs.begin() + i + 1));
                Poly v(f, std::vector<uint8_t>(cs.begin() + i + 1, cs.begin() + 2 * (i + 1)));
                Poly w(f, std::vector<uint8_t>(cs.begin() + 2 * (i + 1), cs.end()));
                Derivation d(u, v, w);
                REQUIRE(p_power(d, type) == p_power_oracle(d, type));
            }
        }
    }
}

TEST_CASE("closed form equals oracle on random inputs over F_4 and F_9") {
    std::mt19937_64 rng(20250809);
    for (int p : {2, 3}) {
        const Field& f = Field::get(p, 2);
        for (LieType type : kAllLieTypes)
            for (int trial = 0; trial < 1000; ++trial) {
                Derivation d = rderiv(f, rng);
                REQUIRE(p_power(d, type) == p_power_oracle(d, type));
            }
    }
}

TEST_CASE("additivity defect of the 2-power is the bracket") {
    std::mt19937_64 rng(4242);
    const Field& f = Field::get(2, 2);
    for (LieType type : kAllLieTypes)
        for (int trial = 0; trial < 500; ++trial) {
            Derivation a = rderiv(f, rng), b = rderiv(f, rng);
            CHECK(p_power(a + b, type) ==
                  p_power(a, type) + p_power(b, type) + bracket(a, b));
        }
}

TEST_CASE("chart transform worked examples") {
    const Field& f2 = Field::get(2, 1);
    // t^2 a + b -> a + s^2 b with N = 2
    Derivation d(Poly(f2, {0, 0, 1}), Poly(f2, {1}), Poly::zero(f2));
    auto im = chart_transform(d);
    CHECK(im.clearing_exponent == 2);
    CHECK(im.image == Derivation(Poly(f2, {1}), Poly(f2, {0, 0, 1}), Poly::zero(f2), Chart::S));
    // dt -> s^2 ds with N = 0
    Derivation dt(Poly::zero(f2), Poly::zero(f2), Poly(f2, {1}));
    auto im2 = chart_transform(dt);
    CHECK(im2.clearing_exponent == 0);
    CHECK(im2.image == Derivation(Poly::zero(f2), Poly::zero(f2), Poly(f2, {0, 0, 1}), Chart::S));
    // b + dt -> b + s^2 ds with N = 0
    Derivation d3(Poly::zero(f2), Poly(f2, {1}), Poly(f2, {1}));
    auto im3 = chart_transform(d3);
    CHECK(im3.clearing_exponent == 0);
    CHECK(im3.image == Derivation(Poly::zero(f2), Poly(f2, {1}), Poly(f2, {0, 0, 1}), Chart::S));

    CHECK_THROWS_AS(chart_transform(Derivation(Poly::zero(f2), Poly::zero(f2), Poly::zero(f2))),
                    DegenerateInputError);
}

TEST_CASE("chart transform is involutive on primitive triples") {
    std::mt19937_64 rng(31337);
    for (int p : {2, 3}) {
        const Field& f = Field::get(p, 2);
        int done = 0;
        while (done < 200) {
            Derivation d = rderiv(f, rng);
            if (d.is_zero())
                continue;
            // make the triple primitive at t = 0 (what a round trip can see)
            if (d.u().coeff(0) == 0 && d.v().coeff(0) == 0 && d.w().coeff(0) == 0)
                continue;
            ++done;
            Derivation back = chart_transform(chart_transform(d).image).image;
            CHECK(back == d);
        }
    }
}

TEST_CASE("p_power rejects s-chart input; bracket rejects mixed charts") {
    const Field& f2 = Field::get(2, 1);
    Derivation s(Poly(f2, {1}), Poly::zero(f2), Poly::zero(f2), Chart::S);
    Derivation t(Poly(f2, {1}), Poly::zero(f2), Poly::zero(f2), Chart::T);
    CHECK_THROWS_AS(p_power(s, LieType::Ordinary), ChartError);
    CHECK_THROWS_AS(p_power_oracle(s, LieType::Ordinary), ChartError);
    CHECK_THROWS_AS(bracket(s, t), ChartError);
}

TEST_CASE("degree bounds and sigma invariance") {
    const Field& f2 = Field::get(2, 1);
    Derivation d(Poly(f2, {1}), Poly(f2, {0, 1, 1}), Poly(f2, {0, 1, 0, 0, 1}));
    CHECK(degree_bounds_ok(d));
    CHECK(sigma_shift_invariant(d)); // u=1, v=t^2+t, w=t^4+t are all t->t+1 fixed
    Derivation e(Poly(f2, {0, 1}), Poly::zero(f2), Poly::zero(f2));
    CHECK_FALSE(sigma_shift_invariant(e)); // t -> t+1 moves t
    Derivation big(Poly(f2, {0, 0, 0, 1}), Poly::zero(f2), Poly::zero(f2));
    CHECK_FALSE(degree_bounds_ok(big));
}
