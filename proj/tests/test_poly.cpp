#include <doctest.h>

#include <random>

#include "pfolia/poly.hpp"

using namespace pfolia;

namespace {
Poly random_poly(const Field& f, int max_deg, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> deg(-1, max_deg), coef(0, f.q() - 1);
    int d = deg(rng);
    std::vector<uint8_t> c;
    for (int i = 0; i <= d; ++i)
        c.push_back(uint8_t(coef(rng)));
    return Poly(f, c);
}
} // namespace

TEST_CASE("gcd worked examples") {
    const Field& f2 = Field::get(2, 1);
    // t^2 + t = t(t+1)
    CHECK(poly_gcd(Poly(f2, {0, 1, 1}), Poly(f2, {0, 1})) == Poly(f2, {0, 1}));
    // gcd(f, 0) is the monic normalization of f
    CHECK(poly_gcd(Poly(f2, {1, 1}), Poly::zero(f2)) == Poly(f2, {1, 1}));
    const Field& f3 = Field::get(3, 1);
    CHECK(poly_gcd(Poly(f3, {2, 0, 2}), Poly::zero(f3)) == Poly(f3, {1, 0, 1}));
    // gcd(t^3 - t, t^2 - 1) = t^2 - 1, monic: t^2 + 2
    CHECK(poly_gcd(Poly(f3, {0, -1, 0, 1}), Poly(f3, {-1, 0, 1})) == Poly(f3, {2, 0, 1}));
    // gcd(0, 0) = 0 by convention
    CHECK(poly_gcd(Poly::zero(f3), Poly::zero(f3)).is_zero());
}

TEST_CASE("derivative worked examples") {
    const Field& f2 = Field::get(2, 1);
    CHECK(Poly(f2, {0, 1, 0, 0, 1}).derivative() == Poly(f2, {1})); // (t^4+t)' = 1
    CHECK(Poly(f2, {1}).derivative().is_zero());
    const Field& f3 = Field::get(3, 1);
    CHECK(Poly(f3, {0, 0, 0, 1}).derivative().is_zero()); // (t^3)' = 0
}

TEST_CASE("gcd divides both inputs and is monic (random, F_4 and F_9 up to degree 8)") {
    std::mt19937_64 rng(20240811);
    for (int p : {2, 3}) {
        const Field& f = Field::get(p, 2);
        for (int trial = 0; trial < 300; ++trial) {
            Poly a = random_poly(f, 8, rng), b = random_poly(f, 8, rng);
            Poly g = poly_gcd(a, b);
            if (g.is_zero()) {
                CHECK(a.is_zero());
                CHECK(b.is_zero());
                continue;
            }
            CHECK(g.leading() == 1);
            CHECK(a.divrem(g).rem.is_zero());
            CHECK(b.divrem(g).rem.is_zero());
        }
    }
}

TEST_CASE("product rule and multiplicative degrees hold exactly") {
    std::mt19937_64 rng(7);
    const Field& f = Field::get(3, 2);
    for (int trial = 0; trial < 200; ++trial) {
        Poly a = random_poly(f, 6, rng), b = random_poly(f, 6, rng);
        CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
        if (!a.is_zero() && !b.is_zero())
            CHECK((a * b).degree() == a.degree() + b.degree());
    }
}

TEST_CASE("frobenius: f(t)^p = f(t^p) over F_p") {
    std::mt19937_64 rng(99);
    for (int p : {2, 3}) {
        const Field& f = Field::get(p, 1);
        for (int trial = 0; trial < 100; ++trial) {
            Poly a = random_poly(f, 7, rng);
            Poly tp = Poly::monomial(f, 1, p);
            CHECK(a.pow(p) == a.compose(tp));
        }
    }
}

TEST_CASE("division, reversal and composition plumbing") {
    const Field& f3 = Field::get(3, 1);
    Poly a(f3, {1, 2, 0, 1}), b(f3, {2, 1});
    auto qr = a.divrem(b);
    CHECK(qr.quot * b + qr.rem == a);
    CHECK_THROWS_AS(a.divrem(Poly::zero(f3)), DegenerateInputError);
    CHECK_THROWS_AS(poly_gcd(a, Poly(Field::get(3, 2), {1})), FieldMismatchError);
    CHECK(Poly(f3, {0, 0, 1}).reverse(2) == Poly(f3, {1}));
    CHECK(Poly(f3, {1, 1}).reverse(3) == Poly(f3, {0, 0, 1, 1}));
    // evaluation across the F_p -> F_9 embedding
    const Field& f9 = Field::get(3, 2);
    Fq g(f9, 3); // the generator
    CHECK(Poly(f3, {1, 1}).eval(g) == g + Fq(f9, 1));
}
