#include "pfolia/gallery.hpp"

#include "pfolia/curve.hpp"
#include "pfolia/foliation.hpp"
#include "pfolia/tables.hpp"

namespace pfolia {

namespace {

struct Check {
    bool ok = true;
    std::string detail;
    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

GalleryVerdict c32a() {
    GalleryVerdict v{"c3.2a", "alpha + (t^2+t) beta + (t^4+t) dt is a sigma-invariant foliation",
                     false, ""};
    const Field& f = Field::get(2, 1);
    Derivation d(Poly(f, {1}), Poly(f, {0, 1, 1}), Poly(f, {0, 1, 0, 0, 1}));
    Check c;
    FoliationReport r = check_rank1(d, LieType::Ordinary);
    c.expect(r.p_closed, "p-closed");
    c.expect(r.lambda && r.lambda->is_one(), "lambda = 1");
    c.expect(r.saturated, "saturated");
    c.expect(r.separability == Separability::InseparableAlbanese, "Delta01 != 0");
    c.expect(sigma_shift_invariant(d), "invariant under t -> t+1");
    c.expect(r.det_twist == -2, "det twist -2");
    c.expect(r.k_trivial, "K-trivial quotient");
    c.expect(table_conditions(2, LieType::Ordinary, f, {1, 0, 0, 0, 1, 1, 0, 1, 0, 0, 1}),
             "matches a table row");
    v.pass = c.ok;
    v.detail = c.detail;
    return v;
}

GalleryVerdict c21a() {
    GalleryVerdict v{"c2.1a", "rank-two module {t^2 alpha + beta, beta + dt} on a superspecial surface",
                     false, ""};
    const Field& f = Field::get(2, 1);
    Rank2Module m{Derivation(Poly(f, {0, 0, 1}), Poly(f, {1}), Poly::zero(f)),
                  Derivation(Poly::zero(f), Poly(f, {1}), Poly(f, {1}))};
    Check c;
    FoliationReport r = rank2_check(m, LieType::Superspecial);
    c.expect(r.involutive, "involutive");
    c.expect(r.p_closed, "p-closed");
    c.expect(r.saturated, "saturated");
    c.expect(r.det_twist == -2, "det F = pr2* O(-2)");
    // expected s-chart generators: alpha + s^2 beta, beta + s^2 ds
    auto i1 = chart_transform(m.d1), i2 = chart_transform(m.d2);
    c.expect(i1.image == Derivation(Poly(f, {1}), Poly(f, {0, 0, 1}), Poly::zero(f), Chart::S),
             "s-chart generator alpha + s^2 beta");
    c.expect(i2.image == Derivation(Poly::zero(f), Poly(f, {1}), Poly(f, {0, 0, 1}), Chart::S),
             "s-chart generator beta + s^2 ds");
    v.pass = c.ok;
    v.detail = c.detail;
    return v;
}

GalleryVerdict c22a() {
    GalleryVerdict v{"c2.2a", "rank-two module {alpha + (t^4+t) dt, alpha + beta} on an ordinary surface",
                     false, ""};
    const Field& f = Field::get(2, 1);
    Rank2Module m{Derivation(Poly(f, {1}), Poly::zero(f), Poly(f, {0, 1, 0, 0, 1})),
                  Derivation(Poly(f, {1}), Poly(f, {1}), Poly::zero(f))};
    Check c;
    c.expect(p_power(m.d1, LieType::Ordinary) == m.d1, "D1^[2] = D1");
    c.expect(p_power(m.d2, LieType::Ordinary) == m.d2, "D2^[2] = D2");
    FoliationReport r = rank2_check(m, LieType::Ordinary);
    c.expect(r.involutive, "involutive");
    c.expect(r.p_closed, "p-closed");
    c.expect(r.saturated, "saturated");
    c.expect(r.det_twist == -2, "det F = pr2* O(-2)");
    v.pass = c.ok;
    v.detail = c.detail;
    return v;
}

GalleryVerdict curve_fields() {
    GalleryVerdict v{"curve-fields",
                     "invariant fields of y^2+y=x^3 (supersingular) and y'^2+x'y'=x'^3+1 (ordinary)",
                     false, ""};
    const Field& f = Field::get(2, 1);
    Check c;
    PresentedRing E = PresentedRing::curve_E(f);
    RingDerivation alpha(E, {E.parse("1"), E.parse("x^2")});
    c.expect(derivation_well_defined(alpha, E), "alpha well defined on E");
    c.expect(ring_derivation_p_power(alpha, E, 2).is_zero(), "alpha^[2] = 0");

    PresentedRing Ep = PresentedRing::curve_Eprime(f);
    RingDerivation beta(Ep, {Ep.parse("xp"), Ep.parse("yp + xp^2")});
    c.expect(derivation_well_defined(beta, Ep), "beta well defined on E'");
    c.expect(ring_derivation_p_power(beta, Ep, 2) == beta, "beta^[2] = beta");
    v.pass = c.ok;
    v.detail = c.detail;
    return v;
}

GalleryVerdict d0_square() {
    GalleryVerdict v{"d0", "D0 = alpha + dt on E x A^1 has D0^[2] = 0", false, ""};
    const Field& f = Field::get(2, 1);
    Check c;
    PresentedRing ExA = PresentedRing::curve_E_times_line(f);
    RingDerivation d0(ExA, {ExA.parse("1"), ExA.parse("x^2"), ExA.parse("1")});
    c.expect(verify_product_field(d0, ExA, 2), "D0^[2] = 0");

    auto vars = std::make_shared<VarSet>(std::vector<std::string>{"xp", "yp", "t"});
    PresentedRing EpxA(f, vars, MPoly::parse(f, vars, "yp^2 + xp*yp + xp^3 + 1"), "yp");
    RingDerivation bdt(EpxA, {EpxA.parse("xp"), EpxA.parse("yp + xp^2"), EpxA.parse("1")});
    c.expect(!verify_product_field(bdt, EpxA, 2), "beta + dt does not square to zero");
    c.expect(ring_derivation_p_power(bdt, EpxA, 2) ==
                 RingDerivation(EpxA, {EpxA.parse("xp"), EpxA.parse("yp + xp^2"), EpxA.parse("0")}),
             "(beta + dt)^[2] = beta");
    v.pass = c.ok;
    v.detail = c.detail;
    return v;
}

GalleryVerdict local_coordinate() {
    GalleryVerdict v{"local-coordinate", "(t1 d/dt1 + x' d/dx')^[2] equals itself on k[t1, x']",
                     false, ""};
    const Field& f = Field::get(2, 1);
    Check c;
    auto vars = std::make_shared<VarSet>(std::vector<std::string>{"t1", "xp"});
    PresentedRing free(f, vars);
    RingDerivation d1(free, {free.parse("t1"), free.parse("xp")});
    c.expect(ring_derivation_p_power(d1, free, 2) == d1, "D1^2 = D1");
    v.pass = c.ok;
    v.detail = c.detail;
    return v;
}

} // namespace

std::vector<std::string> gallery_ids() {
    return {"c3.2a", "c2.1a", "c2.2a", "curve-fields", "d0", "local-coordinate"};
}

GalleryVerdict run_gallery_item(const std::string& id) {
    if (id == "c3.2a")
        return c32a();
    if (id == "c2.1a")
        return c21a();
    if (id == "c2.2a")
        return c22a();
    if (id == "curve-fields")
        return curve_fields();
    if (id == "d0")
        return d0_square();
    if (id == "local-coordinate")
        return local_coordinate();
    throw ConstraintError("gallery: unknown example " + id);
}

std::vector<GalleryVerdict> run_gallery() {
    std::vector<GalleryVerdict> out;
    for (const auto& id : gallery_ids())
        out.push_back(run_gallery_item(id));
    return out;
}

} // namespace pfolia
