#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pfolia/census.hpp"
#include "pfolia/gallery.hpp"
#include "pfolia/torsion.hpp"

namespace py = pybind11;
using namespace pfolia;

namespace {

Derivation make_derivation(int p, int e, const std::vector<int>& u, const std::vector<int>& v,
                           const std::vector<int>& w) {
    const Field& f = Field::get(p, e);
    auto to_poly = [&](const std::vector<int>& cs) {
        std::vector<uint8_t> c;
        for (int x : cs) {
            if (x < 0 || x >= f.q())
                throw ConstraintError("coefficient index out of range");
            c.push_back(uint8_t(x));
        }
        return Poly(f, c);
    };
    return Derivation(to_poly(u), to_poly(v), to_poly(w));
}

py::list poly_out(const Poly& p) {
    py::list l;
    for (int k = 0; k <= p.degree(); ++k)
        l.append(int(p.coeff(k)));
    return l;
}

py::dict derivation_out(const Derivation& d) {
    py::dict r;
    r["u"] = poly_out(d.u());
    r["v"] = poly_out(d.v());
    r["w"] = poly_out(d.w());
    r["chart"] = d.chart() == Chart::T ? "t" : "s";
    return r;
}

py::dict report_out(const FoliationReport& r) {
    py::dict j;
    j["saturated"] = r.saturated;
    j["degree_bounds_ok"] = r.degree_bounds_ok;
    j["involutive"] = r.involutive;
    j["p_closed"] = r.p_closed;
    j["lambda"] = r.lambda ? py::object(py::str(r.lambda->to_string())) : py::object(py::none());
    j["separability"] = separability_name(r.separability);
    j["det_twist"] = r.det_twist;
    j["k_trivial"] = r.k_trivial;
    j["matched_rows"] = r.matched_rows;
    return j;
}

std::vector<uint8_t> to_coeffs(int p, int e, const std::vector<int>& coeffs) {
    const Field& f = Field::get(p, e);
    std::vector<uint8_t> cs;
    for (int x : coeffs) {
        if (x < 0 || x >= f.q())
            throw ConstraintError("coefficient index out of range");
        cs.push_back(uint8_t(x));
    }
    return cs;
}

PChar pchar_from_obj(const py::object& p) {
    if (py::isinstance<py::str>(p)) {
        const auto s = p.cast<std::string>();
        if (s == "generic")
            return PChar::Generic;
        throw ConstraintError("p must be an integer or 'generic'");
    }
    return pchar_of(p.cast<long>());
}

} // namespace

PYBIND11_MODULE(_pfolia, m) {
    m.doc() = "exact computations with p-closed foliations on A x P^1 in characteristic 2 and 3";

    py::register_exception<ConstraintError>(m, "ConstraintError", PyExc_ValueError);
    py::register_exception<DegenerateInputError>(m, "DegenerateInputError", PyExc_ValueError);
    py::register_exception<ChartError>(m, "ChartError", PyExc_ValueError);
    py::register_exception<RankError>(m, "RankError", PyExc_ValueError);

    m.attr("LIE_TYPES") = std::vector<std::string>{
        lie_type_name(LieType::Superspecial), lie_type_name(LieType::SupersingularNotSS),
        lie_type_name(LieType::PRankOne), lie_type_name(LieType::Ordinary)};

    m.def(
        "p_power",
        [](int p, int e, const std::vector<int>& u, const std::vector<int>& v,
           const std::vector<int>& w, const std::string& lie) {
            return derivation_out(
                p_power(make_derivation(p, e, u, v, w), lie_type_from_name(lie)));
        },
        py::arg("p"), py::arg("e"), py::arg("u"), py::arg("v"), py::arg("w"), py::arg("lie"),
        "closed-form p-th power of u*alpha + v*beta + w*dt");

    m.def(
        "p_power_oracle",
        [](int p, int e, const std::vector<int>& u, const std::vector<int>& v,
           const std::vector<int>& w, const std::string& lie) {
            return derivation_out(
                p_power_oracle(make_derivation(p, e, u, v, w), lie_type_from_name(lie)));
        },
        py::arg("p"), py::arg("e"), py::arg("u"), py::arg("v"), py::arg("w"), py::arg("lie"),
        "restricted-enveloping-algebra oracle for the p-th power");

    m.def(
        "bracket",
        [](int p, int e, const std::vector<int>& u1, const std::vector<int>& v1,
           const std::vector<int>& w1, const std::vector<int>& u2, const std::vector<int>& v2,
           const std::vector<int>& w2) {
            return derivation_out(
                bracket(make_derivation(p, e, u1, v1, w1), make_derivation(p, e, u2, v2, w2)));
        },
        py::arg("p"), py::arg("e"), py::arg("u1"), py::arg("v1"), py::arg("w1"), py::arg("u2"),
        py::arg("v2"), py::arg("w2"));

    m.def(
        "chart_transform",
        [](int p, int e, const std::vector<int>& u, const std::vector<int>& v,
           const std::vector<int>& w) {
            auto im = chart_transform(make_derivation(p, e, u, v, w));
            return py::make_tuple(derivation_out(im.image), im.clearing_exponent);
        },
        py::arg("p"), py::arg("e"), py::arg("u"), py::arg("v"), py::arg("w"),
        "substitute t = 1/s, dt = s^2 ds and clear the minimal s-power");

    m.def(
        "check",
        [](int p, int e, const std::vector<int>& coeffs, const std::string& lie) {
            const Field& f = Field::get(p, e);
            auto cs = to_coeffs(p, e, coeffs);
            Derivation d = derivation_from_coeffs(p, f, cs);
            LieType t = lie_type_from_name(lie);
            FoliationReport r = check_rank1(d, t);
            if (!d.is_zero())
                r.matched_rows = matching_rows(p, t, f, cs);
            auto out = report_out(r);
            out["sigma_invariant"] = !d.is_zero() && sigma_shift_invariant(d);
            return out;
        },
        py::arg("p"), py::arg("e"), py::arg("coeffs"), py::arg("lie"),
        "full foliation report for one coefficient tuple (a.., b.., c..)");

    m.def(
        "rank2_check",
        [](int p, int e, const std::vector<int>& u1, const std::vector<int>& v1,
           const std::vector<int>& w1, const std::vector<int>& u2, const std::vector<int>& v2,
           const std::vector<int>& w2, const std::string& lie) {
            Rank2Module mod{make_derivation(p, e, u1, v1, w1), make_derivation(p, e, u2, v2, w2)};
            return report_out(rank2_check(mod, lie_type_from_name(lie)));
        },
        py::arg("p"), py::arg("e"), py::arg("u1"), py::arg("v1"), py::arg("w1"), py::arg("u2"),
        py::arg("v2"), py::arg("w2"), py::arg("lie"));

    m.def(
        "table_conditions",
        [](int p, const std::string& lie, const std::vector<int>& coeffs, int e) {
            return table_conditions(p, lie_type_from_name(lie), Field::get(p, e),
                                    to_coeffs(p, e, coeffs));
        },
        py::arg("p"), py::arg("lie"), py::arg("coeffs"), py::arg("e") = 1);

    m.def(
        "verify_tables",
        [](int p, const std::string& lie, const std::string& mode, int e) {
            LieType t = lie_type_from_name(lie);
            py::dict out;
            bool ok = true;
            auto loads = py::module_::import("json").attr("loads");
            if (mode == "symbolic" || mode == "both") {
                auto rep = verify_table_symbolic(p, t);
                ok = ok && rep.ok();
                out["symbolic"] = loads(to_json(rep).dump());
            }
            if (mode == "exhaustive" || mode == "both") {
                auto rep = verify_table_exhaustive(p, t, e);
                ok = ok && rep.ok();
                out["exhaustive"] = loads(to_json(rep).dump());
            }
            out["ok"] = ok;
            return out;
        },
        py::arg("p"), py::arg("lie"), py::arg("mode") = "both", py::arg("e") = 1);

    m.def(
        "census",
        [](int p, int e, const std::string& lie, bool p_closed, bool saturated, bool inseparable,
           int workers) {
            CensusFilter f;
            f.p_closed = p_closed;
            f.saturated = saturated;
            f.inseparable = inseparable;
            auto res = enumerate_foliations(p, e, lie_type_from_name(lie), f, workers);
            return py::module_::import("json").attr("loads")(emit_json(res).dump());
        },
        py::arg("p"), py::arg("e"), py::arg("lie"), py::arg("p_closed") = false,
        py::arg("saturated") = false, py::arg("inseparable") = false, py::arg("workers") = 1);

    m.def(
        "census_csv",
        [](int p, int e, const std::string& lie, bool p_closed, bool saturated, bool inseparable,
           int workers) {
            CensusFilter f;
            f.p_closed = p_closed;
            f.saturated = saturated;
            f.inseparable = inseparable;
            return emit_csv(enumerate_foliations(p, e, lie_type_from_name(lie), f, workers));
        },
        py::arg("p"), py::arg("e"), py::arg("lie"), py::arg("p_closed") = false,
        py::arg("saturated") = false, py::arg("inseparable") = false, py::arg("workers") = 1);

    m.def(
        "torsion_bound",
        [](const std::string& case_id, const py::object& p) -> py::object {
            auto b = torsion_bound(case_id, pchar_from_obj(p));
            if (!b)
                return py::none();
            return py::int_(*b);
        },
        py::arg("case_id"), py::arg("p"),
        "certified divisor of the torsion order; None when the bound is open");

    m.def("global_lcm", &global_lcm);

    m.def(
        "torsion_catalog",
        [](const py::object& p, const py::object& n) {
            std::optional<PChar> pc;
            std::optional<int> nn;
            if (!p.is_none())
                pc = pchar_from_obj(p);
            if (!n.is_none())
                nn = n.cast<int>();
            return py::module_::import("json").attr("loads")(catalog_json(pc, nn).dump());
        },
        py::arg("p") = py::none(), py::arg("n") = py::none());

    m.def("gallery", []() {
        py::list out;
        for (const auto& v : run_gallery()) {
            py::dict j;
            j["id"] = v.id;
            j["what"] = v.what;
            j["pass"] = v.pass;
            if (!v.pass)
                j["failed"] = v.detail;
            out.append(std::move(j));
        }
        return out;
    });
}
