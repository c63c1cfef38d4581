// pfolia: exact verification and classification of p-closed foliations on
// abelian-surface x P^1 products in characteristic 2 and 3, plus the torsion
// bookkeeping of the associated K-trivial quotients.
//
// Subcommands: check, verify-tables, census, gallery, torsion.
// Exit codes: 0 success / affirmative verdict, 1 negative verdict,
//             2 usage or input error, 3 environment (I/O) error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pfolia/census.hpp"
#include "pfolia/gallery.hpp"
#include "pfolia/torsion.hpp"

using namespace pfolia;
using nlohmann::ordered_json;

namespace {

constexpr int kOk = 0, kNegative = 1, kUsage = 2, kEnv = 3;

std::vector<uint8_t> parse_coeff_list(const std::string& text, size_t expect, int q) {
    std::vector<uint8_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        int v = std::stoi(item, &pos);
        if (pos != item.size() || v < 0 || v >= q)
            throw ConstraintError("coefficient out of range: " + item);
        out.push_back(uint8_t(v));
    }
    if (out.size() != expect)
        throw ConstraintError("expected " + std::to_string(expect) + " coefficients, got " +
                              std::to_string(out.size()));
    return out;
}

int census_workers() {
    if (const char* env = std::getenv("PFOLIA_WORKERS")) {
        int w = std::atoi(env);
        if (w >= 1 && w <= 256)
            return w;
    }
    return 1;
}

bool write_output(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::cout << payload;
        return true;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        return false;
    out << payload;
    return bool(out);
}

ordered_json report_json(const FoliationReport& r) {
    ordered_json j;
    j["saturated"] = r.saturated;
    j["degree_bounds_ok"] = r.degree_bounds_ok;
    j["involutive"] = r.involutive;
    j["p_closed"] = r.p_closed;
    j["lambda"] = r.lambda ? r.lambda->to_string() : "";
    j["separability"] = separability_name(r.separability);
    j["det_twist"] = r.det_twist;
    j["k_trivial"] = r.k_trivial;
    j["matched_rows"] = r.matched_rows;
    return j;
}

void print_report_text(const FoliationReport& r, const Derivation& d) {
    std::cout << "D = " << d.to_string() << "\n";
    std::cout << "saturated:        " << (r.saturated ? "yes" : "no") << "\n";
    std::cout << "degree bounds:    " << (r.degree_bounds_ok ? "yes" : "no") << "\n";
    std::cout << "p-closed:         " << (r.p_closed ? "yes" : "no");
    if (r.lambda)
        std::cout << "   lambda = " << r.lambda->to_string();
    std::cout << "\n";
    std::cout << "separability:     " << separability_name(r.separability) << "\n";
    std::cout << "det twist:        " << r.det_twist << "\n";
    std::cout << "K-trivial:        " << (r.k_trivial ? "yes" : "no") << "\n";
    std::cout << "matched rows:     ";
    if (r.matched_rows.empty())
        std::cout << "-";
    for (size_t i = 0; i < r.matched_rows.size(); ++i)
        std::cout << (i ? ";" : "") << r.matched_rows[i];
    std::cout << "\n";
}

int cmd_check(int p, int e, const std::string& lie, const std::string& a, const std::string& b,
              const std::string& c, const std::string& format) {
    const Field& fq = Field::get(p, e);
    LieType type = lie_type_from_name(lie);
    const int i = twist_bound(p);
    std::vector<uint8_t> coeffs = parse_coeff_list(a, i + 1, fq.q());
    auto bs = parse_coeff_list(b, i + 1, fq.q());
    auto cs = parse_coeff_list(c, i + 3, fq.q());
    coeffs.insert(coeffs.end(), bs.begin(), bs.end());
    coeffs.insert(coeffs.end(), cs.begin(), cs.end());

    Derivation d = derivation_from_coeffs(p, fq, coeffs);
    if (d.is_zero())
        throw ConstraintError("degenerate input: the zero derivation");
    FoliationReport r = check_rank1(d, type);
    r.matched_rows = matching_rows(p, type, fq, coeffs);

    if (format == "json") {
        ordered_json j = report_json(r);
        j["p"] = p;
        j["e"] = e;
        j["lie"] = lie;
        std::cout << j.dump(2) << "\n";
    } else {
        print_report_text(r, d);
    }
    const bool accept =
        r.saturated && r.p_closed && r.separability == Separability::InseparableAlbanese;
    if (format != "json")
        std::cout << "verdict:          " << (accept ? "accept" : "reject") << "\n";
    return accept ? kOk : kNegative;
}

int cmd_verify_tables(int p, const std::string& lie, const std::string& mode, int e,
                      const std::string& out, const std::string& table_data) {
    if (!table_data.empty()) {
        std::ifstream in(table_data, std::ios::binary);
        if (!in) {
            std::cerr << "cannot read table data file: " << table_data << "\n";
            return kEnv;
        }
        std::stringstream ss;
        ss << in.rdbuf();
        try {
            load_tables_from_json(ss.str());
        } catch (const ConstraintError& ex) {
            std::cerr << "bad table data: " << ex.what() << "\n";
            return kEnv;
        }
    }
    std::vector<LieType> types;
    if (lie.empty())
        types.assign(std::begin(kAllLieTypes), std::end(kAllLieTypes));
    else
        types.push_back(lie_type_from_name(lie));

    ordered_json all = ordered_json::array();
    bool ok = true;
    for (LieType t : types) {
        if (mode == "symbolic" || mode == "both") {
            auto rep = verify_table_symbolic(p, t);
            ok = ok && rep.ok();
            all.push_back(to_json(rep));
            std::cout << "symbolic   p=" << p << " " << lie_type_name(t) << ": "
                      << (rep.ok() ? "ok" : "FAILED") << "\n";
        }
        if (mode == "exhaustive" || mode == "both") {
            auto rep = verify_table_exhaustive(p, t, e);
            ok = ok && rep.ok();
            all.push_back(to_json(rep));
            std::cout << "exhaustive p=" << p << " " << lie_type_name(t) << " e=" << e << ": "
                      << (rep.ok() ? "ok" : "FAILED") << " (truth " << rep.truth_count
                      << ", table " << rep.table_count << " of " << rep.scanned << ")\n";
            for (const auto& w : rep.table_only) {
                std::cout << "  witness (table only):";
                for (auto x : w)
                    std::cout << " " << int(x);
                std::cout << "\n";
            }
            for (const auto& w : rep.truth_only) {
                std::cout << "  witness (truth only):";
                for (auto x : w)
                    std::cout << " " << int(x);
                std::cout << "\n";
            }
        }
    }
    if (!out.empty()) {
        ordered_json doc;
        doc["schema"] = "pfolia.verify.v1";
        doc["reports"] = all;
        doc["ok"] = ok;
        if (!write_output(out, doc.dump(2) + "\n")) {
            std::cerr << "cannot write report to " << out << "\n";
            return kEnv;
        }
    }
    return ok ? kOk : kNegative;
}

int cmd_census(int p, int e, const std::string& lie, const std::string& filter,
               const std::string& format, const std::string& out) {
    LieType type = lie_type_from_name(lie);
    CensusFilter f;
    std::stringstream ss(filter);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "p-closed")
            f.p_closed = true;
        else if (item == "saturated")
            f.saturated = true;
        else if (item == "inseparable")
            f.inseparable = true;
        else if (!item.empty())
            throw ConstraintError("unknown filter flag: " + item);
    }
    auto res = enumerate_foliations(p, e, type, f, census_workers());
    std::string payload =
        format == "csv" ? emit_csv(res) : emit_json(res).dump(2) + "\n";
    if (!write_output(out, payload)) {
        std::cerr << "cannot write census to " << out << "\n";
        return kEnv;
    }
    return kOk;
}

int cmd_gallery(const std::string& only, const std::string& format) {
    std::vector<GalleryVerdict> verdicts;
    if (only.empty()) {
        verdicts = run_gallery();
    } else {
        verdicts.push_back(run_gallery_item(only)); // unknown id throws -> usage error
    }
    bool ok = true;
    if (format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& v : verdicts) {
            ordered_json j;
            j["id"] = v.id;
            j["what"] = v.what;
            j["pass"] = v.pass;
            if (!v.pass)
                j["failed"] = v.detail;
            arr.push_back(std::move(j));
            ok = ok && v.pass;
        }
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const auto& v : verdicts) {
            std::cout << (v.pass ? "[pass] " : "[FAIL] ") << v.id << ": " << v.what;
            if (!v.pass)
                std::cout << "  (" << v.detail << ")";
            std::cout << "\n";
            ok = ok && v.pass;
        }
    }
    return ok ? kOk : kNegative;
}

int cmd_torsion(const std::string& case_id, const std::string& p_text, bool global, bool catalog,
                int n_filter) {
    std::optional<PChar> pc;
    if (!p_text.empty()) {
        if (p_text == "generic")
            pc = PChar::Generic;
        else
            pc = pchar_of(std::stol(p_text));
    }
    if (global) {
        long l = global_lcm();
        std::cout << l << "\n";
        std::cout << "divides 2^4*3^3 = 432: " << (432 % l == 0 ? "yes" : "no") << "\n";
        return kOk;
    }
    if (catalog) {
        std::cout << catalog_json(pc, n_filter > 0 ? std::optional<int>(n_filter) : std::nullopt)
                         .dump(2)
                  << "\n";
        return kOk;
    }
    if (case_id.empty())
        throw ConstraintError("torsion: need --case, --global or --catalog");
    PChar p = pc.value_or(PChar::Generic);
    auto bound = torsion_bound(case_id, p);
    if (!bound) {
        std::cout << "open (no bound stated)\n";
        return kOk;
    }
    std::cout << *bound << "\n";
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for p-closed foliations on A x P^1 in characteristic 2 and 3"};
    app.require_subcommand(1);

    int p = 2, e = 1, n_filter = 0;
    std::string lie, a, b, c, format = "text", mode = "both", out, only, case_id, p_text,
                table_data, filter;
    bool global = false, catalog = false;

    auto* check = app.add_subcommand("check", "verify one coefficient tuple");
    check->add_option("--p", p, "characteristic (2 or 3)")->required()->check(CLI::IsMember({2, 3}));
    check->add_option("--e", e, "extension degree of the coefficient field")
        ->check(CLI::Range(1, 4));
    check->add_option("--lie", lie, "lie type")->required();
    check->add_option("--a", a, "alpha coefficients a0,a1[,a2], low degree first")->required();
    check->add_option("--b", b, "beta coefficients b0,b1[,b2]")->required();
    check->add_option("--c", c, "dt coefficients c0..c(i+2)")->required();
    check->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    auto* verify = app.add_subcommand("verify-tables", "verify the constraint tables");
    verify->add_option("--p", p, "characteristic")->required()->check(CLI::IsMember({2, 3}));
    verify->add_option("--lie", lie, "restrict to one lie type");
    verify->add_option("--mode", mode, "symbolic, exhaustive or both")
        ->check(CLI::IsMember({"symbolic", "exhaustive", "both"}));
    verify->add_option("--e", e, "extension degree for the exhaustive scan")->check(CLI::Range(1, 2));
    verify->add_option("--out", out, "write the JSON report here");
    verify->add_option("--table-data", table_data, "replace the built-in row data (JSON file)");

    auto* census = app.add_subcommand("census", "enumerate all degree-bounded derivations");
    census->add_option("--p", p, "characteristic")->required()->check(CLI::IsMember({2, 3}));
    census->add_option("--e", e, "extension degree")->check(CLI::Range(1, 2));
    census->add_option("--lie", lie, "lie type")->required();
    census->add_option("--filter", filter, "comma list of p-closed, saturated, inseparable");
    census->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    census->add_option("--out", out, "output file (stdout if omitted)");

    auto* gallery = app.add_subcommand("gallery", "re-verify the worked examples");
    gallery->add_option("--only", only, "run a single example");
    gallery->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* torsion = app.add_subcommand("torsion", "torsion-order divisors of K_X");
    torsion->add_option("--case", case_id, "case id, e.g. C2.1a or C1.b");
    torsion->add_option("--p", p_text, "characteristic (2, 3, a prime, or 'generic')");
    torsion->add_flag("--global", global, "print the lcm over all admissible cases");
    torsion->add_flag("--catalog", catalog, "dump the catalog as JSON");
    torsion->add_option("--n", n_filter, "filter the bielliptic list by cyclic order");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& ex) {
        return app.exit(ex);
    } catch (const CLI::ParseError& ex) {
        app.exit(ex);
        return kUsage;
    }

    try {
        if (check->parsed())
            return cmd_check(p, e, lie, a, b, c, format);
        if (verify->parsed())
            return cmd_verify_tables(p, lie, mode, e, out, table_data);
        if (census->parsed())
            return cmd_census(p, e, lie, filter, format, out);
        if (gallery->parsed())
            return cmd_gallery(only, format);
        if (torsion->parsed())
            return cmd_torsion(case_id, p_text, global, catalog, n_filter);
    } catch (const ConstraintError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kUsage;
    } catch (const DegenerateInputError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kUsage;
    } catch (const std::exception& ex) {
        std::cerr << "internal error: " << ex.what() << "\n";
        return kEnv;
    }
    return kUsage;
}
