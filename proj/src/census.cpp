#include "pfolia/census.hpp"

#include <thread>

namespace pfolia {

using nlohmann::ordered_json;

std::string CensusFilter::to_string() const {
    std::string s;
    if (p_closed)
        s += "p-closed";
    if (saturated)
        s += std::string(s.empty() ? "" : "&") + "saturated";
    if (inseparable)
        s += std::string(s.empty() ? "" : "&") + "inseparable";
    return s.empty() ? "all" : s;
}

namespace {

struct Shard {
    std::vector<CensusRecord> records;
    std::map<std::string, uint64_t> buckets;
    uint64_t anomalies = 0;
};

void scan_range(int p, const Field& fq, LieType lie, const CensusFilter& filter, uint64_t from,
                uint64_t to, Shard& out) {
    const size_t arity = table_arity(p);
    std::vector<uint8_t> coeffs(arity, 0);
    for (uint64_t n = from; n < to; ++n) {
        uint64_t x = n;
        for (size_t k = arity; k-- > 0;) {
            coeffs[k] = uint8_t(x % fq.q());
            x /= fq.q();
        }
        Derivation d = derivation_from_coeffs(p, fq, coeffs);
        FoliationReport rep = check_rank1(d, lie);
        if (!d.is_zero())
            rep.matched_rows = matching_rows(p, lie, fq, coeffs);

        const bool inseparable = rep.separability == Separability::InseparableAlbanese;
        const bool anomaly =
            rep.p_closed && rep.saturated && inseparable && rep.matched_rows.empty();
        if (anomaly)
            out.anomalies++;

        std::string rows_key;
        for (const auto& id : rep.matched_rows)
            rows_key += (rows_key.empty() ? "" : ";") + id;
        if (rows_key.empty())
            rows_key = "-";
        out.buckets[separability_name(rep.separability) + "|" + rows_key]++;

        if ((filter.p_closed && !rep.p_closed) || (filter.saturated && !rep.saturated) ||
            (filter.inseparable && !inseparable))
            continue;
        CensusRecord rec;
        rec.coeffs = coeffs;
        rec.report = std::move(rep);
        rec.sigma_invariant = !d.is_zero() && sigma_shift_invariant(d);
        rec.anomaly = anomaly;
        out.records.push_back(std::move(rec));
    }
}

} // namespace

CensusResult enumerate_foliations(int p, int e, LieType lie, const CensusFilter& filter,
                                  int workers) {
    if (e < 1 || e > 2)
        throw ConstraintError("enumerate_foliations: e must be 1 or 2");
    if (workers < 1)
        workers = 1;
    const Field& fq = Field::get(p, e);
    const size_t arity = table_arity(p);
    uint64_t total = 1;
    for (size_t k = 0; k < arity; ++k)
        total *= uint64_t(fq.q());

    // warm up shared lazily-initialized state before spawning threads
    (void)table_for(p, lie);

    std::vector<Shard> shards(workers);
    std::vector<std::thread> threads;
    for (int wi = 0; wi < workers; ++wi) {
        uint64_t from = total * wi / workers;
        uint64_t to = total * (wi + 1) / workers;
        threads.emplace_back(scan_range, p, std::cref(fq), lie, std::cref(filter), from, to,
                             std::ref(shards[wi]));
    }
    for (auto& t : threads)
        t.join();

    CensusResult res;
    res.p = p;
    res.e = e;
    res.lie = lie;
    res.filter = filter;
    res.total_scanned = total;
    for (auto& s : shards) {
        res.anomaly_count += s.anomalies;
        for (auto& [k, v] : s.buckets)
            res.buckets[k] += v;
        res.records.insert(res.records.end(), std::make_move_iterator(s.records.begin()),
                           std::make_move_iterator(s.records.end()));
    }
    return res;
}

namespace {

std::string join_coeffs(const std::vector<uint8_t>& coeffs) {
    std::string s;
    for (uint8_t c : coeffs)
        s += (s.empty() ? "" : ",") + std::to_string(int(c));
    return s;
}

std::string join_rows(const std::vector<std::string>& rows) {
    std::string s;
    for (const auto& r : rows)
        s += (s.empty() ? "" : ";") + r;
    return s;
}

} // namespace

std::string emit_csv(const CensusResult& r) {
    std::string out;
    out += std::string("# ") + kCensusSchema + "\n";
    out += "p,e,lie,coeffs,saturated,degree_bounds_ok,p_closed,lambda,separability,det_twist,"
           "k_trivial,matched_rows,sigma_invariant,anomaly\n";
    const std::string prefix =
        std::to_string(r.p) + "," + std::to_string(r.e) + "," + lie_type_name(r.lie) + ",";
    for (const auto& rec : r.records) {
        const auto& rep = rec.report;
        out += prefix + "\"" + join_coeffs(rec.coeffs) + "\",";
        out += std::string(rep.saturated ? "true" : "false") + ",";
        out += std::string(rep.degree_bounds_ok ? "true" : "false") + ",";
        out += std::string(rep.p_closed ? "true" : "false") + ",";
        out += "\"" + (rep.lambda ? rep.lambda->to_string() : std::string("")) + "\",";
        out += separability_name(rep.separability) + ",";
        out += std::to_string(rep.det_twist) + ",";
        out += std::string(rep.k_trivial ? "true" : "false") + ",";
        out += "\"" + join_rows(rep.matched_rows) + "\",";
        out += std::string(rec.sigma_invariant ? "true" : "false") + ",";
        out += std::string(rec.anomaly ? "true" : "false") + "\n";
    }
    return out;
}

ordered_json emit_json(const CensusResult& r) {
    ordered_json j;
    j["schema"] = kCensusSchema;
    j["p"] = r.p;
    j["e"] = r.e;
    j["lie"] = lie_type_name(r.lie);
    j["filter"] = r.filter.to_string();
    j["total_scanned"] = r.total_scanned;
    j["anomaly_count"] = r.anomaly_count;
    ordered_json buckets = ordered_json::object();
    for (const auto& [k, v] : r.buckets)
        buckets[k] = v;
    j["buckets"] = buckets;
    ordered_json records = ordered_json::array();
    for (const auto& rec : r.records) {
        ordered_json rj;
        rj["coeffs"] = rec.coeffs;
        rj["saturated"] = rec.report.saturated;
        rj["degree_bounds_ok"] = rec.report.degree_bounds_ok;
        rj["p_closed"] = rec.report.p_closed;
        rj["lambda"] = rec.report.lambda ? rec.report.lambda->to_string() : "";
        rj["separability"] = separability_name(rec.report.separability);
        rj["det_twist"] = rec.report.det_twist;
        rj["k_trivial"] = rec.report.k_trivial;
        rj["matched_rows"] = rec.report.matched_rows;
        rj["sigma_invariant"] = rec.sigma_invariant;
        rj["anomaly"] = rec.anomaly;
        records.push_back(std::move(rj));
    }
    j["records"] = std::move(records);
    return j;
}

ordered_json to_json(const SymbolicReport& r) {
    ordered_json j;
    j["schema"] = "pfolia.verify.v1";
    j["mode"] = "symbolic";
    j["p"] = r.p;
    j["lie"] = lie_type_name(r.lie);
    ordered_json rows = ordered_json::array();
    for (const auto& v : r.rows) {
        ordered_json rj;
        rj["row"] = v.row;
        rj["minors_zero"] = {v.minor_ok[0], v.minor_ok[1], v.minor_ok[2]};
        ordered_json res = ordered_json::array();
        for (const auto& s : v.residual)
            if (!s.empty())
                res.push_back(s);
        rj["residuals"] = res;
        rows.push_back(std::move(rj));
    }
    j["rows"] = std::move(rows);
    j["ok"] = r.ok();
    return j;
}

ordered_json to_json(const ExhaustiveReport& r) {
    ordered_json j;
    j["schema"] = "pfolia.verify.v1";
    j["mode"] = "exhaustive";
    j["p"] = r.p;
    j["lie"] = lie_type_name(r.lie);
    j["e"] = r.e;
    j["scanned"] = r.scanned;
    j["ground_truth_count"] = r.truth_count;
    j["table_count"] = r.table_count;
    ordered_json tw = ordered_json::array(), uw = ordered_json::array();
    for (const auto& wtn : r.table_only)
        tw.push_back(wtn);
    for (const auto& wtn : r.truth_only)
        uw.push_back(wtn);
    j["witnesses_table_only"] = tw;
    j["witnesses_truth_only"] = uw;
    j["ok"] = r.ok();
    return j;
}

} // namespace pfolia
