#include "ladder/io.hpp"

#include <fstream>

namespace ladder {

namespace {

using nlohmann::json;

int require_int(const json& j, const std::string& key) {
    if (!j.is_number_integer())
        throw spec_error("key '" + key + "' must be an integer");
    return j.get<int>();
}

std::vector<int> require_int_array(const json& j, const std::string& key) {
    if (!j.is_array()) throw spec_error("key '" + key + "' must be an array of integers");
    std::vector<int> out;
    for (const auto& e : j) out.push_back(require_int(e, key));
    return out;
}

} // namespace

SpecFile parse_spec(const nlohmann::json& j, bool force_raw_skew) {
    if (!j.is_object()) throw spec_error("spec must be a JSON object");
    SpecFile spec;
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw spec_error("key 'name' must be a string");
        spec.name = j["name"].get<std::string>();
    }

    const bool has_intervals = j.contains("intervals");
    const bool has_skew = j.contains("lambda") || j.contains("mu");
    if (force_raw_skew && !j.contains("lambda"))
        throw spec_error("--raw-skew requires a 'lambda' key");
    if (has_intervals && has_skew)
        throw spec_error("spec mixes 'intervals' with 'lambda'/'mu'");
    if (!has_intervals && !has_skew)
        throw spec_error("spec needs either 'intervals' or 'lambda'");

    if (has_intervals && !force_raw_skew) {
        const auto& arr = j["intervals"];
        if (!arr.is_array() || arr.empty())
            throw spec_error("key 'intervals' must be a nonempty array");
        std::vector<Interval> intervals;
        for (const auto& e : arr) {
            if (!e.is_array() || e.size() != 2)
                throw spec_error("each interval must be a [u, v] pair");
            intervals.emplace_back(require_int(e[0], "intervals"), require_int(e[1], "intervals"));
        }
        spec.intervals = std::move(intervals);
        if (j.contains("r")) spec.r = require_int(j["r"], "r");
    } else {
        if (!j.contains("lambda")) throw spec_error("raw skew spec needs a 'lambda' key");
        std::vector<int> mu;
        if (j.contains("mu")) mu = require_int_array(j["mu"], "mu");
        spec.skew = make_skew(require_int_array(j["lambda"], "lambda"), std::move(mu));
    }
    return spec;
}

SpecFile load_spec_file(const std::string& path, bool force_raw_skew) {
    std::ifstream in(path);
    if (!in) throw spec_error("cannot read spec file: " + path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw spec_error("malformed spec file " + path + ": " + e.what());
    }
    return parse_spec(j, force_raw_skew);
}

nlohmann::json report_to_json(const InvariantReport& report) {
    json j;
    json intervals = json::array();
    for (const auto& [u, v] : report.shape.intervals) intervals.push_back({u, v});
    j["intervals"] = std::move(intervals);
    j["n"] = report.shape.n;
    j["m"] = report.shape.m;
    j["r"] = report.shape.r;
    j["deltas"] = report.shape.deltas;
    j["epsilons"] = report.shape.epsilons;
    j["ell_L"] = report.ell_L;
    j["ell_M"] = report.ell_M;
    j["si_A1"] = report.si_A1;
    j["si_Ar"] = report.si_Ar;
    j["reg"] = report.reg;
    j["a_inv"] = report.a_inv;
    j["red_num"] = report.red_num;
    if (report.closed_si)
        j["si_closed_form"] = {{"value", report.closed_si->value},
                               {"provenance", report.closed_si->provenance}};
    else
        j["si_closed_form"] = nullptr;
    j["e_L"] = report.e_L.str();
    j["e_M"] = report.e_M.str();
    j["poset_card"] = report.poset_card;
    j["poset_rank"] = report.poset_rank;
    j["skew"] = {{"lambda", report.skew.lambda}, {"mu", report.skew.mu},
                 {"cells", report.skew.cells()}};
    j["degenerate"] = report.degenerate;
    return j;
}

InvariantReport report_from_json(const nlohmann::json& j) {
    InvariantReport report;
    std::vector<Interval> intervals;
    for (const auto& e : j.at("intervals"))
        intervals.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    report.shape = validate_shape(intervals, j.at("r").get<int>());
    report.ell_L = j.at("ell_L").get<int>();
    report.ell_M = j.at("ell_M").get<int>();
    report.si_A1 = j.at("si_A1").get<int>();
    report.si_Ar = j.at("si_Ar").get<int>();
    report.reg = j.at("reg").get<int>();
    report.a_inv = j.at("a_inv").get<int>();
    report.red_num = j.at("red_num").get<int>();
    if (!j.at("si_closed_form").is_null())
        report.closed_si = ClosedSi{j.at("si_closed_form").at("value").get<int>(),
                                    j.at("si_closed_form").at("provenance").get<std::string>()};
    report.e_L = BigInt(j.at("e_L").get<std::string>());
    report.e_M = BigInt(j.at("e_M").get<std::string>());
    report.poset_card = j.at("poset_card").get<int>();
    report.poset_rank = j.at("poset_rank").get<int>();
    report.skew = make_skew(j.at("skew").at("lambda").get<std::vector<int>>(),
                            j.at("skew").at("mu").get<std::vector<int>>());
    report.degenerate = j.at("degenerate").get<bool>();
    return report;
}

} // namespace ladder
