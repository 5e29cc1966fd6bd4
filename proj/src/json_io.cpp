#include "gpf/json_io.hpp"

namespace gpf {

nlohmann::ordered_json signed_count_json(int k, const SignedCount& counts) {
    nlohmann::ordered_json j;
    j["k"] = k;
    j["count"] = to_decimal(counts.total());
    j["positive"] = to_decimal(counts.pos);
    j["negative"] = to_decimal(counts.neg);
    j["sign_sum"] = to_decimal(counts.signed_sum());
    return j;
}

nlohmann::ordered_json factorisation_json(const GPGraph& g, const OneFactorisation& f) {
    nlohmann::ordered_json j;
    j["k"] = g.k();
    auto factors = nlohmann::ordered_json::array();
    for (const Matching& m : f.factors) {
        auto factor = nlohmann::ordered_json::array();
        for (int id : m) {
            const Edge& e = g.edge(id);
            factor.push_back({g.vertex_name(e.a), g.vertex_name(e.b)});
        }
        factors.push_back(std::move(factor));
    }
    j["factors"] = std::move(factors);
    return j;
}

nlohmann::ordered_json report_json(const ChoosabilityReport& report, bool include_timing) {
    nlohmann::ordered_json j;
    j["k"] = report.k;
    j["trials"] = report.trials;
    j["successes"] = report.successes;
    auto failures = nlohmann::ordered_json::array();
    for (const TrialFailure& f : report.failures) {
        nlohmann::ordered_json jf;
        jf["trial"] = f.trial;
        jf["seed"] = std::to_string(f.seed);
        failures.push_back(std::move(jf));
    }
    j["failures"] = std::move(failures);
    if (include_timing) j["elapsed_ms"] = report.elapsed_ms;
    return j;
}

}  // namespace gpf
