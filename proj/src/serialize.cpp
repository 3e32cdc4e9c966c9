#include "strength/serialize.hpp"

namespace strength {

using nlohmann::json;

json to_json(const BoundsReport& r) {
    return json{
        {"n", r.n},
        {"delta", r.delta},
        {"beta", r.beta},
        {"lb_trivial", r.lb_trivial},
        {"lb_delta", r.lb_delta ? json(*r.lb_delta) : json(nullptr)},
        {"lb_beta", r.lb_beta},
        {"ub_beta", r.ub_beta},
        {"ub_trivial", r.ub_trivial},
        {"best_lb", r.best_lb},
        {"best_ub", r.best_ub},
        {"coincide", r.coincide},
        {"best_lb_source", r.best_lb_source},
        {"best_ub_source", r.best_ub_source},
    };
}

json to_json(const StrengthResult& r) {
    json out;
    out["value"] = r.is_finite() ? json(r.finite_value()) : json("infinity");
    out["certificate"] = std::string(to_string(r.certificate()));
    if (r.witness()) {
        auto labels = r.witness()->labels();
        out["witness"] = std::vector<std::size_t>(labels.begin(), labels.end());
    } else {
        out["witness"] = nullptr;
    }
    out["nodes"] = r.stats().nodes;
    out["ms"] = r.stats().ms;
    return out;
}

json to_json(const VerificationReport& r) {
    json failures = json::array();
    for (const auto& f : r.failures)
        failures.push_back({{"graph6", f.graph6}, {"expected", f.expected}, {"actual", f.actual}});
    return json{
        {"suite", r.suite},
        {"max_order", r.max_order},
        {"instances_checked", r.instances_checked},
        {"failures", failures},
        {"elapsed_ms", r.elapsed_ms},
        {"complete", r.complete},
        {"note", r.note},
        {"passed", r.passed()},
    };
}

} // namespace strength
