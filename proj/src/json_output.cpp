#include "unidom/json_output.hpp"

#include "unidom/bounds.hpp"

namespace unidom {

using nlohmann::json;

json to_json(const DominationReport& r) {
    json sets = json::array();
    for (const VertexSet& s : r.min_sets) sets.push_back(s.to_vector());
    json epn = json::object();
    for (const auto& [v, nb] : r.epn_by_dominator) epn[std::to_string(v)] = nb.to_vector();
    return {
        {"schema", kSchemaTag},
        {"gamma", r.gamma},
        {"unique", r.unique},
        {"min_sets", std::move(sets)},
        {"truncated", r.truncated},
        {"epn", std::move(epn)},
        {"perfect", r.perfectly_dominated},
        {"epn_condition", r.epn_condition_met},
        {"has_isolated", r.has_isolated},
    };
}

json to_json(const VerificationCertificate& c) {
    json checks = json::array();
    for (const auto& check : c.checks) {
        checks.push_back({{"name", check.name}, {"passed", check.passed}, {"detail", check.detail}});
    }
    return {{"schema", kSchemaTag}, {"passed", c.all_passed()}, {"checks", std::move(checks)}};
}

json to_json(const SearchResult& r) {
    return {
        {"schema", kSchemaTag},
        {"n", r.n},
        {"gamma", r.gamma},
        {"max_size", r.max_size < 0 ? json(nullptr) : json(r.max_size)},
        {"witnesses", r.witnesses},
        {"witness_count", r.witnesses.size()},
        {"graphs_scanned", r.graphs_scanned},
        {"expected_scan", r.expected_scan},
        {"umd_graphs_found", r.umd_graphs_found},
        {"elapsed_seconds", r.elapsed.count()},
        {"complete", r.complete},
    };
}

json bound_row(std::int64_t n, std::int64_t gamma) {
    const bool hypothesis = gamma >= 2 && n >= 3 * gamma;
    json row = {{"n", n}, {"gamma", gamma}};
    row["m_bipartite"] = hypothesis ? json(bipartite_bound(n, gamma)) : json(nullptr);
    row["m_fischermann"] = hypothesis ? json(fischermann_bound(n, gamma)) : json(nullptr);
    row["vizing"] = gamma >= 2 && n >= gamma ? json(to_string(vizing_bound(n, gamma))) : json(nullptr);
    row["phi"] = n >= 1 && gamma >= 1 ? json(phi(n, gamma)) : json(nullptr);
    return row;
}

}  // namespace unidom
