// Regenerates the cached embedding fixture: every two-quantifier shape with
// every free-pair relation, found by the seeded search and dumped with exact
// coordinates. Usage: minkdef_nrf2_fixture_gen > fixtures/nrf2_embeddings.json

#include "minkdef/graph.hpp"

#include <json.hpp>

#include <iostream>

using namespace minkdef;

int main() {
    const FieldCtx ctx = FieldCtx::rationals();
    const uint64_t seed = 7;
    Nrf2Report rep = nrf2_relation_report(ctx, 2, RelKind::Timelike, seed);
    if (!rep.complete) {
        std::cerr << "embedding search incomplete; refusing to write a fixture\n";
        return 1;
    }
    nlohmann::json j;
    j["field"] = ctx.to_string();
    j["n"] = 2;
    j["seed"] = seed;
    j["rho"] = "tau";
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& entry : rep.entries) {
        nlohmann::json e;
        e["graph"] = entry.graph_index;
        e["want"] = rel_kind_name(entry.want);
        nlohmann::json coords = nlohmann::json::array();
        for (const Point& pt : entry.embedding.where) coords.push_back(pt.to_string());
        e["coords"] = coords;
        entries.push_back(e);
    }
    j["entries"] = entries;
    std::cout << j.dump(1) << "\n";
    return 0;
}
