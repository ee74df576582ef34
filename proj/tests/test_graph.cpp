#include <doctest.h>

#include "minkdef/graph.hpp"

#include <json.hpp>

#include <fstream>
#include <set>

using namespace minkdef;

namespace {

const FieldCtx kQ = FieldCtx::rationals();

Point pt(std::vector<Rat> coords) { return Point::of_rats(kQ, std::move(coords)); }

} // namespace

TEST_CASE("enumeration of the two-quantifier shapes") {
    auto graphs = enumerate_nrf2(RelKind::Timelike);
    CHECK(graphs.size() == 32);
    std::set<LabeledGraph> unique(graphs.begin(), graphs.end());
    CHECK(unique.size() == 32);
    // extremes: the all-rho and the all-coarse labelings are present
    bool all_rho = false, all_coarse = false;
    for (const auto& g : graphs) {
        bool rho = true, coarse = true;
        for (const auto& [e, l] : g.edges()) {
            rho = rho && l == rels::tau;
            coarse = coarse && l == rels::ntau_ne;
        }
        all_rho = all_rho || rho;
        all_coarse = all_coarse || coarse;
        CHECK(g.edges().size() == 5);
        CHECK(!g.edge(0, 1).has_value()); // free pair unconstrained
    }
    CHECK(all_rho);
    CHECK(all_coarse);
}

TEST_CASE("orbit count under the two vertex swaps") {
    CHECK(nrf2_orbit_count() == 14);
    auto reps = enumerate_nrf2_up_to_symmetry(RelKind::Timelike);
    CHECK(reps.size() == 14);
    // representatives are genuine members of the full enumeration
    auto all = enumerate_nrf2(RelKind::Timelike);
    std::set<LabeledGraph> full(all.begin(), all.end());
    for (const auto& g : reps) CHECK(full.count(g) == 1);
}

TEST_CASE("the cached embedding fixture stays exact") {
    std::ifstream file(std::string(MINKDEF_TEST_DIR) + "/fixtures/nrf2_embeddings.json");
    REQUIRE(file.good());
    nlohmann::json j = nlohmann::json::parse(file);
    REQUIRE(j.at("entries").size() == 96);
    auto graphs = enumerate_nrf2(RelKind::Timelike);
    int per_want[3] = {0, 0, 0};
    for (const auto& e : j.at("entries")) {
        const LabeledGraph& g = graphs.at(e.at("graph").get<size_t>());
        Embedding emb;
        for (const auto& lit : e.at("coords"))
            emb.where.push_back(Point::parse(kQ, lit.get<std::string>()));
        CHECK(embedding_satisfies(g, emb));
        std::string want = e.at("want").get<std::string>();
        RelKind k = relate(emb.where[0], emb.where[1]);
        CHECK(rel_kind_name(k) == want);
        per_want[k == RelKind::Timelike ? 0 : k == RelKind::Lightlike ? 1 : 2]++;
    }
    CHECK(per_want[0] == 32);
    CHECK(per_want[1] == 32);
    CHECK(per_want[2] == 32);
}

TEST_CASE("embedding search on template shapes") {
    SUBCASE("timelike triangle embeds on a vertical chain") {
        LabeledGraph g({"x", "y", "z"});
        g.set_edge(0, 1, rels::tau);
        g.set_edge(1, 2, rels::tau);
        g.set_edge(0, 2, rels::tau);
        auto e = embed(g, kQ, 2, EmbedBudget{}, 1);
        REQUIRE(e.has_value());
        CHECK(embedding_satisfies(g, *e));
    }
    SUBCASE("a lightlike edge embeds on the diagonal") {
        LabeledGraph g({"x", "y"});
        g.set_edge(0, 1, rels::lam);
        auto e = embed(g, kQ, 2, EmbedBudget{}, 1);
        REQUIRE(e.has_value());
        CHECK(relate(e->where[0], e->where[1]) == RelKind::Lightlike);
    }
    SUBCASE("an unsatisfiable label set comes back empty") {
        LabeledGraph g({"x", "y"});
        g.set_edge(0, 1, RelSet::none());
        CHECK(!embed(g, kQ, 2, EmbedBudget{}, 1).has_value());
    }
}

TEST_CASE("exact verification rejects wrong placements") {
    LabeledGraph g({"x", "y"});
    g.set_edge(0, 1, rels::tau);
    Embedding bad{{pt({0, 0}), pt({0, 1})}};
    CHECK(!embedding_satisfies(g, bad));
    Embedding dup{{pt({0, 0}), pt({0, 0})}};
    CHECK(!embedding_satisfies(g, dup));
    Embedding good{{pt({0, 0}), pt({1, 0})}};
    CHECK(embedding_satisfies(g, good));
}

TEST_CASE("perturbing the free pair") {
    LabeledGraph g({"p", "q", "x"});
    g.set_edge(0, 2, rels::tau);
    g.set_edge(1, 2, rels::sig);
    Embedding e{{pt({0, 0}), pt({1, 1}), pt({3, -2})}};
    REQUIRE(embedding_satisfies(g, e));
    REQUIRE(relate(e.where[0], e.where[1]) == RelKind::Lightlike);

    SUBCASE("to timelike") {
        Embedding up = perturb_pq(e, g, RelKind::Timelike);
        CHECK(relate(up.where[0], up.where[1]) == RelKind::Timelike);
        CHECK(embedding_satisfies(g, up));
    }
    SUBCASE("to spacelike") {
        Embedding down = perturb_pq(e, g, RelKind::Spacelike);
        CHECK(relate(down.where[0], down.where[1]) == RelKind::Spacelike);
        CHECK(embedding_satisfies(g, down));
    }
    SUBCASE("wanting the current relation is the identity") {
        Embedding same = perturb_pq(e, g, RelKind::Lightlike);
        CHECK(same.where == e.where);
    }
}

TEST_CASE("the four observations") {
    LabeledGraph g({"p", "q", "x", "y"});
    g.set_edge(0, 2, rels::tau);
    g.set_edge(1, 2, rels::sig);
    g.set_edge(2, 3, rels::tau);
    g.set_edge(0, 3, rels::sig);
    g.set_edge(1, 3, rels::sig);

    SUBCASE("induced subgraphs keep their part of an embedding") {
        Embedding e{{pt({0, 0}), pt({0, 1}), pt({rat(7, 2), Rat(-3)}), pt({1, -5})}};
        REQUIRE(embedding_satisfies(g, e));
        LabeledGraph sub = o1_induced(g, {0, 1, 2});
        Embedding rest{{e.where[0], e.where[1], e.where[2]}};
        CHECK(embedding_satisfies(sub, rest));
        CHECK(sub.size() == 3);
        CHECK(sub.edge(0, 2).has_value());
        CHECK(!sub.edge(0, 1).has_value());
    }
    SUBCASE("weakening labels preserves satisfaction") {
        LabeledGraph weak = o2_weaken(g, rels::sig, rels::ntau_ne);
        Embedding e{{pt({0, 0}), pt({0, 1}), pt({rat(7, 2), Rat(-3)}), pt({1, -5})}};
        CHECK(embedding_satisfies(weak, e));
        CHECK_THROWS_AS(o2_weaken(g, rels::ntau_ne, rels::sig), NotASubset);
    }
    SUBCASE("lifting pads zero coordinates") {
        Embedding e{{pt({0, 0}), pt({1, 1})}};
        Embedding lifted = o3_lift(e, 3);
        CHECK(lifted.where[0] == pt({0, 0, 0}));
        CHECK(lifted.where[1] == pt({1, 1, 0}));
        CHECK(relate(lifted.where[0], lifted.where[1]) == RelKind::Lightlike);
    }
    SUBCASE("swapping tau and sigma relabels and stays embeddable") {
        LabeledGraph all_tau({"a", "b", "c"});
        all_tau.set_edge(0, 1, rels::tau);
        all_tau.set_edge(1, 2, rels::tau);
        all_tau.set_edge(0, 2, rels::tau);
        LabeledGraph all_sig = o4_swap(all_tau);
        for (const auto& [e2, l] : all_sig.edges()) CHECK(l == rels::sig);
        auto emb = embed(all_sig, kQ, 2, EmbedBudget{}, 3);
        REQUIRE(emb.has_value());
        CHECK(embedding_satisfies(all_sig, *emb));
        // coarse labels swap their complements
        LabeledGraph coarse({"a", "b"});
        coarse.set_edge(0, 1, rels::ntau_ne);
        CHECK(o4_swap(coarse).edge(0, 1) == rels::nsig_ne);
    }
}

TEST_CASE("full relation report at n = 2 over the rationals") {
    Nrf2Report rep = nrf2_relation_report(kQ, 2, RelKind::Timelike, 7);
    CHECK(rep.graphs == 32);
    CHECK(rep.orbit_count == 14);
    CHECK(rep.complete);
    CHECK(rep.entries.size() == 96);
    auto graphs = enumerate_nrf2(RelKind::Timelike);
    for (const auto& entry : rep.entries) {
        const LabeledGraph& g = graphs[static_cast<size_t>(entry.graph_index)];
        CHECK(embedding_satisfies(g, entry.embedding));
        CHECK(relate(entry.embedding.where[0], entry.embedding.where[1]) == entry.want);
    }
}

TEST_CASE("graph json serialization") {
    LabeledGraph g({"p", "q", "x"});
    g.set_edge(0, 2, rels::tau);
    g.set_edge(1, 2, rels::ntau_ne);
    Embedding e{{pt({0, 0}), pt({0, 1}), pt({1, 0})}};
    std::string j = graph_to_json(g, &e);
    CHECK(j.find("\"label\":\"tau\"") != std::string::npos);
    CHECK(j.find("\"label\":\"ntau!\"") != std::string::npos);
    CHECK(j.find("\"coords\"") != std::string::npos);
    CHECK(j.find("\"(0,1)\"") != std::string::npos);
}
