#pragma once

#include "minkdef/sampling.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace minkdef {

struct NotASubset : Error {
    NotASubset() : Error("label weakening needs from as a subset of to") {}
};
struct NotAchieved : Error {
    explicit NotAchieved(const std::string& what) : Error(what) {}
};

/// Simple undirected graph with RelSet-labeled edges and a designated free
/// pair of vertices (indices 0 and 1 by convention).
class LabeledGraph {
  public:
    explicit LabeledGraph(std::vector<std::string> vertices, int free_p = 0, int free_q = 1);

    int size() const { return static_cast<int>(vertices_.size()); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    int free_p() const { return free_p_; }
    int free_q() const { return free_q_; }

    void set_edge(int a, int b, RelSet label);
    std::optional<RelSet> edge(int a, int b) const;
    const std::map<std::pair<int, int>, RelSet>& edges() const { return edges_; }

    bool operator==(const LabeledGraph& o) const {
        return vertices_ == o.vertices_ && edges_ == o.edges_;
    }
    bool operator<(const LabeledGraph& o) const;

  private:
    std::vector<std::string> vertices_;
    int free_p_, free_q_;
    std::map<std::pair<int, int>, RelSet> edges_;
};

/// Injective placement of the vertices; labels are re-checked exactly by
/// embedding_satisfies, independent of how the embedding was found.
struct Embedding {
    std::vector<Point> where;
};

bool embedding_satisfies(const LabeledGraph& g, const Embedding& e);

/// All 32 labelings of the five non-free edges on vertices {p,q,x,y} with
/// labels rho / rho-bar-ne; the non-requiring fastidious two-quantifier
/// shapes.
std::vector<LabeledGraph> enumerate_nrf2(RelKind rho);

/// Orbit count of the 32 labelings under the symmetries x<->y and p<->q.
int nrf2_orbit_count();
/// One representative labeling per orbit.
std::vector<LabeledGraph> enumerate_nrf2_up_to_symmetry(RelKind rho);

struct EmbedBudget {
    long spread = 4;       // largest |numerator| in candidate coordinates
    int max_den_log2 = 1;  // densest candidate lattice: denominators 2^k
    int refine_steps = 2;  // how many lattice refinements to try
};

/// Template-then-lattice embedding search; exact verification on return.
/// nullopt is not a proof of non-embeddability.
std::optional<Embedding> embed(const LabeledGraph& g, const FieldCtx& ctx, int n,
                               const EmbedBudget& budget, uint64_t seed);

/// Moves the free-pair image along the time axis by a halving-search
/// amount until the pair relates as `want`, keeping every labeled edge
/// exactly satisfied. The free pair must be unconstrained in g.
Embedding perturb_pq(const Embedding& e, const LabeledGraph& g, RelKind want);

LabeledGraph o1_induced(const LabeledGraph& g, const std::vector<int>& keep);
LabeledGraph o2_weaken(const LabeledGraph& g, RelSet from, RelSet to);
Embedding o3_lift(const Embedding& e, int n);
LabeledGraph o4_swap(const LabeledGraph& g);

struct Nrf2Entry {
    int graph_index;
    RelKind want;
    Embedding embedding;
};

struct Nrf2Report {
    std::vector<Nrf2Entry> entries;
    int graphs = 0;
    int orbit_count = 0;
    bool complete = false;
    std::string conclusion;
};

/// For each of the 32 graphs and each target relation between the free
/// pair, an exact embedding into (Q^n, rho); the computational content of
/// the no-two-quantifier-definition results.
Nrf2Report nrf2_relation_report(const FieldCtx& ctx, int n, RelKind rho, uint64_t seed);

/// JSON text {vertices, free, edges:[{a,b,label}], coords?}.
std::string graph_to_json(const LabeledGraph& g, const Embedding* e = nullptr);

} // namespace minkdef
