#include "minkdef/graph.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <tuple>

namespace minkdef {

LabeledGraph::LabeledGraph(std::vector<std::string> vertices, int free_p, int free_q)
    : vertices_(std::move(vertices)), free_p_(free_p), free_q_(free_q) {
    if (vertices_.size() < 2) throw Error("graphs need at least the free pair");
    if (free_p_ == free_q_ || free_p_ >= size() || free_q_ >= size())
        throw Error("bad free pair indices");
}

void LabeledGraph::set_edge(int a, int b, RelSet label) {
    if (a == b || a >= size() || b >= size() || a < 0 || b < 0)
        throw Error("bad edge");
    edges_[std::minmax(a, b)] = label;
}

std::optional<RelSet> LabeledGraph::edge(int a, int b) const {
    auto it = edges_.find(std::minmax(a, b));
    if (it == edges_.end()) return std::nullopt;
    return it->second;
}

bool LabeledGraph::operator<(const LabeledGraph& o) const {
    if (vertices_ != o.vertices_) return vertices_ < o.vertices_;
    auto key = [](const LabeledGraph& g) {
        std::vector<std::tuple<int, int, uint8_t>> k;
        for (const auto& [e, l] : g.edges_) k.emplace_back(e.first, e.second, l.bits());
        return k;
    };
    return key(*this) < key(o);
}

bool embedding_satisfies(const LabeledGraph& g, const Embedding& e) {
    if (static_cast<int>(e.where.size()) != g.size()) return false;
    for (int i = 0; i < g.size(); ++i)
        for (int j = i + 1; j < g.size(); ++j)
            if (e.where[static_cast<size_t>(i)] == e.where[static_cast<size_t>(j)]) return false;
    for (const auto& [edge, label] : g.edges()) {
        RelKind k = relate(e.where[static_cast<size_t>(edge.first)],
                           e.where[static_cast<size_t>(edge.second)]);
        if (!label.contains(k)) return false;
    }
    return true;
}

std::vector<LabeledGraph> enumerate_nrf2(RelKind rho) {
    RelSet rho_set{rho};
    RelSet rho_bar_ne = ~rho_set & rels::ne;
    // non-free edges on {p,q,x,y} in a fixed order
    static const std::pair<int, int> slots[5] = {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    std::vector<LabeledGraph> out;
    out.reserve(32);
    for (int mask = 0; mask < 32; ++mask) {
        LabeledGraph g({"p", "q", "x", "y"});
        for (int s = 0; s < 5; ++s)
            g.set_edge(slots[s].first, slots[s].second,
                       (mask >> s) & 1 ? rho_set : rho_bar_ne);
        out.push_back(std::move(g));
    }
    return out;
}

namespace {

// Vertex swaps x<->y and p<->q acting on the slot order (px, py, qx, qy, xy).
int nrf2_swap_action(int mask, int which) {
    auto bit = [&](int s) { return (mask >> s) & 1; };
    int b[5] = {bit(0), bit(1), bit(2), bit(3), bit(4)};
    int c[5];
    if (which == 0) { // x <-> y
        c[0] = b[1]; c[1] = b[0]; c[2] = b[3]; c[3] = b[2]; c[4] = b[4];
    } else { // p <-> q
        c[0] = b[2]; c[1] = b[3]; c[2] = b[0]; c[3] = b[1]; c[4] = b[4];
    }
    int out = 0;
    for (int s = 0; s < 5; ++s) out |= c[s] << s;
    return out;
}

std::vector<int> nrf2_orbit_representatives() {
    std::vector<int> reps;
    for (int mask = 0; mask < 32; ++mask) {
        int a = nrf2_swap_action(mask, 0);
        int b = nrf2_swap_action(mask, 1);
        int ab = nrf2_swap_action(a, 1);
        int canonical = std::min({mask, a, b, ab});
        if (mask == canonical) reps.push_back(mask);
    }
    return reps;
}

} // namespace

int nrf2_orbit_count() {
    return static_cast<int>(nrf2_orbit_representatives().size());
}

std::vector<LabeledGraph> enumerate_nrf2_up_to_symmetry(RelKind rho) {
    auto all = enumerate_nrf2(rho);
    std::vector<LabeledGraph> out;
    for (int mask : nrf2_orbit_representatives()) out.push_back(all[static_cast<size_t>(mask)]);
    return out;
}

namespace {

std::vector<Point> candidate_points(const FieldCtx& ctx, int n, long spread, int den_log2,
                                    uint64_t seed) {
    // Template anchors first (vertical chains, horizontal rows, null
    // diagonals), then the seeded-shuffled rational lattice.
    std::vector<Point> out;
    auto push = [&](long t, long x, long den) {
        std::vector<Rat> coords(static_cast<size_t>(n), Rat(0));
        coords[0] = rat(t, den);
        coords[1] = rat(x, den);
        out.push_back(Point::of_rats(ctx, coords));
    };
    for (long k = 0; k <= 3; ++k) {
        push(k, 0, 1);
        push(-k, 0, 1);
        push(0, k, 1);
        push(k, k, 1);
        push(-k, k, 1);
        push(k, -k, 1);
    }
    std::vector<Point> lattice;
    long den = 1L << den_log2;
    for (long t = -spread * den; t <= spread * den; ++t)
        for (long x = -spread * den; x <= spread * den; ++x) {
            std::vector<Rat> coords(static_cast<size_t>(n), Rat(0));
            coords[0] = rat(t, den);
            coords[1] = rat(x, den);
            lattice.push_back(Point::of_rats(ctx, coords));
        }
    Rng rng(seed);
    for (size_t i = lattice.size(); i > 1; --i)
        std::swap(lattice[i - 1], lattice[rng.below(i)]);
    out.insert(out.end(), lattice.begin(), lattice.end());
    return out;
}

bool placement_consistent(const LabeledGraph& g, const std::vector<std::optional<Point>>& placed,
                          int vertex, const Point& candidate) {
    for (int other = 0; other < g.size(); ++other) {
        if (other == vertex || !placed[static_cast<size_t>(other)]) continue;
        const Point& op = *placed[static_cast<size_t>(other)];
        if (op == candidate) return false;
        if (auto label = g.edge(vertex, other))
            if (!label->contains(relate(candidate, op))) return false;
    }
    return true;
}

bool backtrack(const LabeledGraph& g, const std::vector<Point>& candidates,
               std::vector<std::optional<Point>>& placed, int vertex, long& fuel) {
    if (vertex == g.size()) return true;
    for (const Point& c : candidates) {
        if (--fuel <= 0) return false;
        if (!placement_consistent(g, placed, vertex, c)) continue;
        placed[static_cast<size_t>(vertex)] = c;
        if (backtrack(g, candidates, placed, vertex + 1, fuel)) return true;
        placed[static_cast<size_t>(vertex)] = std::nullopt;
    }
    return false;
}

} // namespace

std::optional<Embedding> embed(const LabeledGraph& g, const FieldCtx& ctx, int n,
                               const EmbedBudget& budget, uint64_t seed) {
    // Embedding search happens in the tx-plane; higher dimensions only pad
    // zeros (the lift observation), which keeps every label exact.
    for (int step = 0; step <= budget.refine_steps; ++step) {
        long spread = budget.spread + step;
        int den = std::min(budget.max_den_log2, step);
        auto candidates = candidate_points(ctx, n, spread, den, seed + static_cast<uint64_t>(step));
        std::vector<std::optional<Point>> placed(static_cast<size_t>(g.size()));
        placed[0] = Point::origin(ctx, n);
        long fuel = 2'000'000;
        if (backtrack(g, candidates, placed, 1, fuel)) {
            Embedding e;
            for (auto& pt : placed) e.where.push_back(*pt);
            if (embedding_satisfies(g, e)) return e;
        }
    }
    return std::nullopt;
}

Embedding perturb_pq(const Embedding& e, const LabeledGraph& g, RelKind want) {
    int pi = g.free_p(), qi = g.free_q();
    if (g.edge(pi, qi)) throw Error("free pair must be unconstrained");
    const Point& p = e.where[static_cast<size_t>(pi)];
    const Point& q = e.where[static_cast<size_t>(qi)];
    if (relate(p, q) == want) return e;

    const FieldCtx& ctx = p.ctx();
    FieldElem dt = q[0] - p[0];

    auto try_delta = [&](const FieldElem& delta) -> std::optional<Embedding> {
        Embedding out = e;
        Point moved = q;
        moved[0] = moved[0] + delta;
        out.where[static_cast<size_t>(qi)] = moved;
        if (relate(p, moved) != want) return std::nullopt;
        if (!embedding_satisfies(g, out)) return std::nullopt;
        return out;
    };

    if (want == RelKind::Lightlike) {
        // Only exact: needs the spatial distance as a field element.
        FieldElem dist2(ctx);
        for (int i = 1; i < p.dim(); ++i) {
            FieldElem dx = q[i] - p[i];
            dist2 += dx * dx;
        }
        auto r = sqrt_exact(dist2);
        if (!r) throw NotAchieved("lightlike target needs a square root outside the field");
        for (const FieldElem& target : {*r, -*r}) {
            if (auto ok = try_delta(target - dt)) return *ok;
        }
        throw NotAchieved("lightlike perturbation broke a labeled edge");
    }

    // Timelike: push the time gap away from zero. Spacelike: shrink it
    // (collapsing to equal times works whenever there is any spatial
    // separation). Halving keeps the step small enough for the edges.
    int direction = dt.sign() >= 0 ? 1 : -1;
    if (want == RelKind::Spacelike) {
        if (auto ok = try_delta(-dt)) return *ok;
        direction = -direction;
    }
    FieldElem step(ctx, Rat(direction));
    FieldElem half(ctx, rat(1, 2));
    if (want == RelKind::Timelike) {
        FieldElem grow = step;
        for (int iter = 0; iter < 16; ++iter) {
            if (auto ok = try_delta(grow)) return *ok;
            grow = grow + grow;
        }
    }
    FieldElem delta = step;
    for (int iter = 0; iter < 64; ++iter) {
        delta = delta * half;
        if (auto ok = try_delta(delta)) return *ok;
    }
    throw NotAchieved("halving search failed to reach the wanted relation");
}

LabeledGraph o1_induced(const LabeledGraph& g, const std::vector<int>& keep) {
    std::vector<std::string> names;
    names.reserve(keep.size());
    for (int i : keep) names.push_back(g.vertices().at(static_cast<size_t>(i)));
    LabeledGraph out(names);
    for (size_t a = 0; a < keep.size(); ++a)
        for (size_t b = a + 1; b < keep.size(); ++b)
            if (auto label = g.edge(keep[a], keep[b]))
                out.set_edge(static_cast<int>(a), static_cast<int>(b), *label);
    return out;
}

LabeledGraph o2_weaken(const LabeledGraph& g, RelSet from, RelSet to) {
    if (!from.subset_of(to)) throw NotASubset();
    LabeledGraph out = g;
    for (const auto& [edge, label] : g.edges())
        if (label == from) out.set_edge(edge.first, edge.second, to);
    return out;
}

Embedding o3_lift(const Embedding& e, int n) {
    Embedding out;
    for (const Point& p : e.where) {
        if (p.dim() > n) throw WrongDimension("cannot lift downwards");
        std::vector<FieldElem> coords = p.coords();
        coords.resize(static_cast<size_t>(n), FieldElem(p.ctx()));
        out.where.emplace_back(std::move(coords));
    }
    return out;
}

LabeledGraph o4_swap(const LabeledGraph& g) {
    LabeledGraph out = g;
    for (const auto& [edge, label] : g.edges()) {
        if (label.contains(RelKind::Equal))
            throw Error("swap observation applies to labels without equality");
        bool t = label.contains(RelKind::Timelike), s = label.contains(RelKind::Spacelike);
        RelSet swapped = label;
        if (t != s) {
            swapped = (swapped & ~rels::tau) & ~rels::sig;
            if (t) swapped = swapped | rels::sig;
            if (s) swapped = swapped | rels::tau;
        }
        out.set_edge(edge.first, edge.second, swapped);
    }
    return out;
}

Nrf2Report nrf2_relation_report(const FieldCtx& ctx, int n, RelKind rho, uint64_t seed) {
    Nrf2Report report;
    report.orbit_count = nrf2_orbit_count();
    auto graphs = enumerate_nrf2(rho);
    report.graphs = static_cast<int>(graphs.size());

    RelSet rho_set{rho};
    RelSet rho_bar_ne = ~rho_set & rels::ne;
    // Strengthen the coarse labels to the opposite pure kind so that every
    // edge is an open condition; the q-perturbation then cannot break one.
    RelKind other = rho == RelKind::Timelike ? RelKind::Spacelike : RelKind::Timelike;
    RelSet strong{other};

    bool all_found = true;
    for (size_t gi = 0; gi < graphs.size(); ++gi) {
        const LabeledGraph& g = graphs[gi];
        LabeledGraph strengthened = g;
        for (const auto& [edge, label] : g.edges())
            if (label == rho_bar_ne) strengthened.set_edge(edge.first, edge.second, strong);
        LabeledGraph with_pq = strengthened;
        with_pq.set_edge(g.free_p(), g.free_q(), rels::lam);

        std::optional<Embedding> base = embed(with_pq, ctx, n, EmbedBudget{}, seed + gi);
        for (RelKind want : {RelKind::Lightlike, RelKind::Timelike, RelKind::Spacelike}) {
            std::optional<Embedding> found;
            if (base) {
                if (want == RelKind::Lightlike) {
                    found = base;
                } else {
                    try {
                        found = perturb_pq(*base, strengthened, want);
                    } catch (const NotAchieved&) {
                    }
                }
            }
            if (!found) {
                // direct search with the wanted pair relation pinned
                LabeledGraph pinned = strengthened;
                pinned.set_edge(g.free_p(), g.free_q(), RelSet{want});
                found = embed(pinned, ctx, n, EmbedBudget{}, seed + gi * 3 + 1);
            }
            if (!found || !embedding_satisfies(g, *found) ||
                relate(found->where[static_cast<size_t>(g.free_p())],
                       found->where[static_cast<size_t>(g.free_q())]) != want) {
                all_found = false;
                continue;
            }
            report.entries.push_back({static_cast<int>(gi), want, *found});
        }
    }
    report.complete = all_found && report.entries.size() == graphs.size() * 3;
    report.conclusion = report.complete
                            ? "every nrf2-definable relation meets tau, lam and sig"
                            : "embedding search incomplete";
    return report;
}

std::string graph_to_json(const LabeledGraph& g, const Embedding* e) {
    nlohmann::json j;
    j["vertices"] = g.vertices();
    j["free"] = {g.vertices()[static_cast<size_t>(g.free_p())],
                 g.vertices()[static_cast<size_t>(g.free_q())]};
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [edge, label] : g.edges()) {
        nlohmann::json je;
        je["a"] = g.vertices()[static_cast<size_t>(edge.first)];
        je["b"] = g.vertices()[static_cast<size_t>(edge.second)];
        je["label"] = label.to_string();
        edges.push_back(je);
    }
    j["edges"] = edges;
    if (e) {
        nlohmann::json coords;
        for (int i = 0; i < g.size(); ++i)
            coords[g.vertices()[static_cast<size_t>(i)]] =
                e->where[static_cast<size_t>(i)].to_string();
        j["coords"] = coords;
    }
    return j.dump();
}

} // namespace minkdef
