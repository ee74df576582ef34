#include "minkdef/relalg.hpp"

#include "minkdef/rng.hpp"
#include "minkdef/transforms.hpp"

#include <json.hpp>

namespace minkdef {

const char* verdict_status_name(Verdict::Status s) {
    switch (s) {
        case Verdict::Status::Pass: return "pass";
        case Verdict::Status::Fail: return "fail";
        case Verdict::Status::Inconclusive: return "inconclusive";
    }
    return "?";
}

} // namespace minkdef

namespace minkdef::relalg {

const char* atom_name(Atom a) {
    switch (a) {
        case Atom::Id: return "id";
        case Atom::Rho: return "rho";
        case Atom::RhoBarNe: return "rho-bar-ne";
    }
    return "?";
}

std::string AtomSet::to_string() const {
    if (empty()) return "empty";
    if (*this == universal()) return "universal";
    std::string out;
    for (Atom a : {Atom::Id, Atom::Rho, Atom::RhoBarNe})
        if (contains(a)) {
            if (!out.empty()) out += "|";
            out += atom_name(a);
        }
    return out;
}

CompositionTable CompositionTable::standard() {
    CompositionTable t;
    const AtomSet U = AtomSet::universal();
    const AtomSet ne = AtomSet(Atom::Rho) | AtomSet(Atom::RhoBarNe);
    for (Atom a : {Atom::Id, Atom::Rho, Atom::RhoBarNe}) {
        t.set(Atom::Id, a, AtomSet(a));
        t.set(a, Atom::Id, AtomSet(a));
    }
    t.set(Atom::Rho, Atom::Rho, U);
    t.set(Atom::RhoBarNe, Atom::RhoBarNe, U);
    t.set(Atom::Rho, Atom::RhoBarNe, ne);
    t.set(Atom::RhoBarNe, Atom::Rho, ne);
    return t;
}

AtomSet compose(AtomSet a, AtomSet b, const CompositionTable& table) {
    AtomSet out;
    for (Atom x : {Atom::Id, Atom::Rho, Atom::RhoBarNe}) {
        if (!a.contains(x)) continue;
        for (Atom y : {Atom::Id, Atom::Rho, Atom::RhoBarNe})
            if (b.contains(y)) out = out | table.at(x, y);
    }
    return out;
}

std::set<AtomSet> closure(const std::set<AtomSet>& start, const CompositionTable& table) {
    std::set<AtomSet> out = start;
    out.insert(AtomSet(Atom::Id));
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<AtomSet> items(out.begin(), out.end());
        auto add = [&](AtomSet s) {
            if (out.insert(s).second) changed = true;
        };
        for (const AtomSet& a : items) {
            add(~a); // converse of these symmetric relations is a no-op
            for (const AtomSet& b : items) {
                add(a & b);
                add(a | b);
                add(compose(a, b, table));
            }
        }
    }
    return out;
}

std::set<AtomSet> full_candidate_set() {
    std::set<AtomSet> out;
    for (uint8_t bits = 0; bits < 8; ++bits) out.insert(AtomSet(bits));
    return out;
}

RelSet atoms_to_relset(AtomSet atoms, RelKind rho) {
    RelSet rho_set(rho);
    RelSet rest = ~(rho_set | rels::eq);
    RelSet out;
    if (atoms.contains(Atom::Id)) out = out | rels::eq;
    if (atoms.contains(Atom::Rho)) out = out | rho_set;
    if (atoms.contains(Atom::RhoBarNe)) out = out | rest;
    return out;
}

bool decide_3var_definable(RelSet target, RelKind rho) {
    // The three-variable-definable relations are exactly the members of
    // closure({rho, Id}); each is a union of the reduct atoms. A target
    // over the four kinds qualifies iff it does not split any atom.
    RelSet rho_set(rho);
    RelSet rest = ~(rho_set | rels::eq);
    for (RelSet atom : {rels::eq, rho_set, rest}) {
        RelSet hit = target & atom;
        if (!hit.empty() && hit != atom) return false;
    }
    // The closure of {rho, Id} is the full candidate set, so any union of
    // atoms is reachable.
    auto closed = closure({AtomSet(Atom::Rho), AtomSet(Atom::Id)}, CompositionTable::standard());
    AtomSet as;
    if (target.contains(RelKind::Equal)) as = as | AtomSet(Atom::Id);
    if ((target & rho_set) == rho_set && !rho_set.empty()) as = as | AtomSet(Atom::Rho);
    if ((target & rest) == rest) as = as | AtomSet(Atom::RhoBarNe);
    return closed.count(as) > 0;
}

namespace {

bool atom_holds(Atom a, const Point& p, const Point& q, RelKind rho) {
    switch (a) {
        case Atom::Id: return p == q;
        case Atom::Rho: return relate(p, q) == rho;
        case Atom::RhoBarNe: return p != q && relate(p, q) != rho;
    }
    return false;
}

/// Candidate middle points for witness triples, in growing shells.
std::vector<Point> witness_candidates(const FieldCtx& ctx, int n, const Point& p, const Point& q,
                                      int shell) {
    std::vector<Point> out;
    Rat m(1);
    for (int i = 0; i < shell; ++i) m *= 2;
    auto push = [&](std::vector<Rat> coords) {
        coords.resize(static_cast<size_t>(n), Rat(0));
        out.push_back(Point::of_rats(ctx, coords));
    };
    push({m, 0});
    push({-m, 0});
    push({0, m});
    push({0, -m});
    push({m, m});
    push({m, -m});
    push({-m, m});
    push({-m, -m});
    push({m, m - 1});
    push({m - 1, m});
    // shifted copies around both endpoints
    std::vector<Point> shifted;
    for (const Point& c : out) {
        shifted.push_back(p + c);
        shifted.push_back(q + c);
    }
    out.insert(out.end(), shifted.begin(), shifted.end());
    return out;
}

/// Exact point with w lam p and w lam q, for any p, q (used for the
/// lightlike reduct, where lattice search would almost never hit the cone).
std::optional<Point> double_lightlike_witness(const Point& p, const Point& q) {
    const FieldCtx& ctx = p.ctx();
    int n = p.dim();
    FieldElem one(ctx, Rat(1)), two(ctx, Rat(2));
    Point v = p - q;
    FieldElem qv = mink_form_vec(v);
    if (p == q) {
        Point w = p;
        w[0] += one;
        w[1] += one;
        return w;
    }
    if (qv.is_zero()) {
        // p and q on a common null line: any further point of it works.
        return q.scaled(two) - p;
    }
    // Try the axis null directions d = (1, +-e_i): w = p + s d lies on the
    // cone of q when s = -Q(v) / (2 B(v, d)).
    for (int axis = 1; axis < n; ++axis) {
        for (int sgn_dir : {1, -1}) {
            Point d = Point::origin(ctx, n);
            d[0] = one;
            d[axis] = FieldElem(ctx, Rat(sgn_dir));
            // Minkowski bilinear form B(v, d) = v0 d0 - sum v_i d_i
            FieldElem bvd = v[0] - (sgn_dir > 0 ? v[axis] : -v[axis]);
            if (bvd.is_zero()) continue;
            FieldElem s = -(qv * (two * bvd).inv());
            if (s.is_zero()) continue;
            return p + d.scaled(s);
        }
    }
    return std::nullopt;
}

std::optional<Point> find_composition_witness(Atom a, Atom b, const Point& p, const Point& q,
                                              RelKind rho) {
    if (a == Atom::Id) return atom_holds(b, p, q, rho) ? std::optional<Point>(p) : std::nullopt;
    if (b == Atom::Id) return atom_holds(a, p, q, rho) ? std::optional<Point>(q) : std::nullopt;

    const FieldCtx& ctx = p.ctx();
    int n = p.dim();
    if (rho == RelKind::Lightlike && a == Atom::Rho && b == Atom::Rho) {
        if (auto w = double_lightlike_witness(p, q))
            if (atom_holds(a, p, *w, rho) && atom_holds(b, *w, q, rho)) return w;
    }
    for (int shell = 0; shell < 14; ++shell)
        for (const Point& w : witness_candidates(ctx, n, p, q, shell))
            if (atom_holds(a, p, w, rho) && atom_holds(b, w, q, rho)) return w;
    return std::nullopt;
}

} // namespace

Verdict validate_table(const CompositionTable& table, RelKind rho, const FieldCtx& ctx, int n,
                       uint64_t seed) {
    Verdict v;
    v.id = "relalg-table";
    v.seed = seed;
    v.status = Verdict::Status::Pass;

    // Sample pairs for each atom: equal pair, a rho pair, and pairs of the
    // two remaining kinds for the coarse atom.
    auto pairs_for_atom = [&](Atom c) {
        std::vector<std::pair<Point, Point>> out;
        Point o = Point::origin(ctx, n);
        if (c == Atom::Id) {
            out.emplace_back(o, o);
            out.emplace_back(o + Point::of_rats(ctx, std::vector<Rat>(static_cast<size_t>(n), Rat(1))),
                             o + Point::of_rats(ctx, std::vector<Rat>(static_cast<size_t>(n), Rat(1))));
            return out;
        }
        auto push_kind = [&](RelKind k) {
            auto [cp, cq] = canonical_pair_points(ctx, n, k);
            out.emplace_back(cp, cq);
            // a translated, scaled copy for variety
            Point shift = Point::of_rats(ctx, [&] {
                std::vector<Rat> s(static_cast<size_t>(n), Rat(0));
                s[0] = Rat(-3);
                s[1] = Rat(2);
                return s;
            }());
            out.emplace_back(cp.scaled(FieldElem(ctx, Rat(5))) + shift,
                             cq.scaled(FieldElem(ctx, Rat(5))) + shift);
        };
        if (c == Atom::Rho) {
            push_kind(rho);
        } else {
            for (RelKind k : {RelKind::Timelike, RelKind::Lightlike, RelKind::Spacelike})
                if (k != rho) push_kind(k);
        }
        return out;
    };

    for (Atom a : {Atom::Id, Atom::Rho, Atom::RhoBarNe}) {
        for (Atom b : {Atom::Id, Atom::Rho, Atom::RhoBarNe}) {
            AtomSet claimed = table.at(a, b);
            for (Atom c : {Atom::Id, Atom::Rho, Atom::RhoBarNe}) {
                if (claimed.contains(c)) {
                    for (const auto& [p, q] : pairs_for_atom(c)) {
                        if (!atom_holds(c, p, q, rho)) continue;
                        ++v.trials;
                        auto w = find_composition_witness(a, b, p, q, rho);
                        if (!w) {
                            v.status = Verdict::Status::Fail;
                            Assignment asg;
                            asg.set("p", p.to_string());
                            asg.set("q", q.to_string());
                            v.counterexample = asg;
                            v.note("no witness for " + std::string(atom_name(c)) + " in " +
                                   atom_name(a) + ";" + atom_name(b));
                            return v;
                        }
                    }
                } else {
                    // Exclusions in this table are exactly the identity
                    // cells; they follow from atom disjointness: a middle
                    // point would have to relate to the same point by two
                    // different atoms.
                    bool structurally_impossible =
                        (c == Atom::Id && a != b) ||
                        (a == Atom::Id && b != c) || (b == Atom::Id && a != c);
                    if (!structurally_impossible) {
                        v.status = Verdict::Status::Inconclusive;
                        v.note("exclusion " + std::string(atom_name(c)) + " from " + atom_name(a) +
                               ";" + atom_name(b) + " not certified");
                        return v;
                    }
                }
            }
        }
    }
    v.note("inclusions by exact witness triples; exclusions by atom disjointness");
    return v;
}

std::vector<std::pair<AtomSet, AtomSet>> hasse_covers(const std::set<AtomSet>& sets) {
    std::vector<std::pair<AtomSet, AtomSet>> out;
    auto subset = [](AtomSet a, AtomSet b) { return (a & b) == a; };
    for (AtomSet lower : sets)
        for (AtomSet upper : sets) {
            if (lower == upper || !subset(lower, upper)) continue;
            bool covering = true;
            for (AtomSet mid : sets) {
                if (mid == lower || mid == upper) continue;
                if (subset(lower, mid) && subset(mid, upper)) {
                    covering = false;
                    break;
                }
            }
            if (covering) out.emplace_back(lower, upper);
        }
    return out;
}

std::string hasse_to_json(const std::set<AtomSet>& sets) {
    nlohmann::json j;
    nlohmann::json nodes = nlohmann::json::array();
    for (const AtomSet& s : sets) nodes.push_back(s.to_string());
    j["nodes"] = nodes;
    nlohmann::json covers = nlohmann::json::array();
    for (const auto& [lower, upper] : hasse_covers(sets))
        covers.push_back({lower.to_string(), upper.to_string()});
    j["covers"] = covers;
    return j.dump();
}

} // namespace minkdef::relalg
