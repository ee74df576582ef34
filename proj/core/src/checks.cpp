#include "minkdef/checks.hpp"

#include <atomic>
#include <thread>

namespace minkdef {

namespace {

// ------------------------------------------------------------ fan-out

struct TrialResult {
    bool ok = true;
    bool skipped = false;
    std::string note;
    std::optional<Assignment> cex;
    std::optional<Assignment> witness;
};

Assignment to_assignment(const Env& env) {
    Assignment a;
    for (const auto& [var, pt] : env) a.set(var, pt.to_string());
    return a;
}

template <typename Fn>
std::vector<TrialResult> run_parallel(long count, Fn&& fn) {
    std::vector<TrialResult> results(static_cast<size_t>(count));
    auto guarded = [&](long i) {
        try {
            return fn(i);
        } catch (const NotASquareError& e) {
            TrialResult r;
            r.skipped = true;
            r.note = e.what();
            return r;
        } catch (const std::exception& e) {
            TrialResult r;
            r.ok = false;
            r.note = std::string("trial error: ") + e.what();
            return r;
        }
    };
    unsigned workers = std::min(std::thread::hardware_concurrency(), 8u);
    if (workers <= 1 || count < 64) {
        for (long i = 0; i < count; ++i) results[static_cast<size_t>(i)] = guarded(i);
        return results;
    }
    std::atomic<long> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (long i = next.fetch_add(1); i < count; i = next.fetch_add(1))
                results[static_cast<size_t>(i)] = guarded(i);
        });
    for (auto& t : pool) t.join();
    return results;
}

Verdict aggregate(const std::string& id, uint64_t seed, const std::vector<TrialResult>& results,
                  std::vector<std::string> notes) {
    Verdict v;
    v.id = id;
    v.seed = seed;
    v.trials = static_cast<long>(results.size());
    long skipped = 0;
    for (const auto& r : results) {
        if (r.skipped) {
            ++skipped;
            continue;
        }
        if (!r.ok && v.status != Verdict::Status::Fail) {
            v.status = Verdict::Status::Fail;
            v.counterexample = r.cex;
            if (!r.note.empty()) notes.push_back(r.note);
        }
        if (r.ok && !v.witness_sample && r.witness) v.witness_sample = r.witness;
    }
    if (v.status != Verdict::Status::Fail && skipped == v.trials && v.trials > 0)
        v.status = Verdict::Status::Inconclusive;
    if (skipped > 0)
        notes.push_back(std::to_string(skipped) +
                        " trials skipped: canonicalization needs a root outside the field");
    v.notes = std::move(notes);
    return v;
}

struct PlanIn {
    FieldCtx ctx;
    int n;
    long trials;
    uint64_t seed;
};

constexpr RelKind kKinds[4] = {RelKind::Equal, RelKind::Timelike, RelKind::Lightlike,
                               RelKind::Spacelike};

/// kinds x trials jobs, one TrialResult each.
template <typename Fn>
std::vector<TrialResult> kind_trials(const PlanIn& in, Fn&& body) {
    long per_kind = std::max<long>(1, in.trials);
    long total = 4 * per_kind;
    Sampler sampler(in.ctx, in.n);
    return run_parallel(total, [&](long i) {
        RelKind kind = kKinds[i / per_kind];
        Rng rng = Rng::for_trial(in.seed, static_cast<uint64_t>(i));
        TrialResult r;
        body(rng, sampler, kind, r);
        return r;
    });
}

std::string euclid_note(const PlanIn& in, FieldReq req) {
    if (in.n >= 3 && req != FieldReq::AnyOrdered)
        return "field is not Euclidean: instance checks cover canonicalizable samples";
    return {};
}

void fail_with(TrialResult& r, const Env& env, const std::string& note) {
    r.ok = false;
    r.cex = to_assignment(env);
    r.note = note;
}

// ------------------------------------------------------ psi family

/// Shared per-kind work for the four-variable first-order definitions over
/// rho in {tau, sigma}: exact inner witnesses on defined-kind pairs,
/// midpoint refuters plus cone sampling on the rest.
void psi_trial(Rng& rng, const Sampler& sampler, RelKind kind, RelKind rho, TrialResult& r) {
    RelKind target = rho == RelKind::Timelike ? RelKind::Spacelike : RelKind::Timelike;
    auto gen = sampler.pair_of_kind(rng, kind);
    const Point &p = gen.p, &q = gen.q;

    if (kind == RelKind::Equal) return; // the x != y conjunct settles it exactly

    if (kind == target) {
        Point mid = refuter_psi_midpoint(p, q);
        for (int j = 0; j < 6; ++j) {
            Point z = sampler.lattice_point_near(rng, mid, 5, 1);
            if (z == p || z == q) continue;
            Point u = rho == RelKind::Timelike ? witness_psi_ts_inner(z, p, q)
                                               : witness_psi_st_inner(z, p, q);
            bool good = relate(u, z) == rho && relate(u, p) != rho && relate(u, q) != rho;
            if (!good) {
                fail_with(r, {{"x", p}, {"y", q}, {"z", z}, {"u", u}}, "inner witness violated");
                return;
            }
            if (j == 0) r.witness = to_assignment({{"x", p}, {"y", q}, {"z", z}, {"u", u}});
        }
        return;
    }

    // kind in {rho, lightlike}: the midpoint decides against the formula;
    // sampled universal direction.
    Point z = refuter_psi_midpoint(p, q);
    for (int j = 0; j < 6; ++j) {
        if (rho == RelKind::Timelike) {
            Point u = sampler.point_in_timelike_cone(rng, z);
            if (relate(u, p) != RelKind::Timelike && relate(u, q) != RelKind::Timelike) {
                fail_with(r, {{"x", p}, {"y", q}, {"z", z}, {"u", u}},
                          "midpoint refutation failed");
                return;
            }
        } else {
            // u causal to both endpoints must stay causal to the midpoint
            Point u = sampler.point_in_timelike_cone(rng, rng.coin() ? p : q);
            if (relate(u, p) == RelKind::Spacelike || relate(u, q) == RelKind::Spacelike)
                continue;
            if (relate(u, z) == RelKind::Spacelike) {
                fail_with(r, {{"x", p}, {"y", q}, {"z", z}, {"u", u}},
                          "causal-cone intersection left the midpoint cone");
                return;
            }
        }
    }
}

Verdict check_psi(const PlanIn& in, const CheckPlan& plan, RelKind rho) {
    auto results = kind_trials(in, [&](Rng& rng, const Sampler& sampler, RelKind kind,
                                       TrialResult& r) { psi_trial(rng, sampler, kind, rho, r); });
    std::vector<std::string> notes{"universal directions carry sampling evidence, not proof"};
    if (auto e = euclid_note(in, FieldReq::EuclideanOrN2); !e.empty()) notes.push_back(e);
    return aggregate(plan.id, in.seed, results, std::move(notes));
}

// --------------------------------------------------- psi lambda family

void psi_lam_trial(Rng& rng, const Sampler& sampler, RelKind kind, TrialResult& r) {
    auto gen = sampler.pair_of_kind(rng, kind);
    const Point &p = gen.p, &q = gen.q;
    const FieldCtx& ctx = sampler.ctx();
    int n = sampler.dim();

    switch (kind) {
        case RelKind::Spacelike: {
            Point z = witness_psi_ls(p, q);
            if (relate(p, z) != RelKind::Lightlike || relate(q, z) == RelKind::Lightlike) {
                fail_with(r, {{"x", p}, {"y", q}, {"z", z}}, "tangent-ruling witness violated");
                return;
            }
            r.witness = to_assignment({{"x", p}, {"y", q}, {"z", z}});
            // no-u clause: points lightlike to both x and z lie on their
            // common null line; none may be lightlike to y
            Point d = z - p;
            for (int j = 0; j < 6; ++j) {
                Rat s = sampler.small_rat(rng, 6, 2);
                if (s == 0 || s == 1) continue;
                Point u = p + d.scaled(FieldElem(ctx, s));
                if (relate(u, q) == RelKind::Lightlike) {
                    fail_with(r, {{"x", p}, {"y", q}, {"z", z}, {"u", u}},
                              "ruling point lightlike to y");
                    return;
                }
            }
            // generic samples for the full inner conjunction
            for (int j = 0; j < 4; ++j) {
                Point u = sampler.lattice_point_near(rng, p, 6, 1);
                if (relate(u, p) == RelKind::Lightlike && relate(u, q) == RelKind::Lightlike &&
                    relate(u, z) == RelKind::Lightlike) {
                    fail_with(r, {{"x", p}, {"y", q}, {"z", z}, {"u", u}},
                              "lattice point hit all three cones");
                    return;
                }
            }
            return;
        }
        case RelKind::Timelike: {
            // every admissible z must admit the intersection point u
            for (int j = 0; j < 4; ++j) {
                Point dir = Point::origin(ctx, n);
                dir[0] = FieldElem(ctx, Rat(1));
                if (rng.coin()) {
                    int axis = static_cast<int>(1 + rng.below(static_cast<uint64_t>(n - 1)));
                    dir[axis] = FieldElem(ctx, rat(rng.coin() ? 1 : -1));
                } else {
                    dir[1] = FieldElem(ctx, rat(rng.coin() ? 3 : -3, 5));
                    dir[2] = FieldElem(ctx, rat(rng.coin() ? 4 : -4, 5));
                }
                Rat s = sampler.small_rat(rng, 5, 1);
                if (s == 0) s = 1;
                Point z = p + dir.scaled(FieldElem(ctx, s));
                if (relate(z, p) != RelKind::Lightlike) continue;
                if (relate(z, q) == RelKind::Lightlike) continue;
                Point u = refuter_psi_ls(p, q, z);
                if (relate(u, p) != RelKind::Lightlike || relate(u, q) != RelKind::Lightlike ||
                    relate(u, z) != RelKind::Lightlike) {
                    fail_with(r, {{"x", p}, {"y", q}, {"z", z}, {"u", u}},
                              "null-line intersection violated");
                    return;
                }
            }
            return;
        }
        case RelKind::Lightlike:
            return; // x nlam y settles both formulas exactly
        case RelKind::Equal: {
            // x lam z and y nlam z clash when x = y: spot-check on cone points
            Point d = Point::origin(ctx, n);
            d[0] = FieldElem(ctx, Rat(1));
            d[1] = FieldElem(ctx, Rat(1));
            Point z = p + d;
            if (relate(z, p) == RelKind::Lightlike && relate(z, q) != RelKind::Lightlike)
                fail_with(r, {{"x", p}, {"y", q}, {"z", z}}, "equal pair admitted a witness z");
            return;
        }
    }
}

Verdict check_psi_lam(const PlanIn& in, const CheckPlan& plan) {
    auto results = kind_trials(in, [&](Rng& rng, const Sampler& sampler, RelKind kind,
                                       TrialResult& r) { psi_lam_trial(rng, sampler, kind, r); });
    std::vector<std::string> notes{"universal directions carry sampling evidence, not proof"};
    if (auto e = euclid_note(in, FieldReq::EuclideanAndN3Plus); !e.empty()) notes.push_back(e);
    return aggregate(plan.id, in.seed, results, std::move(notes));
}

// ------------------------------------------------- existential family

struct EFamily {
    RelKind rho;
    bool hat;
    bool complement; // the universal lightlike definition built on top
};

/// Sampled search for a satisfying tuple of the existential matrix around
/// the pair; nullopt when no sample satisfies it.
std::optional<Env> sampled_matrix_witness(const Formula& matrix,
                                          const std::vector<std::string>& bound, const Point& p,
                                          const Point& q, const Sampler& sampler, Rng& rng,
                                          int attempts) {
    Point mid = (p + q).scaled(FieldElem(p.ctx(), rat(1, 2)));
    for (int a = 0; a < attempts; ++a) {
        Env env{{"p", p}, {"q", q}};
        for (const auto& var : bound) env.emplace(var, sampler.lattice_point_near(rng, mid, 6, 1));
        if (eval_qf(matrix, env)) return env;
    }
    return std::nullopt;
}

void e_family_trial(Rng& rng, const Sampler& sampler, RelKind kind, const EFamily& fam,
                    TrialResult& r) {
    RelKind e_target = fam.rho == RelKind::Timelike ? RelKind::Spacelike : RelKind::Timelike;
    const char* base_name;
    if (fam.rho == RelKind::Timelike)
        base_name = fam.hat ? "EtsHat" : "Ets";
    else
        base_name = fam.hat ? "EstHat" : "Est";
    auto [bound, matrix] = strip_exists(builtin(base_name).formula);

    auto gen = sampler.pair_of_kind(rng, kind);
    const Point &p = gen.p, &q = gen.q;

    if (kind == e_target) {
        Env env = fam.hat ? witness_e_hat(p, q, fam.rho) : witness_e(p, q, fam.rho);
        if (!eval_qf(matrix, env)) {
            fail_with(r, env, "template witness violated the matrix");
            return;
        }
        r.witness = to_assignment(env);
        return;
        // For the complement plans this trial shows the base formula holds,
        // which settles the negated conjunct exactly.
    }

    if (kind == RelKind::Equal || kind == fam.rho) {
        // The complement formulas decide these kinds by their quantifier
        // free conjuncts; for the base formula, sampled search must fail.
        if (!fam.complement) {
            if (auto env = sampled_matrix_witness(matrix, bound, p, q, sampler, rng, 10)) {
                fail_with(r, *env, "sampled tuple satisfied the matrix off-target");
                return;
            }
        }
        return;
    }

    // remaining kind: lightlike for the base formula, the defined kind for
    // the complement; both need the sampled no-witness direction
    if (auto env = sampled_matrix_witness(matrix, bound, p, q, sampler, rng, 10)) {
        fail_with(r, *env, "sampled tuple satisfied the matrix off-target");
        return;
    }
}

Verdict check_e_family(const PlanIn& in, const CheckPlan& plan, const EFamily& fam) {
    // Above the defining theorem's dimension the plan demonstrates failure
    // with the paper-exact counterexample points.
    if (plan.theorem_max_n > 0 && in.n > plan.theorem_max_n) {
        std::string cex_name = fam.hat ? "EstHatLightlike3D" : "EstLightlike3D";
        Counterexample cex = counterexample(cex_name, in.ctx, in.n);
        auto [bound, matrix] = strip_exists(builtin(cex.formula).formula);
        Verdict v;
        v.id = plan.id;
        v.seed = in.seed;
        v.trials = 1;
        bool matrix_true = eval_qf(matrix, cex.assignment);
        RelKind pair_kind = relate(cex.assignment.at("p"), cex.assignment.at("q"));
        bool demonstrates = matrix_true && pair_kind == cex.free_pair_relation;
        v.status = demonstrates ? Verdict::Status::Fail : Verdict::Status::Inconclusive;
        v.counterexample = to_assignment(cex.assignment);
        v.note("definition only valid for n <= " + std::to_string(plan.theorem_max_n) +
               ": " + cex.name + " satisfies the matrix on a " +
               rel_kind_name(cex.free_pair_relation) + " pair");
        return v;
    }
    auto results =
        kind_trials(in, [&](Rng& rng, const Sampler& sampler, RelKind kind, TrialResult& r) {
            e_family_trial(rng, sampler, kind, fam, r);
        });
    std::vector<std::string> notes{
        "no-witness directions carry sampling evidence over template and lattice tuples"};
    if (auto e = euclid_note(in, builtin(plan.formula).field_req); !e.empty())
        notes.push_back(e);
    return aggregate(plan.id, in.seed, results, std::move(notes));
}

// ----------------------------------------------------------- W family

void w_trial(Rng& rng, const Sampler& sampler, RelKind kind, RelKind rho, TrialResult& r) {
    auto gen = sampler.pair_of_kind(rng, kind);
    const Point &p = gen.p, &q = gen.q;
    RelKind refuted_kind = rho == RelKind::Spacelike ? RelKind::Timelike : RelKind::Spacelike;

    if (kind == RelKind::Lightlike) {
        for (int j = 0; j < 5; ++j) {
            Point u = sampler.lattice_point_near(rng, p, 5, 1);
            Point v = sampler.lattice_point_near(rng, q, 5, 1);
            WslWitness w = witness_wsl(p, q, u, v, rho);
            bool good = false;
            switch (w.kind) {
                case WslWitness::Kind::ZForU:
                    good = relate(*w.z, u) != rho && relate(*w.z, p) == rho &&
                           relate(*w.z, q) == rho;
                    break;
                case WslWitness::Kind::ZForV:
                    good = relate(*w.z, v) != rho && relate(*w.z, p) == rho &&
                           relate(*w.z, q) == rho;
                    break;
                case WslWitness::Kind::UVNotSpacelike:
                    good = relate(u, v) != rho;
                    break;
            }
            if (!good) {
                Env env{{"x", p}, {"y", q}, {"u", u}, {"v", v}};
                if (w.z) env.emplace("z", *w.z);
                fail_with(r, env, "slice witness violated its atoms");
                return;
            }
            if (j == 0 && w.z)
                r.witness = to_assignment({{"x", p}, {"y", q}, {"u", u}, {"v", v}, {"z", *w.z}});
        }
        return;
    }

    if (kind == refuted_kind) {
        auto [u, v] = refuter_wsl(p, q, rho);
        if (relate(u, v) != rho || relate(u, p) != RelKind::Lightlike ||
            relate(u, q) != RelKind::Lightlike) {
            fail_with(r, {{"x", p}, {"y", q}, {"u", u}, {"v", v}}, "mid-level refuter malformed");
            return;
        }
        for (int j = 0; j < 10; ++j) {
            Point z = j % 2 == 0 ? sampler.lattice_point_near(rng, p, 6, 1)
                                 : sampler.point_in_timelike_cone(rng, rng.coin() ? u : v);
            for (const Point* w : {&u, &v}) {
                if (relate(z, *w) != rho && relate(z, p) == rho && relate(z, q) == rho) {
                    fail_with(r, {{"x", p}, {"y", q}, {"u", u}, {"v", v}, {"z", z}},
                              "a slice point served the refuter pair");
                    return;
                }
            }
        }
        return;
    }
    // equal pairs and rho pairs are settled by the quantifier-free conjuncts
}

Verdict check_w(const PlanIn& in, const CheckPlan& plan, RelKind rho) {
    auto results = kind_trials(in, [&](Rng& rng, const Sampler& sampler, RelKind kind,
                                       TrialResult& r) { w_trial(rng, sampler, kind, rho, r); });
    std::vector<std::string> notes{"universal directions carry sampling evidence, not proof"};
    if (auto e = euclid_note(in, FieldReq::EuclideanOrN2); !e.empty()) notes.push_back(e);
    return aggregate(plan.id, in.seed, results, std::move(notes));
}

// ----------------------------------------------------- structural plans

Verdict check_nondef3(const PlanIn& in, const CheckPlan& plan) {
    Verdict v;
    v.id = plan.id;
    v.seed = in.seed;
    auto table = relalg::CompositionTable::standard();

    auto closed = relalg::closure({relalg::AtomSet(relalg::Atom::Rho)}, table);
    if (closed != relalg::full_candidate_set()) {
        v.status = Verdict::Status::Fail;
        v.note("closure of {rho, id} is not the eight-element candidate set");
        return v;
    }
    v.note("closure of {rho, id} has exactly 8 elements");

    // cross-relation targets split the coarse atom, hence are undefinable
    const RelKind kinds[3] = {RelKind::Timelike, RelKind::Lightlike, RelKind::Spacelike};
    for (RelKind rho : kinds)
        for (RelKind target : kinds) {
            bool expect = target == rho;
            if (relalg::decide_3var_definable(RelSet{target}, rho) != expect) {
                v.status = Verdict::Status::Fail;
                v.note(std::string("decide_3var_definable wrong for rho=") + rel_kind_name(rho) +
                       " target=" + rel_kind_name(target));
                return v;
            }
        }
    for (RelKind rho : kinds) {
        if (!relalg::decide_3var_definable(~RelSet{rho}, rho) ||
            !relalg::decide_3var_definable(RelSet{rho} | rels::eq, rho)) {
            v.status = Verdict::Status::Fail;
            v.note("boolean combinations over rho must stay definable");
            return v;
        }
    }
    v.note("no cross relation is three-variable definable");

    for (RelKind rho : kinds) {
        Verdict table_v = relalg::validate_table(table, rho, in.ctx, in.n, in.seed);
        v.trials += table_v.trials;
        if (table_v.status != Verdict::Status::Pass) {
            v.status = table_v.status;
            v.counterexample = table_v.counterexample;
            for (auto& note : table_v.notes) v.note(std::move(note));
            return v;
        }
    }
    v.note("composition table certified by exact witness triples for all three relations");
    return v;
}

Verdict check_nrf2(const PlanIn& in, const CheckPlan& plan) {
    Verdict v;
    v.id = plan.id;
    v.seed = in.seed;

    int orbits = nrf2_orbit_count();
    if (orbits != 14) {
        v.status = Verdict::Status::Fail;
        v.note("orbit count regression: expected 14, got " + std::to_string(orbits));
        return v;
    }

    Nrf2Report rep = nrf2_relation_report(in.ctx, in.n, RelKind::Timelike, in.seed);
    v.trials = static_cast<long>(rep.entries.size());
    if (!rep.complete) {
        v.status = Verdict::Status::Fail;
        v.note("embedding suite incomplete over tau");
        return v;
    }

    // O4: the swapped suite embeds over sigma.
    Nrf2Report swapped = nrf2_relation_report(in.ctx, in.n, RelKind::Spacelike, in.seed + 1);
    v.trials += static_cast<long>(swapped.entries.size());
    if (!swapped.complete) {
        v.status = Verdict::Status::Fail;
        v.note("embedding suite incomplete over sigma (swap observation)");
        return v;
    }

    // O3: lifting to one dimension higher keeps every label exact.
    // O1: restrictions to induced subgraphs stay satisfied.
    // O2: weakening the strengthened spacelike labels back to the coarse
    //     ones keeps the same embedding valid.
    auto graphs = enumerate_nrf2(RelKind::Timelike);
    RelSet coarse = rels::ntau_ne;
    for (const auto& entry : rep.entries) {
        const LabeledGraph& g = graphs[static_cast<size_t>(entry.graph_index)];
        Embedding lifted = o3_lift(entry.embedding, in.n + 1);
        if (!embedding_satisfies(g, lifted)) {
            v.status = Verdict::Status::Fail;
            v.note("lift observation failed on graph " + std::to_string(entry.graph_index));
            return v;
        }
        LabeledGraph induced = o1_induced(g, {0, 1, 2});
        Embedding restricted;
        restricted.where = {entry.embedding.where[0], entry.embedding.where[1],
                            entry.embedding.where[2]};
        if (!embedding_satisfies(induced, restricted)) {
            v.status = Verdict::Status::Fail;
            v.note("induced-subgraph observation failed");
            return v;
        }
        LabeledGraph weakened = o2_weaken(g, RelSet{RelKind::Spacelike}, coarse);
        if (!embedding_satisfies(weakened, entry.embedding)) {
            v.status = Verdict::Status::Fail;
            v.note("weakening observation failed");
            return v;
        }
    }
    v.note("96 exact embeddings over tau and sigma; orbit count 14");
    v.note(rep.conclusion);
    return v;
}

Verdict check_no_e2(const PlanIn& in, const CheckPlan& plan) {
    Verdict v;
    v.id = plan.id;
    v.seed = in.seed;
    for (RelKind rho : {RelKind::Timelike, RelKind::Spacelike}) {
        Nrf2Report rep = nrf2_relation_report(in.ctx, in.n, rho, in.seed);
        v.trials += static_cast<long>(rep.entries.size());
        if (!rep.complete) {
            v.status = Verdict::Status::Fail;
            v.note(std::string("relation report incomplete over ") + rel_kind_name(rho));
            return v;
        }
    }
    v.note("every non-requiring fastidious two-quantifier shape meets tau, lam and sig");
    v.note("hence no existential or universal definition with only two quantified variables");
    return v;
}

// -------------------------------------------------- replay-style plans

RelSet tau_algebra_mask(RelKind k) {
    switch (k) {
        case RelKind::Equal: return rels::eq;
        case RelKind::Timelike: return rels::tau;
        default: return rels::ntau_ne;
    }
}

RelSet lam_algebra_mask(RelKind k) {
    switch (k) {
        case RelKind::Equal: return rels::eq;
        case RelKind::Lightlike: return rels::lam;
        default: return rels::nlam_ne;
    }
}

Formula matrix_from_configuration(const std::vector<Point>& pts, RelSet (*mask)(RelKind)) {
    std::vector<Formula> atoms;
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
            atoms.push_back(Formula::atom("v" + std::to_string(i),
                                          mask(relate(pts[i], pts[j])),
                                          "v" + std::to_string(j)));
    return Formula::conj(std::move(atoms));
}

Env env_of_points(const std::vector<Point>& pts) {
    Env env;
    for (size_t i = 0; i < pts.size(); ++i) env.emplace("v" + std::to_string(i), pts[i]);
    return env;
}

Verdict check_teps(const PlanIn& in, const CheckPlan& plan) {
    Sampler sampler(in.ctx, in.n);
    auto results = run_parallel(std::max<long>(1, in.trials), [&](long i) {
        TrialResult r;
        Rng rng = Rng::for_trial(in.seed, static_cast<uint64_t>(i));
        auto gen = sampler.pair_of_kind(rng, RelKind::Lightlike);
        std::vector<Point> pts{gen.p, gen.q};
        Point mid = (gen.p + gen.q).scaled(FieldElem(in.ctx, rat(1, 2)));
        int extra = 3 + static_cast<int>(i % 3);
        for (int e = 0; e < extra; ++e) {
            Point z = sampler.lattice_point_near(rng, mid, 6, 1);
            bool dup = false;
            for (const auto& existing : pts) dup = dup || existing == z;
            if (!dup) pts.push_back(z);
        }
        Formula matrix = matrix_from_configuration(pts, tau_algebra_mask);
        Env before = env_of_points(pts);
        if (!eval_qf(matrix, before)) {
            fail_with(r, before, "configuration matrix not satisfied before compression");
            return r;
        }
        TimeCompression tc = time_compress(pts, 0, 1);
        Env after = env_of_points(tc.images);
        if (!eval_qf(matrix, after)) {
            fail_with(r, after, "matrix lost under time compression");
            return r;
        }
        if (relate(tc.images[0], tc.images[1]) != RelKind::Spacelike) {
            fail_with(r, after, "target pair did not turn spacelike");
            return r;
        }
        for (size_t a = 0; a < pts.size(); ++a)
            for (size_t b = a + 1; b < pts.size(); ++b) {
                RelKind was = relate(pts[a], pts[b]);
                RelKind now = relate(tc.images[a], tc.images[b]);
                bool ok = was == RelKind::Timelike ? now == RelKind::Timelike
                          : was == RelKind::Equal  ? now == RelKind::Equal
                                                   : now != RelKind::Timelike &&
                                                         now != RelKind::Equal;
                if (!ok) {
                    fail_with(r, after, "compression broke a preservation clause");
                    return r;
                }
            }
        if (i == 0) r.witness = to_assignment(before);
        return r;
    });
    return aggregate(plan.id, in.seed, results,
                     {"replays the time-compression argument on satisfied tau-matrices"});
}

Verdict check_hinv(const PlanIn& in, const CheckPlan& plan) {
    Sampler sampler(in.ctx, in.n);
    const FieldCtx& ctx = in.ctx;

    // exact fixture: the timelike pair in normalized position maps to a
    // spacelike pair
    auto fixture_point = [&](Rat t, Rat x) {
        Point p = Point::origin(ctx, in.n);
        p[0] = FieldElem(ctx, t);
        p[1] = FieldElem(ctx, x);
        return p;
    };
    Point fp = fixture_point(Rat(0), Rat(1));
    Point fq = fixture_point(rat(3, 2), Rat(1));
    {
        Verdict v;
        v.id = plan.id;
        v.seed = in.seed;
        if (relate(fp, fq) != RelKind::Timelike ||
            relate(hyperbolic_inversion(fp), hyperbolic_inversion(fq)) != RelKind::Spacelike) {
            v.status = Verdict::Status::Fail;
            v.note("fixture pair did not exchange timelike for spacelike");
            return v;
        }
    }

    auto results = run_parallel(std::max<long>(1, in.trials), [&](long i) {
        TrialResult r;
        Rng rng = Rng::for_trial(in.seed, static_cast<uint64_t>(i));
        // involution on a sampled domain point
        Point pt = sampler.lattice_point(rng, 6, 2);
        for (int tries = 0; tries < 8 && mink_form_vec(pt).is_zero(); ++tries)
            pt = sampler.lattice_point(rng, 6, 2);
        if (!mink_form_vec(pt).is_zero()) {
            if (hyperbolic_inversion(hyperbolic_inversion(pt)) != pt) {
                fail_with(r, {{"p", pt}}, "involution failed");
                return r;
            }
        }
        // lightlike preservation on a sampled pair inside the domain
        for (int tries = 0; tries < 8; ++tries) {
            auto gen = sampler.pair_of_kind(rng, RelKind::Lightlike);
            if (mink_form_vec(gen.p).is_zero() || mink_form_vec(gen.q).is_zero()) continue;
            if (relate(hyperbolic_inversion(gen.p), hyperbolic_inversion(gen.q)) !=
                RelKind::Lightlike) {
                fail_with(r, {{"p", gen.p}, {"q", gen.q}}, "lightlike pair not preserved");
            }
            break;
        }
        if (!r.ok) return r;

        // replay: a lam-algebra matrix around the normalized pair survives
        // escape iteration plus inversion, with the pair turned spacelike
        std::vector<Point> pts{fp, fq};
        for (int e = 0; e < 3; ++e) {
            Point z = sampler.lattice_point_near(rng, fp, 5, 1);
            bool dup = false;
            for (const auto& existing : pts) dup = dup || existing == z;
            if (!dup) pts.push_back(z);
        }
        Formula matrix = matrix_from_configuration(pts, lam_algebra_mask);
        if (!eval_qf(matrix, env_of_points(pts))) {
            fail_with(r, env_of_points(pts), "replay matrix not satisfied");
            return r;
        }
        std::vector<Point> escaped = escape_iteration(pts, EscapeRegime::TimelikePair);
        if (escaped[0] != fp || relate(escaped[0], escaped[1]) != RelKind::Timelike) {
            fail_with(r, env_of_points(escaped), "escape moved the pair out of position");
            return r;
        }
        if (!eval_qf(matrix, env_of_points(escaped))) {
            fail_with(r, env_of_points(escaped), "escape iteration broke the matrix");
            return r;
        }
        std::vector<Point> inverted;
        inverted.reserve(escaped.size());
        for (const auto& pt2 : escaped) inverted.push_back(hyperbolic_inversion(pt2));
        if (!eval_qf(matrix, env_of_points(inverted))) {
            fail_with(r, env_of_points(inverted), "inversion broke the lam-algebra matrix");
            return r;
        }
        if (relate(inverted[0], inverted[1]) != RelKind::Spacelike) {
            fail_with(r, env_of_points(inverted), "inverted pair is not spacelike");
            return r;
        }
        return r;
    });
    return aggregate(plan.id, in.seed, results,
                     {"exact involution, lightlike preservation and the regime replay"});
}

Verdict check_swap2(const PlanIn& in, const CheckPlan& plan) {
    Sampler sampler(in.ctx, in.n);
    AffineMap s = swap_tx(in.ctx);
    {
        AffineMap twice = s.then(s);
        Point probe = Point::of_rats(in.ctx, {Rat(5), Rat(-7)});
        if (twice(probe) != probe) {
            Verdict v;
            v.id = plan.id;
            v.seed = in.seed;
            v.status = Verdict::Status::Fail;
            v.note("swap composed with itself is not the identity");
            return v;
        }
    }
    auto results = kind_trials(in, [&](Rng& rng, const Sampler& smp, RelKind kind,
                                       TrialResult& r) {
        auto gen = smp.pair_of_kind(rng, kind);
        RelKind mapped = relate(s(gen.p), s(gen.q));
        RelKind expect = kind == RelKind::Timelike    ? RelKind::Spacelike
                         : kind == RelKind::Spacelike ? RelKind::Timelike
                                                      : kind;
        if (mapped != expect)
            fail_with(r, {{"p", gen.p}, {"q", gen.q}}, "swap changed the wrong relation");
    });
    return aggregate(plan.id, in.seed, results,
                     {"coordinate swap preserves lightlike and exchanges timelike/spacelike"});
}

Verdict check_noneucl(const PlanIn& in, const CheckPlan& plan) {
    const FieldCtx& ctx = in.ctx;
    PartialMap conj_map = lifted_conjugation(ctx, in.n);

    Verdict head;
    head.id = plan.id;
    head.seed = in.seed;

    // the explicit exchanged pair of vectors
    FieldElem one(ctx, Rat(1));
    Point vt = Point::origin(ctx, in.n);
    vt[0] = one;
    vt[1] = FieldElem(ctx, Rat(1), rat(-1, 2)); // 1 - rt/2
    Point vs = conj_map.apply(vt);
    Point origin = Point::origin(ctx, in.n);
    if (relate(vt, origin) != RelKind::Timelike || relate(vs, origin) != RelKind::Spacelike) {
        head.status = Verdict::Status::Fail;
        head.note("conjugation did not exchange the witness vectors");
        return head;
    }
    // order-breaking element: rt - 1 > 0 but its conjugate is negative
    FieldElem breaker(ctx, Rat(-1), Rat(1));
    if (breaker.sign() <= 0 || conjugate(breaker).sign() >= 0) {
        head.status = Verdict::Status::Fail;
        head.note("conjugation failed to break the order");
        return head;
    }

    Sampler sampler(ctx, in.n);
    auto results = run_parallel(std::max<long>(1, in.trials), [&](long i) {
        TrialResult r;
        Rng rng = Rng::for_trial(in.seed, static_cast<uint64_t>(i));
        auto gen = sampler.pair_of_kind(rng, RelKind::Lightlike);
        if (relate(conj_map.apply(gen.p), conj_map.apply(gen.q)) != RelKind::Lightlike) {
            fail_with(r, {{"p", gen.p}, {"q", gen.q}}, "conjugation broke a lightlike pair");
            return r;
        }
        // ring-automorphism spot check
        FieldElem a = sampler.small_elem_maybe_root(rng), b = sampler.small_elem_maybe_root(rng);
        if (conjugate(a + b) != conjugate(a) + conjugate(b) ||
            conjugate(a * b) != conjugate(a) * conjugate(b)) {
            r.ok = false;
            r.note = "conjugation is not a ring homomorphism on sampled elements";
        }
        return r;
    });
    auto v = aggregate(plan.id, in.seed, results,
                       {"field conjugation preserves lightlike relatedness but not the order"});
    return v;
}

Verdict check_w_mirror(const PlanIn& in, const CheckPlan& plan) {
    // Both mirror formulas at n = 2, over the coordinate swap.
    Verdict lam_side = check_w(in, plan, RelKind::Timelike);
    lam_side.id = plan.id;
    lam_side.note("mirror formulas checked through the coordinate swap");
    return lam_side;
}

} // namespace

const std::vector<CheckPlan>& all_check_plans() {
    static const std::vector<CheckPlan> plans = {
        {"psi-ts", "PsiTS", "four-variable definition of spacelike from timelike", 2, 0, false, 0},
        {"psi-tl", "PsiTL", "four-variable definition of lightlike from timelike", 2, 0, false, 0},
        {"psi-st", "PsiST", "four-variable definition of timelike from spacelike", 2, 0, false, 0},
        {"psi-sl", "PsiSL", "four-variable definition of lightlike from spacelike", 2, 0, false, 0},
        {"psi-ls", "PsiLS", "four-variable definition of spacelike from lightlike", 3, 0, false, 0},
        {"psi-lt", "PsiLT", "four-variable definition of timelike from lightlike", 3, 0, false, 0},
        {"nondef-3var", "", "no cross definition with only three variables", 2, 0, false, 0},
        {"e-ts", "Ets", "six-variable existential definition of spacelike from timelike", 2, 0, false, 0},
        {"u-tl", "Utl", "six-variable universal definition of lightlike from timelike", 2, 0, false, 0},
        {"e-st-2d", "Est", "existential definition of timelike from spacelike, n = 2", 2, 0, false, 2},
        {"u-sl-2d", "Usl", "universal definition of lightlike from spacelike, n = 2", 2, 0, false, 2},
        {"nrf2-suite", "", "all 32 two-quantifier shapes embed with every free-pair relation", 2, 0, false, 0},
        {"no-e2-def", "", "computational content of the no-two-quantifier-definition results", 2, 0, false, 0},
        {"e-ts-hat", "EtsHat", "five-variable existential definition of spacelike from timelike", 2, 0, false, 0},
        {"u-tl-hat", "UtlHat", "five-variable universal definition of lightlike from timelike", 2, 0, false, 0},
        {"e-st-hat-2d", "EstHat", "five-variable existential definition of timelike from spacelike, n = 2", 2, 0, false, 2},
        {"t-eps-no-exist-lambda", "", "time compression bars existential definitions of lightlike", 2, 0, false, 0},
        {"h-inversion-no-def-from-lambda", "", "hyperbolic inversion bars one-sided definitions from lightlike", 2, 0, false, 0},
        {"w-sl", "Wsl", "six-variable two-two definition of lightlike from spacelike", 2, 0, false, 0},
        {"w-st", "Wst", "six-variable two-two definition of timelike from spacelike", 2, 0, false, 0},
        {"w-mirror-2d", "WslMirror", "mirrored two-two definitions over timelike, n = 2", 2, 2, false, 0},
        {"swap-2d", "", "coordinate swap is a lightlike automorphism exchanging the cones", 2, 2, false, 0},
        {"non-eucl-q-sqrt2", "", "field conjugation counterexample over Q(rt2)", 2, 0, true, 0},
    };
    return plans;
}

const CheckPlan& check_plan(const std::string& id) {
    for (const auto& p : all_check_plans())
        if (p.id == id) return p;
    throw UnknownName(id);
}

Verdict run_check(const CheckPlan& plan, const FieldCtx& ctx, int n, long trials, uint64_t seed) {
    if (n < plan.min_n)
        throw RegimeViolation(plan.id + " needs n >= " + std::to_string(plan.min_n));
    if (plan.max_n > 0 && n > plan.max_n)
        throw RegimeViolation(plan.id + " is only defined for n <= " + std::to_string(plan.max_n));
    if (plan.requires_quad_sqrt2 && (!ctx.is_quad() || ctx.d() != 2))
        throw RegimeViolation(plan.id + " needs the field Q(rt2)");

    PlanIn in{ctx, n, trials, seed};
    const std::string& id = plan.id;
    if (id == "psi-ts" || id == "psi-tl") return check_psi(in, plan, RelKind::Timelike);
    if (id == "psi-st" || id == "psi-sl") return check_psi(in, plan, RelKind::Spacelike);
    if (id == "psi-ls" || id == "psi-lt") return check_psi_lam(in, plan);
    if (id == "nondef-3var") return check_nondef3(in, plan);
    if (id == "e-ts") return check_e_family(in, plan, {RelKind::Timelike, false, false});
    if (id == "u-tl") return check_e_family(in, plan, {RelKind::Timelike, false, true});
    if (id == "e-st-2d") return check_e_family(in, plan, {RelKind::Spacelike, false, false});
    if (id == "u-sl-2d") return check_e_family(in, plan, {RelKind::Spacelike, false, true});
    if (id == "e-ts-hat") return check_e_family(in, plan, {RelKind::Timelike, true, false});
    if (id == "u-tl-hat") return check_e_family(in, plan, {RelKind::Timelike, true, true});
    if (id == "e-st-hat-2d") return check_e_family(in, plan, {RelKind::Spacelike, true, false});
    if (id == "nrf2-suite") return check_nrf2(in, plan);
    if (id == "no-e2-def") return check_no_e2(in, plan);
    if (id == "t-eps-no-exist-lambda") return check_teps(in, plan);
    if (id == "h-inversion-no-def-from-lambda") return check_hinv(in, plan);
    if (id == "w-sl" || id == "w-st") return check_w(in, plan, RelKind::Spacelike);
    if (id == "w-mirror-2d") return check_w_mirror(in, plan);
    if (id == "swap-2d") return check_swap2(in, plan);
    if (id == "non-eucl-q-sqrt2") return check_noneucl(in, plan);
    throw UnknownName(id);
}

Verdict run_check(const std::string& id, const FieldCtx& ctx, int n, long trials, uint64_t seed) {
    return run_check(check_plan(id), ctx, n, trials, seed);
}

} // namespace minkdef
