#pragma once

#include "minkdef/graph.hpp"
#include "minkdef/relalg.hpp"
#include "minkdef/witness.hpp"

namespace minkdef {

struct RegimeViolation : Error {
    explicit RegimeViolation(const std::string& what) : Error(what) {}
};

/// One registered theorem check. Outside [min_n, max_n] (or with the wrong
/// field for the quadratic-extension demonstration) the machinery cannot
/// even be instantiated and the run reports RegimeViolation. Plans with
/// theorem_max_n set keep running above it and demonstrate failure with
/// the explicit counterexample instead.
struct CheckPlan {
    std::string id;
    std::string formula; // primary builtin exercised, empty for structural plans
    std::string description;
    int min_n = 2;
    int max_n = 0; // 0 = unbounded
    bool requires_quad_sqrt2 = false;
    int theorem_max_n = 0;
};

const std::vector<CheckPlan>& all_check_plans();
const CheckPlan& check_plan(const std::string& id); // UnknownName

/// Runs `trials` seeded trials per relation kind (structural plans run a
/// fixed exact computation instead). Deterministic for a fixed seed:
/// trials fan out over worker threads but merge by index.
Verdict run_check(const CheckPlan& plan, const FieldCtx& ctx, int n, long trials, uint64_t seed);
Verdict run_check(const std::string& id, const FieldCtx& ctx, int n, long trials, uint64_t seed);

} // namespace minkdef
