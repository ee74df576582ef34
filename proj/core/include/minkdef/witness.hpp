#pragma once

#include "minkdef/builtins.hpp"
#include "minkdef/sampling.hpp"
#include "minkdef/verdict.hpp"

#include <optional>
#include <utility>

namespace minkdef {

struct WrongRelation : Error {
    explicit WrongRelation(const std::string& what) : Error(what) {}
};
struct DegenerateZ : Error {
    DegenerateZ() : Error("z coincides with a free point; the equality disjunct applies") {}
};
struct WitnessNotFound : Error {
    explicit WitnessNotFound(const std::string& what) : Error(what) {}
};

/// Strips the leading existential block: returns bound variables in order
/// and the quantifier-free matrix.
std::pair<std::vector<std::string>, Formula> strip_exists(const Formula& f);

Env apply_to_env(const AffineMap& map, const Env& env);

// --- constructive builders, stated in canonical coordinates and pulled
// --- back through the pair's canonicalization ---

/// Witness {r,x,s,z} for the four-quantifier existential definition over
/// rho in {tau, sigma}; requires the pair to be of the defined kind.
Env witness_e(const Point& p, const Point& q, RelKind rho);
/// Witness {x,y,z} for the five-variable three-quantifier definition.
Env witness_e_hat(const Point& p, const Point& q, RelKind rho);

/// Inner block of the tau->sigma four-variable definition: u with
/// u tau z & u ntau p & u ntau q, for a spacelike pair p, q.
Point witness_psi_ts_inner(const Point& z, const Point& p, const Point& q);
/// Dual inner block for the sigma->tau definition: u with
/// u sig z & u nsig p & u nsig q, for a timelike pair p, q.
Point witness_psi_st_inner(const Point& z, const Point& p, const Point& q);
/// The midpoint, which the converse directions use as the decisive z.
Point refuter_psi_midpoint(const Point& p, const Point& q);

/// lam->sigma witness z: a ruling of the tangent hyperplane through q,
/// pulled back from the canonical spacelike pair. Needs n >= 3.
Point witness_psi_ls(const Point& p, const Point& q);
/// For a timelike pair and z with z lam p, z nlam q: the intersection of
/// the null line through p, z with the other null line through q in their
/// common plane; lightlike to all three points. Exact linear algebra.
Point refuter_psi_ls(const Point& p, const Point& q, const Point& z);

/// Witness for the two-plus-two-quantifier lightlike definition: a point
/// z related suitably to u (or v) and spacelike to both free points, or
/// the observation that u and v are not spacelike related.
struct WslWitness {
    enum class Kind { ZForU, ZForV, UVNotSpacelike } kind;
    std::optional<Point> z;
};
WslWitness witness_wsl(const Point& p, const Point& q, const Point& u, const Point& v,
                       RelKind rho);
/// For a timelike pair: spacelike-related u, v on the mid-level of the
/// double cone, which no z can serve.
std::pair<Point, Point> refuter_wsl(const Point& p, const Point& q, RelKind rho);

/// The explicit point sets from the dimension-raising remarks.
struct Counterexample {
    std::string name;
    std::string formula; // builtin whose matrix the points satisfy
    Env assignment;      // includes the free pair p, q
    RelKind free_pair_relation;
};
Counterexample counterexample(const std::string& name, const FieldCtx& ctx, int n);
std::vector<std::string> counterexample_names();

} // namespace minkdef
