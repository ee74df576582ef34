#pragma once

#include "minkdef/point.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace minkdef {

/// First-order formula over the signature {tau, lam, sig, =}. Atoms carry a
/// RelSet, so negated atomic formulas (ntau, nsig!, ...) are single atoms.
/// And/Or are n-ary and flattened at construction; ASTs are immutable.
class Formula {
  public:
    enum class Kind { Atom, Not, And, Or, Exists, Forall };

    static Formula atom(std::string lhs, RelSet rel, std::string rhs);
    static Formula negate(Formula f);
    static Formula conj(std::vector<Formula> children);
    static Formula disj(std::vector<Formula> children);
    static Formula exists(std::string var, Formula body);
    static Formula forall(std::string var, Formula body);

    Kind kind() const { return kind_; }
    const std::string& lhs() const { return lhs_; }
    const std::string& rhs() const { return rhs_; }
    RelSet rel() const { return rel_; }
    const std::string& var() const { return var_; }
    const std::vector<Formula>& children() const { return children_; }
    const Formula& child(size_t i = 0) const { return children_.at(i); }

    bool operator==(const Formula& o) const;
    bool operator!=(const Formula& o) const { return !(*this == o); }

    bool is_quantifier_free() const;
    /// Free variables in order of first appearance.
    std::vector<std::string> free_vars() const;
    /// Distinct variable names (free and bound) in order of first appearance.
    std::vector<std::string> all_vars() const;

  private:
    Formula() = default;
    Kind kind_ = Kind::Atom;
    std::string lhs_, rhs_; // atom operands
    RelSet rel_;
    std::string var_; // quantified variable
    std::vector<Formula> children_;
};

/// Quantifier prefix reachable by the standard prenexing rewrites.
struct PrefixClass {
    struct Block {
        bool universal;
        int count;
    };
    std::vector<Block> blocks; // empty = quantifier free
    bool other = false;

    bool is_qf() const { return !other && blocks.empty(); }
    /// "QF", "E3", "A1E1", "A2E2", ... or "other".
    std::string to_string() const;
};

PrefixClass classify_prefix(const Formula& f);
/// Number of distinct variable names used (free and bound, reuse counted once).
int count_variables(const Formula& f);

using Env = std::map<std::string, Point>;

/// Truth value of a quantifier-free formula under an assignment of points.
/// Throws UnboundVariable for missing variables and Error when f has
/// quantifiers.
bool eval_qf(const Formula& f, const Env& env);

/// Negation normal form: negations folded into atom masks and through
/// connectives/quantifiers.
Formula to_nnf(const Formula& f);

/// Exchanges two relation kinds in every atom mask (used for the tau/sigma
/// mirror formulas and the swap observation on labeled graphs).
Formula swap_relations(const Formula& f, RelKind a, RelKind b);

Formula parse_formula(const std::string& text);
std::string print_formula(const Formula& f);

} // namespace minkdef
