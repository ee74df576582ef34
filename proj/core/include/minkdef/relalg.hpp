#pragma once

#include "minkdef/point.hpp"
#include "minkdef/verdict.hpp"

#include <set>
#include <vector>

namespace minkdef::relalg {

/// Atoms of the reduct generated by one relation rho: the identity, rho
/// itself, and everything else ("not rho and distinct").
enum class Atom : uint8_t { Id = 0, Rho = 1, RhoBarNe = 2 };

const char* atom_name(Atom a);

/// Subset of the three atoms, as a 3-bit mask. The eight masks are exactly
/// the candidate closure set of the three-variable argument.
class AtomSet {
  public:
    constexpr AtomSet() : bits_(0) {}
    constexpr explicit AtomSet(uint8_t bits) : bits_(bits & 0x7) {}
    constexpr AtomSet(Atom a) : bits_(static_cast<uint8_t>(1u << static_cast<uint8_t>(a))) {}

    static constexpr AtomSet none() { return AtomSet(uint8_t(0)); }
    static constexpr AtomSet universal() { return AtomSet(uint8_t(0x7)); }

    constexpr bool contains(Atom a) const { return (bits_ >> static_cast<uint8_t>(a)) & 1u; }
    constexpr uint8_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }

    constexpr AtomSet operator|(AtomSet o) const { return AtomSet(uint8_t(bits_ | o.bits_)); }
    constexpr AtomSet operator&(AtomSet o) const { return AtomSet(uint8_t(bits_ & o.bits_)); }
    constexpr AtomSet operator~() const { return AtomSet(uint8_t(~bits_ & 0x7)); }
    constexpr bool operator==(AtomSet o) const { return bits_ == o.bits_; }
    constexpr bool operator!=(AtomSet o) const { return bits_ != o.bits_; }
    constexpr bool operator<(AtomSet o) const { return bits_ < o.bits_; }

    std::string to_string() const;

  private:
    uint8_t bits_;
};

/// atom x atom -> set of atoms; the identity atom composes neutrally and
/// every atom here is symmetric, so converse is the identity operation.
class CompositionTable {
  public:
    /// rho;rho and rho_bar_ne;rho_bar_ne are universal, the mixed
    /// compositions equal distinctness, and Id is neutral.
    static CompositionTable standard();

    AtomSet at(Atom a, Atom b) const {
        return table_[static_cast<size_t>(a)][static_cast<size_t>(b)];
    }
    void set(Atom a, Atom b, AtomSet v) {
        table_[static_cast<size_t>(a)][static_cast<size_t>(b)] = v;
    }

  private:
    AtomSet table_[3][3];
};

/// Union-lifted composition of two atom sets.
AtomSet compose(AtomSet a, AtomSet b, const CompositionTable& table);

/// Least family containing `start` and the identity, closed under
/// intersection, union, complement, composition and converse.
std::set<AtomSet> closure(const std::set<AtomSet>& start, const CompositionTable& table);

/// The proof's eight-element candidate set S.
std::set<AtomSet> full_candidate_set();

/// Whether `target` (over the four Minkowski kinds) is three-variable
/// definable from rho alone: it must be a union of the rho-reduct atoms
/// and lie in the closure of {rho, Id}.
bool decide_3var_definable(RelSet target, RelKind rho);

/// Refines an atom set over rho into the four-kind mask it denotes.
RelSet atoms_to_relset(AtomSet atoms, RelKind rho);

/// Checks every cell of the table against exact witness triples in
/// (Q^n, rho): inclusion by construction, exclusion by atom disjointness.
Verdict validate_table(const CompositionTable& table, RelKind rho, const FieldCtx& ctx, int n,
                       uint64_t seed);

/// Hasse-diagram adjacency of a family of atom sets under inclusion:
/// pairs (lower, upper) of covering relations.
std::vector<std::pair<AtomSet, AtomSet>> hasse_covers(const std::set<AtomSet>& sets);

/// JSON {nodes, covers} rendering of the inclusion order, suitable for
/// drawing the Boolean-algebra diagram of a closure result.
std::string hasse_to_json(const std::set<AtomSet>& sets);

} // namespace minkdef::relalg
