#include <doctest.h>

#include "minkdef/relalg.hpp"

using namespace minkdef;
using namespace minkdef::relalg;

TEST_CASE("composition table of the reduct atoms") {
    auto t = CompositionTable::standard();
    CHECK(t.at(Atom::Id, Atom::Rho) == AtomSet(Atom::Rho));
    CHECK(t.at(Atom::Rho, Atom::Id) == AtomSet(Atom::Rho));
    CHECK(t.at(Atom::Rho, Atom::Rho) == AtomSet::universal());
    CHECK(t.at(Atom::RhoBarNe, Atom::RhoBarNe) == AtomSet::universal());
    AtomSet ne = AtomSet(Atom::Rho) | AtomSet(Atom::RhoBarNe);
    CHECK(t.at(Atom::Rho, Atom::RhoBarNe) == ne);
    CHECK(t.at(Atom::RhoBarNe, Atom::Rho) == ne);
}

TEST_CASE("closure of the generated reduct") {
    auto table = CompositionTable::standard();
    auto full = closure({AtomSet(Atom::Rho), AtomSet(Atom::Id)}, table);
    CHECK(full.size() == 8);
    CHECK(full == full_candidate_set());

    auto id_only = closure({AtomSet(Atom::Id)}, table);
    CHECK(id_only.size() == 4);
    CHECK(id_only.count(AtomSet::none()) == 1);
    CHECK(id_only.count(AtomSet(Atom::Id)) == 1);
    CHECK(id_only.count(~AtomSet(Atom::Id)) == 1); // distinctness
    CHECK(id_only.count(AtomSet::universal()) == 1);

    CHECK(closure({}, table) == id_only);
}

TEST_CASE("three-variable definability decisions") {
    using K = RelKind;
    CHECK(!decide_3var_definable(RelSet{K::Lightlike}, K::Timelike));
    CHECK(!decide_3var_definable(RelSet{K::Spacelike}, K::Timelike));
    CHECK(!decide_3var_definable(RelSet{K::Timelike}, K::Spacelike));
    CHECK(!decide_3var_definable(RelSet{K::Lightlike}, K::Spacelike));
    CHECK(!decide_3var_definable(RelSet{K::Timelike}, K::Lightlike));
    CHECK(!decide_3var_definable(RelSet{K::Spacelike}, K::Lightlike));

    CHECK(decide_3var_definable(RelSet{K::Timelike}, K::Timelike));
    CHECK(decide_3var_definable(~RelSet{K::Timelike}, K::Timelike));
    CHECK(decide_3var_definable(RelSet{K::Timelike} | rels::eq, K::Timelike));
    CHECK(decide_3var_definable(rels::ne, K::Spacelike));
    CHECK(decide_3var_definable(RelSet::none(), K::Lightlike));
    CHECK(decide_3var_definable(RelSet::all(), K::Lightlike));
}

TEST_CASE("atom sets refine to the four kinds") {
    using K = RelKind;
    CHECK(atoms_to_relset(AtomSet(Atom::Rho), K::Timelike) == rels::tau);
    CHECK(atoms_to_relset(AtomSet(Atom::RhoBarNe), K::Timelike) == rels::ntau_ne);
    CHECK(atoms_to_relset(AtomSet::universal(), K::Spacelike) == RelSet::all());
    CHECK(atoms_to_relset(AtomSet(Atom::Id), K::Lightlike) == rels::eq);
}

TEST_CASE("table validation over both core relations and dimensions") {
    auto table = CompositionTable::standard();
    for (int n : {2, 3}) {
        for (RelKind rho : {RelKind::Timelike, RelKind::Spacelike, RelKind::Lightlike}) {
            Verdict v = validate_table(table, rho, FieldCtx::rationals(), n, 5);
            CHECK(v.status == Verdict::Status::Pass);
        }
    }
}

TEST_CASE("hasse covers of the eight-element algebra") {
    auto covers = hasse_covers(full_candidate_set());
    // boolean cube on three atoms: 3 + 6 + 3 covering edges
    CHECK(covers.size() == 12);
    for (const auto& [lower, upper] : covers) CHECK((lower & upper) == lower);
}
