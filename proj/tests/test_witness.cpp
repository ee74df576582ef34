#include <doctest.h>

#include "minkdef/witness.hpp"

using namespace minkdef;

namespace {

const FieldCtx kQ = FieldCtx::rationals();

Point pt(std::vector<Rat> coords) { return Point::of_rats(kQ, std::move(coords)); }

bool matrix_holds(const char* name, const Env& env) {
    auto [vars, matrix] = strip_exists(builtin(name).formula);
    return eval_qf(matrix, env);
}

} // namespace

TEST_CASE("four-point witnesses satisfy all eleven atoms") {
    SUBCASE("canonical spacelike pair") {
        Env env = witness_e(pt({0, 0}), pt({0, 1}), RelKind::Timelike);
        CHECK(matrix_holds("Ets", env));
    }
    SUBCASE("scaled pair") {
        Env env = witness_e(pt({0, 0}), pt({0, 3}), RelKind::Timelike);
        CHECK(matrix_holds("Ets", env));
    }
    SUBCASE("translated boosted pair in three dimensions") {
        Env env = witness_e(pt({4, 1, -2}), pt({4, 1, 5}), RelKind::Timelike);
        CHECK(matrix_holds("Ets", env));
    }
    SUBCASE("the sigma mirror on a timelike pair") {
        Env env = witness_e(pt({0, 0}), pt({1, 0}), RelKind::Spacelike);
        CHECK(matrix_holds("Est", env));
        Env moved = witness_e(pt({-3, 7}), pt({5, 7}), RelKind::Spacelike);
        CHECK(matrix_holds("Est", moved));
    }
    SUBCASE("wrong input relation is rejected") {
        CHECK_THROWS_AS(witness_e(pt({0, 0}), pt({1, 0}), RelKind::Timelike), WrongRelation);
        CHECK_THROWS_AS(witness_e(pt({0, 0}), pt({1, 1}), RelKind::Timelike), WrongRelation);
    }
}

TEST_CASE("three-point witnesses satisfy all nine atoms") {
    SUBCASE("canonical pair") {
        Env env = witness_e_hat(pt({0, 0}), pt({0, 1}), RelKind::Timelike);
        CHECK(matrix_holds("EtsHat", env));
        CHECK(env.at("y") == pt({0, rat(1, 2)})); // the midpoint of the pair
    }
    SUBCASE("translated pair") {
        Env env = witness_e_hat(pt({5, 5}), pt({5, 6}), RelKind::Timelike);
        CHECK(matrix_holds("EtsHat", env));
    }
    SUBCASE("sigma mirror") {
        Env env = witness_e_hat(pt({2, 2}), pt({3, 2}), RelKind::Spacelike);
        CHECK(matrix_holds("EstHat", env));
    }
    CHECK_THROWS_AS(witness_e_hat(pt({0, 0}), pt({1, 0}), RelKind::Timelike), WrongRelation);
}

TEST_CASE("inner witness for the timelike-to-spacelike definition") {
    Point p = pt({0, 0, 0}), q = pt({0, 1, 0});

    SUBCASE("z above the hyperplane projects down") {
        Point z = pt({1, 5, 0});
        Point u = witness_psi_ts_inner(z, p, q);
        CHECK(u == pt({0, 5, 0}));
        CHECK(relate(u, z) == RelKind::Timelike);
        CHECK(relate(u, p) == RelKind::Spacelike);
        CHECK(relate(u, q) == RelKind::Spacelike);
    }
    SUBCASE("z in the hyperplane moves half the squared distance up") {
        Point p2 = pt({0, 0}), q2 = pt({0, 1});
        Point z = pt({0, rat(1, 2)});
        Point u = witness_psi_ts_inner(z, p2, q2);
        CHECK(u == pt({rat(1, 8), rat(1, 2)}));
        CHECK(relate(u, z) == RelKind::Timelike);
        CHECK(relate(u, p2) == RelKind::Spacelike);
        CHECK(relate(u, q2) == RelKind::Spacelike);
    }
    SUBCASE("z directly above an endpoint still works") {
        Point z = pt({3, 0, 0});
        Point u = witness_psi_ts_inner(z, p, q);
        CHECK(relate(u, z) == RelKind::Timelike);
        CHECK(relate(u, p) != RelKind::Timelike);
        CHECK(relate(u, q) != RelKind::Timelike);
    }
    CHECK_THROWS_AS(witness_psi_ts_inner(p, p, q), DegenerateZ);
}

TEST_CASE("inner witness for the spacelike-to-timelike definition") {
    Point p = pt({0, 0}), q = pt({2, 0});
    SUBCASE("z off the axis meets the axis horizontally") {
        Point z = pt({1, 4});
        Point u = witness_psi_st_inner(z, p, q);
        CHECK(relate(u, z) == RelKind::Spacelike);
        CHECK(relate(u, p) != RelKind::Spacelike);
        CHECK(relate(u, q) != RelKind::Spacelike);
    }
    SUBCASE("z on the axis steps sideways") {
        Point z = pt({1, 0});
        Point u = witness_psi_st_inner(z, p, q);
        CHECK(relate(u, z) == RelKind::Spacelike);
        CHECK(relate(u, p) != RelKind::Spacelike);
        CHECK(relate(u, q) != RelKind::Spacelike);
    }
    CHECK_THROWS_AS(witness_psi_st_inner(q, p, q), DegenerateZ);
}

TEST_CASE("midpoint refuters certify the converse directions") {
    SUBCASE("timelike pair against the spacelike definition") {
        Point p = pt({0, 0}), q = pt({2, 0});
        Point z = refuter_psi_midpoint(p, q);
        CHECK(z == pt({1, 0}));
        // the listed probe: u in the timelike future of z is timelike to p
        Point u = pt({3, rat(1, 2)});
        REQUIRE(relate(u, z) == RelKind::Timelike);
        CHECK(relate(u, p) == RelKind::Timelike);
    }
    SUBCASE("lightlike pair") {
        Point p = pt({0, 0}), q = pt({1, 1});
        Point z = refuter_psi_midpoint(p, q);
        CHECK(z == pt({rat(1, 2), rat(1, 2)}));
        // points in the timelike past of z are timelike related to q
        Point u = pt({rat(-3, 2), rat(1, 2)});
        REQUIRE(relate(u, z) == RelKind::Timelike);
        CHECK((relate(u, p) == RelKind::Timelike || relate(u, q) == RelKind::Timelike));
    }
    CHECK_THROWS_AS(refuter_psi_midpoint(pt({1, 1}), pt({1, 1})), EqualPoints);
}

TEST_CASE("tangent-ruling witness for the lightlike-to-spacelike definition") {
    Point p = pt({0, 0, 0}), q = pt({0, 1, 0});
    Point z = witness_psi_ls(p, q);
    CHECK(z == pt({1, 0, 1}));
    CHECK(relate(p, z) == RelKind::Lightlike);
    CHECK(relate(q, z) == RelKind::Spacelike);
    // no point of the common null line through p and z touches the cone of q
    Point d = z - p;
    for (long num = -12; num <= 12; ++num) {
        if (num == 0) continue;
        Point u = p + d.scaled(FieldElem(kQ, rat(num, 4)));
        CHECK(relate(u, q) != RelKind::Lightlike);
    }
    CHECK_THROWS_AS(witness_psi_ls(pt({0, 0}), pt({0, 1})), WrongDimension);
}

TEST_CASE("null-line intersection refuter") {
    Point p = pt({0, 0, 0}), q = pt({2, 0, 0});
    SUBCASE("the straight diagonal z") {
        Point z = pt({2, 2, 0});
        REQUIRE(relate(z, p) == RelKind::Lightlike);
        REQUIRE(relate(z, q) == RelKind::Spacelike);
        Point u = refuter_psi_ls(p, q, z);
        CHECK(u == pt({1, 1, 0}));
        CHECK(relate(u, p) == RelKind::Lightlike);
        CHECK(relate(u, q) == RelKind::Lightlike);
        CHECK(relate(u, z) == RelKind::Lightlike);
    }
    SUBCASE("a skew z off the coordinate plane") {
        Point z = pt({rat(5, 4), rat(3, 4), Rat(1)});
        REQUIRE(relate(z, p) == RelKind::Lightlike);
        REQUIRE(relate(z, q) != RelKind::Lightlike);
        Point u = refuter_psi_ls(p, q, z);
        CHECK(relate(u, p) == RelKind::Lightlike);
        CHECK(relate(u, q) == RelKind::Lightlike);
        CHECK(relate(u, z) == RelKind::Lightlike);
    }
    SUBCASE("preconditions are enforced") {
        CHECK_THROWS_AS(refuter_psi_ls(p, q, pt({1, 1, 0})), WrongRelation); // z lam q too
        CHECK_THROWS_AS(refuter_psi_ls(p, pt({0, 1, 0}), pt({2, 2, 0})), WrongRelation);
    }
}

TEST_CASE("slice witnesses for the two-two lightlike definition") {
    Point p = pt({0, 0, 0}), q = pt({1, 1, 0});
    SUBCASE("a generic u gets a slice point") {
        Point u = pt({1, 0, 0}), v = pt({-2, 3, 1});
        WslWitness w = witness_wsl(p, q, u, v, RelKind::Spacelike);
        REQUIRE(w.kind == WslWitness::Kind::ZForU);
        CHECK(relate(*w.z, u) != RelKind::Spacelike);
        CHECK(relate(*w.z, p) == RelKind::Spacelike);
        CHECK(relate(*w.z, q) == RelKind::Spacelike);
    }
    SUBCASE("both quantified points on the segment") {
        Point u = pt({rat(1, 2), rat(1, 2), Rat(0)});
        Point v = pt({rat(3, 4), rat(3, 4), Rat(0)});
        WslWitness w = witness_wsl(p, q, u, v, RelKind::Spacelike);
        CHECK(w.kind == WslWitness::Kind::UVNotSpacelike);
        CHECK(relate(u, v) == RelKind::Lightlike);
    }
    SUBCASE("two dimensions fall back to the two slice points") {
        Point p2 = pt({0, 0}), q2 = pt({1, 1});
        Point u = pt({1, 0}), v = pt({8, -9});
        WslWitness w = witness_wsl(p2, q2, u, v, RelKind::Spacelike);
        REQUIRE(w.z.has_value());
        CHECK(relate(*w.z, p2) == RelKind::Spacelike);
        CHECK(relate(*w.z, q2) == RelKind::Spacelike);
    }
}

TEST_CASE("mid-level refuter pair for the two-two definition") {
    Point p = pt({0, 0, 0}), q = pt({2, 0, 0});
    auto [u, v] = refuter_wsl(p, q, RelKind::Spacelike);
    CHECK(u == pt({1, 1, 0}));
    CHECK(v == pt({1, -1, 0}));
    CHECK(relate(u, v) == RelKind::Spacelike);
    CHECK(relate(u, p) == RelKind::Lightlike);
    CHECK(relate(u, q) == RelKind::Lightlike);
    CHECK(relate(v, p) == RelKind::Lightlike);
    CHECK(relate(v, q) == RelKind::Lightlike);
}

TEST_CASE("the explicit dimension-three counterexamples") {
    SUBCASE("lightlike pair satisfying the four-point sigma matrix") {
        Counterexample c = counterexample("EstLightlike3D", kQ, 3);
        CHECK(relate(c.assignment.at("p"), c.assignment.at("q")) == RelKind::Lightlike);
        CHECK(matrix_holds("Est", c.assignment));
    }
    SUBCASE("spacelike pair satisfying the four-point sigma matrix") {
        Counterexample c = counterexample("EstSpacelike3D", kQ, 3);
        CHECK(relate(c.assignment.at("p"), c.assignment.at("q")) == RelKind::Spacelike);
        CHECK(matrix_holds("Est", c.assignment));
    }
    SUBCASE("lightlike pair satisfying the three-point sigma matrix") {
        Counterexample c = counterexample("EstHatLightlike3D", kQ, 3);
        CHECK(relate(c.assignment.at("p"), c.assignment.at("q")) == RelKind::Lightlike);
        CHECK(matrix_holds("EstHat", c.assignment));
    }
    SUBCASE("they pad into higher dimensions") {
        Counterexample c = counterexample("EstLightlike3D", kQ, 4);
        CHECK(matrix_holds("Est", c.assignment));
    }
    CHECK_THROWS_AS(counterexample("NoSuchPoints", kQ, 3), UnknownName);
    CHECK_THROWS_AS(counterexample("EstLightlike3D", kQ, 2), WrongDimension);
}

TEST_CASE("witness soundness over seeded canonicalizable pairs") {
    Sampler sampler(kQ, 3);
    Rng rng(47);
    auto [ets_vars, ets_matrix] = strip_exists(builtin("Ets").formula);
    auto [hat_vars, hat_matrix] = strip_exists(builtin("EtsHat").formula);
    for (int i = 0; i < 300; ++i) {
        auto gen = sampler.pair_of_kind(rng, RelKind::Spacelike);
        CHECK(eval_qf(ets_matrix, witness_e(gen.p, gen.q, RelKind::Timelike)));
        CHECK(eval_qf(hat_matrix, witness_e_hat(gen.p, gen.q, RelKind::Timelike)));
    }
}
