#include <doctest.h>

#include "minkdef/sampling.hpp"
#include "minkdef/transforms.hpp"

using namespace minkdef;

namespace {

const FieldCtx kQ = FieldCtx::rationals();

Point pt(std::vector<Rat> coords) { return Point::of_rats(kQ, std::move(coords)); }
FieldElem fq(long num, long den = 1) { return FieldElem(kQ, rat(num, den)); }

} // namespace

TEST_CASE("elementary maps") {
    CHECK(scaling(kQ, 2, fq(2))(pt({1, 1})) == pt({2, 2}));
    CHECK(relate(scaling(kQ, 2, fq(2))(pt({1, 1})), pt({0, 0})) == relate(pt({1, 1}), pt({0, 0})));
    CHECK(time_reversal(kQ, 2)(pt({1, 0})) == pt({-1, 0}));
    CHECK(translation(pt({1, 2}))(pt({0, 0})) == pt({1, 2}));
    CHECK_THROWS_AS(scaling(kQ, 2, fq(0)), ZeroScale);
}

TEST_CASE("boost fixtures") {
    AffineMap b = boost(kQ, 2, 1, fq(3, 5));
    CHECK(b(pt({1, 0})) == pt({rat(5, 4), rat(-3, 4)}));
    CHECK(relate(b(pt({1, 0})), b(pt({0, 0}))) == RelKind::Timelike);

    AffineMap id = boost(kQ, 2, 1, fq(0));
    CHECK(id(pt({7, -3})) == pt({7, -3}));

    CHECK_THROWS_AS(boost(kQ, 2, 1, fq(1, 2)), NotASquareError);
    CHECK_THROWS_AS(boost(kQ, 2, 1, fq(2)), SpeedOutOfRange);
    // over Q(rt3) the speed 1/2 works: sqrt(3/4) = rt3/2
    FieldCtx rt3 = FieldCtx::quad_ext(3);
    AffineMap b3 = boost(rt3, 2, 1, FieldElem(rt3, rat(1, 2)));
    Point img = b3(Point::of_rats(rt3, {1, 0}));
    CHECK(relate(img, Point::origin(rt3, 2)) == RelKind::Timelike);
}

TEST_CASE("rotation validation") {
    // the 3-4-5 rotation
    std::vector<std::vector<FieldElem>> rows = {{fq(3, 5), fq(-4, 5)}, {fq(4, 5), fq(3, 5)}};
    AffineMap rot = rotation_from_orthonormal(kQ, 3, rows);
    CHECK(rot(pt({1, 0, 0})) == pt({1, 0, 0}));
    CHECK(relate(rot(pt({1, 2, -1})), rot(pt({0, 0, 3}))) == relate(pt({1, 2, -1}), pt({0, 0, 3})));

    std::vector<std::vector<FieldElem>> identity_rows = {{fq(1), fq(0)}, {fq(0), fq(1)}};
    CHECK(rotation_from_orthonormal(kQ, 3, identity_rows)(pt({2, 3, 4})) == pt({2, 3, 4}));

    std::vector<std::vector<FieldElem>> bad = {{fq(1), fq(1)}, {fq(0), fq(1)}};
    CHECK_THROWS_AS(rotation_from_orthonormal(kQ, 3, bad), NotOrthonormal);
    std::vector<std::vector<FieldElem>> reflect = {{fq(0), fq(1)}, {fq(1), fq(0)}};
    CHECK_THROWS_AS(rotation_from_orthonormal(kQ, 3, reflect), WrongDeterminant);
}

TEST_CASE("boost-scale maps hit the canonical pairs") {
    AffineMap bt = boost_scale_tau(kQ, 2, fq(5, 4), fq(3, 4));
    CHECK(bt(pt({rat(5, 4), rat(3, 4)})) == pt({1, 0}));
    CHECK(bt(pt({0, 0})) == pt({0, 0}));

    AffineMap id = boost_scale_tau(kQ, 2, fq(1), fq(0));
    CHECK(id(pt({1, 0})) == pt({1, 0}));
    CHECK(id(pt({0, 1})) == pt({0, 1}));

    AffineMap bs = boost_scale_sigma(kQ, 2, fq(3, 4), fq(5, 4));
    CHECK(bs(pt({rat(3, 4), rat(5, 4)})) == pt({0, 1}));

    CHECK_THROWS_AS(boost_scale_tau(kQ, 2, fq(1), fq(2)), WrongRegime);
    CHECK_THROWS_AS(boost_scale_sigma(kQ, 2, fq(2), fq(1)), WrongRegime);
}

TEST_CASE("canonicalization fixtures") {
    SUBCASE("timelike with translation only") {
        auto c = canonicalize_pair(pt({1, 1}), pt({2, 1}));
        CHECK(c.tag == RelKind::Timelike);
        CHECK(c.map(pt({1, 1})) == pt({0, 0}));
        CHECK(c.map(pt({2, 1})) == pt({1, 0}));
    }
    SUBCASE("lightlike via scaling") {
        auto c = canonicalize_pair(pt({0, 0}), pt({3, 3}));
        CHECK(c.tag == RelKind::Lightlike);
        CHECK(c.map(pt({3, 3})) == pt({1, 1}));
    }
    SUBCASE("pythagorean sample in three dimensions") {
        Point p = pt({0, 0, 0});
        Point q = pt({rat(5, 4), rat(9, 20), rat(3, 5)});
        auto c = canonicalize_pair(p, q);
        CHECK(c.tag == RelKind::Timelike);
        CHECK(c.map(p) == pt({0, 0, 0}));
        CHECK(c.map(q) == pt({1, 0, 0}));
    }
    SUBCASE("blocked radicands are reported together") {
        // spatial norm 8 blocks the rotation, interval magnitude 7 blocks
        // the boost; both radicands arrive in one error
        Point p = pt({0, 0, 0});
        Point q = pt({1, 2, 2});
        CHECK_THROWS_AS(canonicalize_pair(p, q), NotASquareError);
        try {
            canonicalize_pair(p, q);
        } catch (const NotASquareError& e) {
            REQUIRE(e.radicands.size() == 2);
            CHECK(e.radicands[0] == "8");
            CHECK(e.radicands[1] == "7");
        }
    }
    SUBCASE("a single blocked radicand suggests one extension") {
        // norm 2 blocks, the interval magnitude is the square 1
        CHECK_THROWS_AS(canonicalize_pair(pt({0, 0, 0}), pt({1, 1, 1})), NotASquareError);
        try {
            canonicalize_pair(pt({0, 0, 0}), pt({1, 1, 1}));
        } catch (const NotASquareError& e) {
            REQUIRE(e.radicands.size() == 1);
            CHECK(e.radicands[0] == "2");
        }
        // and the same pair canonicalizes over Q(rt2)
        FieldCtx rt2 = FieldCtx::quad_ext(2);
        auto c = canonicalize_pair(Point::of_rats(rt2, {0, 0, 0}), Point::of_rats(rt2, {1, 1, 1}));
        CHECK(c.tag == RelKind::Spacelike);
    }
    SUBCASE("equal points are rejected") {
        CHECK_THROWS_AS(canonicalize_pair(pt({1, 1}), pt({1, 1})), EqualPoints);
    }
}

TEST_CASE("canonicalization round-trip is bit-exact") {
    Sampler sampler(kQ, 3);
    Rng rng(31);
    for (int i = 0; i < 300; ++i) {
        RelKind kind = i % 3 == 0   ? RelKind::Timelike
                       : i % 3 == 1 ? RelKind::Lightlike
                                    : RelKind::Spacelike;
        auto gen = sampler.pair_of_kind(rng, kind);
        auto c = canonicalize_pair(gen.p, gen.q);
        CHECK(c.tag == kind);
        auto [cp, cq] = canonical_pair_points(kQ, 3, kind);
        CHECK(c.map(gen.p) == cp);
        CHECK(c.map(gen.q) == cq);
        AffineMap back = c.map.inverse();
        CHECK(back(cp) == gen.p);
        CHECK(back(cq) == gen.q);
    }
}

TEST_CASE("two-dimensional canonicalization never needs a root") {
    Sampler sampler(kQ, 2);
    Rng rng(37);
    for (int i = 0; i < 500; ++i) {
        Point p = sampler.lattice_point(rng, 9, 2);
        Point q = sampler.lattice_point(rng, 9, 2);
        if (p == q) continue;
        CHECK_NOTHROW(canonicalize_pair(p, q));
    }
}

TEST_CASE("relation preservation on seeded pairs for every map class") {
    Sampler sampler(kQ, 3);
    Rng rng(41);
    std::vector<AffineMap> maps;
    maps.push_back(translation(pt({1, -2, 3})));
    maps.push_back(scaling(kQ, 3, fq(-3, 2)));
    maps.push_back(time_reversal(kQ, 3));
    maps.push_back(rotation_from_orthonormal(
        kQ, 3, {{fq(3, 5), fq(-4, 5)}, {fq(4, 5), fq(3, 5)}}));
    maps.push_back(boost(kQ, 3, 1, fq(3, 5)));
    maps.push_back(boost_scale_tau(kQ, 3, fq(5, 4), fq(3, 4)));
    maps.push_back(boost_scale_sigma(kQ, 3, fq(3, 4), fq(5, 4)));
    for (const AffineMap& m : maps) {
        for (int i = 0; i < 300; ++i) {
            Point p = sampler.lattice_point(rng, 6, 1);
            Point q = sampler.lattice_point(rng, 6, 1);
            CHECK(relate(m(p), m(q)) == relate(p, q));
        }
    }
}

TEST_CASE("swap of the two axes") {
    AffineMap s = swap_tx(kQ);
    CHECK(s(pt({1, 0})) == pt({0, 1}));
    CHECK(s(pt({1, 1})) == pt({1, 1}));
    CHECK(s.then(s)(pt({5, -7})) == pt({5, -7}));
    CHECK(relate(s(pt({0, 0})), s(pt({1, 0}))) == RelKind::Spacelike);
    CHECK(relate(s(pt({0, 0})), s(pt({1, 1}))) == RelKind::Lightlike);
}

TEST_CASE("lifted conjugation") {
    FieldCtx rt2 = FieldCtx::quad_ext(2);
    PartialMap lift = lifted_conjugation(rt2, 3);
    Point vt(std::vector<FieldElem>{FieldElem(rt2, Rat(1)), FieldElem(rt2, Rat(1), rat(-1, 2)),
                                    FieldElem(rt2)});
    Point vs = lift.apply(vt);
    Point o = Point::origin(rt2, 3);
    CHECK(relate(vt, o) == RelKind::Timelike);
    CHECK(relate(vs, o) == RelKind::Spacelike);
    CHECK(vs[1] == FieldElem(rt2, Rat(1), rat(1, 2)));

    Point rational_pt = Point::of_rats(rt2, {3, -2, 5});
    CHECK(lift.apply(rational_pt) == rational_pt);

    Sampler sampler(rt2, 3);
    Rng rng(43);
    for (int i = 0; i < 200; ++i) {
        auto gen = sampler.pair_of_kind(rng, RelKind::Lightlike);
        CHECK(relate(lift.apply(gen.p), lift.apply(gen.q)) == RelKind::Lightlike);
    }
    CHECK_THROWS_AS(lifted_conjugation(kQ, 2), ContextMismatch);
}

TEST_CASE("time compression") {
    SUBCASE("single lightlike pair") {
        auto tc = time_compress({pt({0, 0}), pt({1, 1})}, 0, 1);
        CHECK(tc.epsilon > 0);
        CHECK(tc.epsilon < 1);
        CHECK(relate(tc.images[0], tc.images[1]) == RelKind::Spacelike);
    }
    SUBCASE("a timelike pair must stay timelike") {
        auto tc = time_compress({pt({0, 0}), pt({2, 0}), pt({1, 1})}, 0, 2);
        CHECK(relate(tc.images[0], tc.images[1]) == RelKind::Timelike);
        CHECK(relate(tc.images[0], tc.images[2]) == RelKind::Spacelike);
        CHECK(relate(tc.images[1], tc.images[2]) != RelKind::Timelike);
        CHECK(tc.epsilon == rat(1, 2));
    }
    SUBCASE("distinct points stay distinct") {
        auto tc = time_compress({pt({0, 0}), pt({1, 1}), pt({1, 0}), pt({2, 0})}, 0, 1);
        for (size_t a = 0; a < tc.images.size(); ++a)
            for (size_t b = a + 1; b < tc.images.size(); ++b)
                CHECK(tc.images[a] != tc.images[b]);
    }
    CHECK_THROWS_AS(time_compress({pt({0, 0}), pt({1, 0})}, 0, 1), TargetNotLightlike);
}

TEST_CASE("hyperbolic inversion") {
    CHECK(hyperbolic_inversion(pt({1, 0})) == pt({1, 0}));
    CHECK(hyperbolic_inversion(pt({0, 1})) == pt({0, -1}));
    CHECK(hyperbolic_inversion(hyperbolic_inversion(pt({2, 1}))) == pt({2, 1}));
    CHECK_THROWS_AS(hyperbolic_inversion(pt({1, 1})), OnLightConeOfOrigin);

    // the proof's regime: the normalized timelike pair turns spacelike
    Point p = pt({0, 1});
    Point q = pt({rat(3, 2), Rat(1)});
    CHECK(relate(p, q) == RelKind::Timelike);
    CHECK(relate(hyperbolic_inversion(p), hyperbolic_inversion(q)) == RelKind::Spacelike);

    PartialMap h = hyperbolic_inversion_map(kQ, 2);
    CHECK(!h.in_domain(pt({2, 2})));
    CHECK_THROWS_AS(h.apply(pt({2, 2})), OutsideDomain);
}

TEST_CASE("escape iteration clears the cone") {
    SUBCASE("already clean input is unchanged") {
        std::vector<Point> pts{pt({0, 1}), pt({2, 1})};
        CHECK(escape_iteration(pts, EscapeRegime::TimelikePair) == pts);
    }
    SUBCASE("a problematic point leaves the cone") {
        std::vector<Point> pts{pt({1, 1})};
        auto out = escape_iteration(pts, EscapeRegime::TimelikePair);
        CHECK(!mink_form_vec(out[0]).is_zero());
    }
    SUBCASE("the normalized pair stays in position") {
        std::vector<Point> pts{pt({0, 1}), pt({rat(3, 2), Rat(1)}), pt({1, 1}), pt({-2, 2})};
        auto out = escape_iteration(pts, EscapeRegime::TimelikePair);
        CHECK(out[0] == pt({0, 1}));
        CHECK(out[1][1] == fq(1));
        CHECK(relate(out[0], out[1]) == RelKind::Timelike);
        for (const Point& z : out) CHECK(!mink_form_vec(z).is_zero());
    }
    SUBCASE("spacelike regime keeps its anchor fixed") {
        std::vector<Point> pts{pt({1, 0}), pt({1, rat(3, 2)}), pt({2, 2})};
        auto out = escape_iteration(pts, EscapeRegime::SpacelikePair);
        CHECK(out[0] == pt({1, 0}));
        CHECK(out[1][0] == fq(1));
        for (const Point& z : out) CHECK(!mink_form_vec(z).is_zero());
    }
}

TEST_CASE("maps serialize to json") {
    std::string j = affine_to_json(swap_tx(kQ));
    CHECK(j.find("\"matrix\"") != std::string::npos);
    CHECK(j.find("\"offset\":\"(0,0)\"") != std::string::npos);
    CHECK(j.find("preserves-light-swaps-time-space") != std::string::npos);
}
