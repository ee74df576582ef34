#include <doctest.h>

#include "minkdef/checks.hpp"
#include "minkdef/report.hpp"

using namespace minkdef;

namespace {
const FieldCtx kQ = FieldCtx::rationals();
}

TEST_CASE("the plan registry matches the advertised identifiers") {
    const char* expected[] = {
        "psi-ts", "psi-tl", "psi-st", "psi-sl", "psi-ls", "psi-lt", "nondef-3var",
        "e-ts", "u-tl", "e-st-2d", "u-sl-2d", "nrf2-suite", "no-e2-def", "e-ts-hat",
        "u-tl-hat", "e-st-hat-2d", "t-eps-no-exist-lambda",
        "h-inversion-no-def-from-lambda", "w-sl", "w-st", "w-mirror-2d", "swap-2d",
        "non-eucl-q-sqrt2",
    };
    CHECK(all_check_plans().size() == 23);
    for (const char* id : expected) CHECK(check_plan(id).id == id);
    CHECK_THROWS_AS(check_plan("psi-xx"), UnknownName);
}

TEST_CASE("every plan passes in its home regime") {
    struct Run {
        const char* id;
        int n;
        const char* field;
    };
    const Run runs[] = {
        {"psi-ts", 2, "Q"},      {"psi-tl", 2, "Q"},      {"psi-st", 3, "Q"},
        {"psi-sl", 3, "Q"},      {"psi-ls", 3, "Q"},      {"psi-lt", 3, "Q"},
        {"nondef-3var", 2, "Q"}, {"e-ts", 2, "Q"},        {"u-tl", 3, "Q"},
        {"e-st-2d", 2, "Q"},     {"u-sl-2d", 2, "Q"},     {"nrf2-suite", 2, "Q"},
        {"no-e2-def", 2, "Q"},   {"e-ts-hat", 3, "Q"},    {"u-tl-hat", 2, "Q"},
        {"e-st-hat-2d", 2, "Q"}, {"t-eps-no-exist-lambda", 2, "Q"},
        {"h-inversion-no-def-from-lambda", 3, "Q"},       {"w-sl", 2, "Q"},
        {"w-st", 3, "Q"},        {"w-mirror-2d", 2, "Q"}, {"swap-2d", 2, "Q"},
        {"non-eucl-q-sqrt2", 2, "Q(rt2)"},
    };
    for (const Run& run : runs) {
        CAPTURE(run.id);
        Verdict v = run_check(run.id, FieldCtx::parse(run.field), run.n, 25, 3);
        CHECK(v.status == Verdict::Status::Pass);
    }
}

TEST_CASE("regime violations") {
    CHECK_THROWS_AS(run_check("psi-ls", kQ, 2, 10, 0), RegimeViolation);
    CHECK_THROWS_AS(run_check("psi-lt", kQ, 2, 10, 0), RegimeViolation);
    CHECK_THROWS_AS(run_check("swap-2d", kQ, 3, 10, 0), RegimeViolation);
    CHECK_THROWS_AS(run_check("w-mirror-2d", kQ, 3, 10, 0), RegimeViolation);
    CHECK_THROWS_AS(run_check("non-eucl-q-sqrt2", kQ, 2, 10, 0), RegimeViolation);
    CHECK_THROWS_AS(run_check("non-eucl-q-sqrt2", FieldCtx::quad_ext(3), 2, 10, 0),
                    RegimeViolation);
}

TEST_CASE("the dimension-two-only formulas fail upstairs with the listed points") {
    Verdict e = run_check("e-st-2d", kQ, 3, 5, 0);
    CHECK(e.status == Verdict::Status::Fail);
    REQUIRE(e.counterexample.has_value());
    bool has_p = false;
    for (const auto& [var, lit] : e.counterexample->items)
        has_p = has_p || (var == "p" && lit == "(-2,-2,0)");
    CHECK(has_p);

    CHECK(run_check("u-sl-2d", kQ, 3, 5, 0).status == Verdict::Status::Fail);
    CHECK(run_check("e-st-hat-2d", kQ, 3, 5, 0).status == Verdict::Status::Fail);
}

TEST_CASE("checks work over a quadratic extension context") {
    FieldCtx rt2 = FieldCtx::quad_ext(2);
    CHECK(run_check("psi-ts", rt2, 2, 10, 1).status == Verdict::Status::Pass);
    CHECK(run_check("e-ts", rt2, 3, 10, 1).status == Verdict::Status::Pass);
}

TEST_CASE("verdicts and reports are deterministic for a fixed seed") {
    auto render = [](uint64_t seed) {
        Report r;
        r.command = "verify w-sl";
        r.n = 2;
        r.field = "Q";
        r.seed = seed;
        r.trials = 20;
        r.verdicts.push_back(run_check("w-sl", kQ, 2, 20, seed));
        return r.to_json();
    };
    CHECK(render(5) == render(5));
    CHECK(render(5) != render(6));
}

TEST_CASE("matrix report renders both regimes") {
    Report r;
    r.command = "matrix";
    r.n = 2;
    r.matrix = status_matrix(2);
    std::string json = r.to_json();
    CHECK(json.find("\"EtsHat\"") != std::string::npos);
    CHECK(json.find("n=2, any ordered field") != std::string::npos);
    std::string text = r.to_text();
    CHECK(text.find("WstMirror") != std::string::npos);

    StatusMatrix m3 = status_matrix(3);
    CHECK(m3.regime == "n>2, Euclidean field");
    CHECK(m3.rows.size() == 15);
    CHECK(status_matrix(2).rows.size() == 11);
}
