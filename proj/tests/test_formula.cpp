#include <doctest.h>

#include "minkdef/builtins.hpp"

using namespace minkdef;

namespace {

const FieldCtx kQ = FieldCtx::rationals();

Point pt(std::vector<Rat> coords) { return Point::of_rats(kQ, std::move(coords)); }

} // namespace

TEST_CASE("parsing atoms and chains") {
    Formula a = parse_formula("x tau y");
    CHECK(a == Formula::atom("x", rels::tau, "y"));

    Formula chain = parse_formula("x T,S y z");
    CHECK(chain == Formula::conj({Formula::atom("x", rels::tau, "y"),
                                  Formula::atom("x", rels::sig, "z")}));

    Formula tilde = parse_formula("x T~T p q");
    CHECK(tilde == Formula::conj({Formula::atom("x", rels::tau, "p"),
                                  Formula::atom("x", rels::ntau, "q")}));

    CHECK(parse_formula("x ntau! y") == Formula::atom("x", rels::ntau_ne, "y"));
    CHECK(parse_formula("x != y") == Formula::atom("x", rels::ne, "y"));
    CHECK(parse_formula("x = y") == parse_formula("x eq y"));
    CHECK(parse_formula("x [LS] y") == Formula::atom("x", rels::ntau_ne, "y"));
}

TEST_CASE("parsing the inner block of the first defining formula") {
    Formula f = parse_formula("exists u (u tau z & u ntau x & u ntau y)");
    CHECK(f.kind() == Formula::Kind::Exists);
    CHECK(count_variables(f) == 4);
    CHECK(f.free_vars() == std::vector<std::string>{"z", "x", "y"});
    CHECK(classify_prefix(f).to_string() == "E1");
}

TEST_CASE("negation folds into atom masks") {
    CHECK(parse_formula("!(x tau y)") == Formula::atom("x", rels::ntau, "y"));
    Formula keep = parse_formula("!(x tau y & y tau z)");
    CHECK(keep.kind() == Formula::Kind::Not);
}

TEST_CASE("syntax errors carry positions") {
    CHECK_THROWS_AS(parse_formula("x tau"), SyntaxError);
    CHECK_THROWS_AS(parse_formula("exists (x tau y)"), SyntaxError);
    CHECK_THROWS_AS(parse_formula("x %% y"), SyntaxError);
    CHECK_THROWS_AS(parse_formula("x [LK] y"), SyntaxError);
}

TEST_CASE("printing round-trips every builtin") {
    for (const auto& nf : all_builtins()) {
        std::string text = print_formula(nf.formula);
        CHECK(parse_formula(text) == nf.formula);
    }
}

TEST_CASE("claimed complexity matches the recomputation") {
    struct Claim {
        const char* name;
        int vars;
        const char* prefix;
    };
    const Claim claims[] = {
        {"PsiTS", 4, "A1E1"}, {"PsiTL", 4, "E1A1"}, {"PsiST", 4, "A1E1"}, {"PsiSL", 4, "E1A1"},
        {"PsiLS", 4, "E1A1"}, {"PsiLT", 4, "A1E1"}, {"Ets", 6, "E4"},     {"Utl", 6, "A4"},
        {"Est", 6, "E4"},     {"Usl", 6, "A4"},     {"EtsHat", 5, "E3"},  {"UtlHat", 5, "A3"},
        {"EstHat", 5, "E3"},  {"UslHat", 5, "A3"},  {"Wsl", 6, "A2E2"},   {"Wst", 6, "E2A2"},
        {"WslMirror", 6, "A2E2"}, {"WstMirror", 6, "E2A2"},
    };
    CHECK(all_builtins().size() == 18);
    for (const auto& c : claims) {
        const NamedFormula& nf = builtin(c.name);
        CHECK(count_variables(nf.formula) == c.vars);
        CHECK(classify_prefix(nf.formula).to_string() == c.prefix);
        CHECK(nf.claimed_vars == c.vars);
        CHECK(nf.claimed_prefix == c.prefix);
    }
    CHECK_THROWS_AS(builtin("NoSuchFormula"), UnknownName);
}

TEST_CASE("mirror formulas are exact relation swaps") {
    CHECK(swap_relations(builtin("PsiTS").formula, RelKind::Timelike, RelKind::Spacelike) ==
          builtin("PsiST").formula);
    CHECK(swap_relations(builtin("Ets").formula, RelKind::Timelike, RelKind::Spacelike) ==
          builtin("Est").formula);
    CHECK(swap_relations(builtin("EtsHat").formula, RelKind::Timelike, RelKind::Spacelike) ==
          builtin("EstHat").formula);
    CHECK(swap_relations(builtin("Wst").formula, RelKind::Spacelike, RelKind::Timelike) ==
          builtin("WstMirror").formula);
    CHECK(swap_relations(builtin("Wsl").formula, RelKind::Spacelike, RelKind::Timelike) ==
          builtin("WslMirror").formula);
}

TEST_CASE("the lightlike complement formulas reuse the base definitions") {
    const Formula& psi_tl = builtin("PsiTL").formula;
    REQUIRE(psi_tl.kind() == Formula::Kind::And);
    CHECK(psi_tl.children()[0] == Formula::negate(builtin("PsiTS").formula));
    CHECK(psi_tl.children()[1] == Formula::atom("x", rels::ntau, "y"));
    CHECK(psi_tl.children()[2] == Formula::atom("x", rels::ne, "y"));
}

TEST_CASE("negation normal form exposes the dual structure") {
    // negating the universal lightlike definition yields the existential
    // matrix in disjunction with the settled quantifier-free cases
    Formula nnf = to_nnf(Formula::negate(builtin("Utl").formula));
    REQUIRE(nnf.kind() == Formula::Kind::Or);
    REQUIRE(nnf.children().size() == 3);
    CHECK(nnf.children()[0] == to_nnf(builtin("Ets").formula));
    CHECK(nnf.children()[1] == Formula::atom("p", rels::eq, "q"));
    CHECK(nnf.children()[2] == Formula::atom("p", rels::tau, "q"));

    // double negation is the identity on atoms
    Formula atom = Formula::atom("x", rels::lam, "y");
    CHECK(to_nnf(Formula::negate(Formula::negate(atom))) == atom);
}

TEST_CASE("quantifier-free evaluation") {
    Env env{{"x", pt({0, 0})}, {"y", pt({1, 0})}};
    CHECK(eval_qf(parse_formula("x tau y"), env));
    CHECK(!eval_qf(parse_formula("x sig y"), env));
    CHECK(eval_qf(parse_formula("x tau y & x != y"), env));
    CHECK(eval_qf(parse_formula("x sig y | x tau y"), env));

    Env same{{"x", pt({2, 2})}, {"y", pt({2, 2})}};
    CHECK(!eval_qf(parse_formula("x != y"), same));
    CHECK(eval_qf(parse_formula("x = y"), same));

    CHECK_THROWS_AS(eval_qf(parse_formula("x tau w"), env), UnboundVariable);
    CHECK_THROWS_AS(eval_qf(parse_formula("exists u (u tau x)"), env), Error);
}

TEST_CASE("prefix classification handles merges and flips") {
    CHECK(classify_prefix(parse_formula("x tau y")).to_string() == "QF");
    CHECK(classify_prefix(parse_formula("exists u (forall v (u tau v))")).to_string() == "E1A1");
    CHECK(classify_prefix(parse_formula("!(exists u (u tau x))")).to_string() == "A1");
    // two independent blocks merge without extra alternations
    Formula merged = parse_formula("exists u (u tau x) & exists v (v sig x)");
    CHECK(classify_prefix(merged).to_string() == "E2");
    Formula mixed = parse_formula("forall u (u ntau x) & exists v (v sig x)");
    std::string cls = classify_prefix(mixed).to_string();
    CHECK((cls == "A1E1" || cls == "E1A1"));
}
