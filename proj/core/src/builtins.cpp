#include "minkdef/builtins.hpp"

namespace minkdef {

const char* field_req_name(FieldReq r) {
    switch (r) {
        case FieldReq::AnyOrdered: return "any-ordered";
        case FieldReq::EuclideanOrN2: return "euclidean-or-n2";
        case FieldReq::EuclideanAndN3Plus: return "euclidean-and-n3";
    }
    return "?";
}

namespace {

using namespace rels;
using F = Formula;

F atom(const char* a, RelSet r, const char* b) { return F::atom(a, r, b); }

/// x != y & forall z (z = x | z = y | exists u (u rho z & u nrho x & u nrho y))
F psi_to_sigma_shape(RelSet rho) {
    F inner = F::exists(
        "u", F::conj({atom("u", rho, "z"), atom("u", ~rho, "x"), atom("u", ~rho, "y")}));
    F guarded = F::disj({atom("z", eq, "x"), atom("z", eq, "y"), std::move(inner)});
    return F::conj({atom("x", ne, "y"), F::forall("z", std::move(guarded))});
}

/// !Psi(x,y) & x nrho y & x != y
F psi_complement_shape(F psi, RelSet rho) {
    return F::conj({F::negate(std::move(psi)), atom("x", ~rho, "y"), atom("x", ne, "y")});
}

/// x nlam y & exists z (x lam z & y nlam z & !exists u (u lam x & u lam y & u lam z))
F psi_lam_sigma() {
    F no_u = F::negate(F::exists(
        "u", F::conj({atom("u", lam, "x"), atom("u", lam, "y"), atom("u", lam, "z")})));
    F block = F::conj({atom("x", lam, "z"), atom("y", nlam, "z"), std::move(no_u)});
    return F::conj({atom("x", nlam, "y"), F::exists("z", std::move(block))});
}

/// exists r,x,s,z with the eleven-atom matrix defining sigma from tau.
F e_shape(RelSet rho) {
    RelSet nrho = ~rho;
    F matrix = F::conj({
        atom("r", rho, "p"), atom("r", rho, "q"),
        atom("x", rho, "p"), atom("x", nrho, "q"),
        atom("s", nrho, "p"), atom("s", nrho, "q"),
        atom("z", nrho, "p"), atom("z", rho, "q"),
        atom("r", nrho, "x"), atom("r", rho, "s"), atom("r", nrho, "z"),
    });
    return F::exists("r", F::exists("x", F::exists("s", F::exists("z", std::move(matrix)))));
}

/// !E(p,q) & p != q & p nrho q
F u_shape(F e, RelSet rho) {
    return F::conj({F::negate(std::move(e)), atom("p", ne, "q"), atom("p", ~rho, "q")});
}

/// exists x,y,z with the nine-atom matrix (five variables in total).
F e_hat_shape(RelSet rho) {
    RelSet nrho_ne = ~rho & ne;
    F matrix = F::conj({
        atom("x", rho, "p"), atom("x", rho, "y"), atom("x", nrho_ne, "q"), atom("x", nrho_ne, "z"),
        atom("y", nrho_ne, "p"), atom("y", nrho_ne, "q"), atom("y", rho, "z"),
        atom("z", nrho_ne, "p"), atom("z", rho, "q"),
    });
    return F::exists("x", F::exists("y", F::exists("z", std::move(matrix))));
}

/// x nrho y & x != y & forall u,v exists zu,zv
/// (zu nrho u & zu rho x & zu rho y | zv nrho v & zv rho x & zv rho y | u nrho v)
F w_lam_shape(RelSet rho) {
    RelSet nrho = ~rho;
    F arm_u = F::conj({atom("zu", nrho, "u"), atom("zu", rho, "x"), atom("zu", rho, "y")});
    F arm_v = F::conj({atom("zv", nrho, "v"), atom("zv", rho, "x"), atom("zv", rho, "y")});
    F body = F::disj({std::move(arm_u), std::move(arm_v), atom("u", nrho, "v")});
    F quantified = F::forall(
        "u", F::forall("v", F::exists("zu", F::exists("zv", std::move(body)))));
    return F::conj({atom("x", nrho, "y"), atom("x", ne, "y"), std::move(quantified)});
}

F w_rho_shape(F wl, RelSet rho) {
    return F::conj({F::negate(std::move(wl)), atom("x", ~rho, "y"), atom("x", ne, "y")});
}

std::vector<NamedFormula> build_registry() {
    using K = RelKind;
    std::vector<NamedFormula> reg;

    F psi_ts = psi_to_sigma_shape(tau);
    F psi_st = psi_to_sigma_shape(sig);
    F psi_ls = psi_lam_sigma();

    reg.push_back({"PsiTS", psi_ts, 4, "A1E1", K::Timelike, K::Spacelike, 2, 0, FieldReq::EuclideanOrN2});
    reg.push_back({"PsiTL", psi_complement_shape(psi_ts, tau), 4, "E1A1", K::Timelike, K::Lightlike, 2, 0, FieldReq::EuclideanOrN2});
    reg.push_back({"PsiST", psi_st, 4, "A1E1", K::Spacelike, K::Timelike, 2, 0, FieldReq::EuclideanOrN2});
    reg.push_back({"PsiSL", psi_complement_shape(psi_st, sig), 4, "E1A1", K::Spacelike, K::Lightlike, 2, 0, FieldReq::EuclideanOrN2});
    reg.push_back({"PsiLS", psi_ls, 4, "E1A1", K::Lightlike, K::Spacelike, 3, 0, FieldReq::EuclideanAndN3Plus});
    reg.push_back({"PsiLT", psi_complement_shape(psi_ls, lam), 4, "A1E1", K::Lightlike, K::Timelike, 3, 0, FieldReq::EuclideanAndN3Plus});

    F ets = e_shape(tau);
    F est = e_shape(sig);
    reg.push_back({"Ets", ets, 6, "E4", K::Timelike, K::Spacelike, 2, 0, FieldReq::EuclideanOrN2});
    reg.push_back({"Utl", u_shape(ets, tau), 6, "A4", K::Timelike, K::Lightlike, 2, 0, FieldReq::EuclideanOrN2});
    reg.push_back({"Est", est, 6, "E4", K::Spacelike, K::Timelike, 2, 2, FieldReq::AnyOrdered});
    reg.push_back({"Usl", u_shape(est, sig), 6, "A4", K::Spacelike, K::Lightlike, 2, 2, FieldReq::AnyOrdered});

    F ets_hat = e_hat_shape(tau);
    F est_hat = e_hat_shape(sig);
    reg.push_back({"EtsHat", ets_hat, 5, "E3", K::Timelike, K::Spacelike, 2, 0, FieldReq::EuclideanOrN2});
    reg.push_back({"UtlHat", u_shape(ets_hat, tau), 5, "A3", K::Timelike, K::Lightlike, 2, 0, FieldReq::EuclideanOrN2});
    reg.push_back({"EstHat", est_hat, 5, "E3", K::Spacelike, K::Timelike, 2, 2, FieldReq::AnyOrdered});
    reg.push_back({"UslHat", u_shape(est_hat, sig), 5, "A3", K::Spacelike, K::Lightlike, 2, 2, FieldReq::AnyOrdered});

    F wsl = w_lam_shape(sig);
    reg.push_back({"Wsl", wsl, 6, "A2E2", K::Spacelike, K::Lightlike, 2, 0, FieldReq::EuclideanOrN2});
    reg.push_back({"Wst", w_rho_shape(wsl, sig), 6, "E2A2", K::Spacelike, K::Timelike, 2, 0, FieldReq::EuclideanOrN2});

    F wsl_mirror = w_lam_shape(tau);
    reg.push_back({"WslMirror", wsl_mirror, 6, "A2E2", K::Timelike, K::Lightlike, 2, 2, FieldReq::AnyOrdered});
    reg.push_back({"WstMirror", w_rho_shape(wsl_mirror, tau), 6, "E2A2", K::Timelike, K::Spacelike, 2, 2, FieldReq::AnyOrdered});

    // The claims are part of the contract: recompute them immediately and
    // refuse to start with a broken registry.
    for (const auto& nf : reg) {
        if (count_variables(nf.formula) != nf.claimed_vars)
            throw Error("builtin " + nf.name + " has wrong variable count");
        if (classify_prefix(nf.formula).to_string() != nf.claimed_prefix)
            throw Error("builtin " + nf.name + " has wrong prefix class");
    }
    return reg;
}

} // namespace

const std::vector<NamedFormula>& all_builtins() {
    static const std::vector<NamedFormula> registry = build_registry();
    return registry;
}

const NamedFormula& builtin(const std::string& name) {
    for (const auto& nf : all_builtins())
        if (nf.name == name) return nf;
    throw UnknownName(name);
}

} // namespace minkdef
