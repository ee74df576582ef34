#include "minkdef/matrix.hpp"

namespace minkdef {

namespace {
const char* IMP = "impossible";
const char* OPEN = "open";
const char* NMC = "not-machine-checked";
} // namespace

StatusMatrix status_matrix(int n) {
    StatusMatrix m;
    m.columns = {"tau->sig", "tau->lam", "sig->tau", "sig->lam", "lam->tau", "lam->sig"};
    if (n == 2) {
        m.regime = "n=2, any ordered field";
        m.rows = {
            {"E2/A2", {IMP, IMP, IMP, IMP, IMP, IMP}},
            {"E3", {"EtsHat", IMP, "EstHat", IMP, IMP, IMP}},
            {"A3", {IMP, "UtlHat", IMP, "UslHat", IMP, IMP}},
            {"E4", {"Ets", IMP, "Est", IMP, IMP, IMP}},
            {"A4", {IMP, "Utl", IMP, "Usl", IMP, IMP}},
            {"E1A1", {OPEN, "PsiTL", OPEN, "PsiSL", IMP, IMP}},
            {"A1E1", {"PsiTS", OPEN, "PsiST", OPEN, IMP, IMP}},
            {"E2A1/E1A2", {OPEN, NMC, OPEN, NMC, IMP, IMP}},
            {"A2E1/A1E2", {NMC, OPEN, NMC, OPEN, IMP, IMP}},
            {"E2A2", {"WstMirror", NMC, "Wst", NMC, IMP, IMP}},
            {"A2E2", {NMC, "WslMirror", NMC, "Wsl", IMP, IMP}},
        };
    } else {
        m.regime = "n>2, Euclidean field";
        m.rows = {
            {"E2/A2", {IMP, IMP, IMP, IMP, IMP, IMP}},
            {"E3", {"EtsHat", IMP, OPEN, IMP, IMP, IMP}},
            {"A3", {IMP, "UtlHat", IMP, OPEN, IMP, IMP}},
            {"E4", {"Ets", IMP, OPEN, IMP, IMP, IMP}},
            {"A4", {IMP, "Utl", IMP, OPEN, IMP, IMP}},
            {"E*", {NMC, IMP, OPEN, IMP, IMP, IMP}},
            {"A*", {IMP, NMC, IMP, OPEN, IMP, IMP}},
            {"E1A1", {OPEN, "PsiTL", OPEN, "PsiSL", OPEN, "PsiLS"}},
            {"A1E1", {"PsiTS", OPEN, "PsiST", OPEN, "PsiLT", OPEN}},
            {"E2A1/E1A2", {OPEN, NMC, OPEN, NMC, OPEN, NMC}},
            {"A2E1/A1E2", {NMC, OPEN, NMC, OPEN, NMC, OPEN}},
            {"E2A2", {OPEN, NMC, "Wst", NMC, OPEN, NMC}},
            {"A2E2", {NMC, OPEN, NMC, "Wsl", NMC, OPEN}},
            {"E*A*", {NMC, NMC, NMC, NMC, OPEN, NMC}},
            {"A*E*", {NMC, NMC, NMC, NMC, NMC, OPEN}},
        };
    }
    m.notes = {
        "not-machine-checked cells are definable by derived arguments (padding an "
        "existing definition with unused quantifiers, or negating one); no distinct "
        "formula ships for them",
        "over n>2 the mirrored two-two formulas define the complement-of-timelike and "
        "the empty relation; verifying that needs an unbounded forall-exists check and "
        "is not machine-checked",
    };
    return m;
}

} // namespace minkdef
