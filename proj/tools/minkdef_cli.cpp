// Command-line front end: exact relation queries, per-theorem verification
// runs, the definability status matrix, and formula inspection.

#include <CLI11.hpp>

#include "minkdef/checks.hpp"
#include "minkdef/report.hpp"

#include <fstream>
#include <iostream>

namespace {

// 0 pass, 1 fail, 2 regime violation, 3 usage/parse error
constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitRegime = 2;
constexpr int kExitUsage = 3;

struct CommonOpts {
    int n = 0; // 0 = default per command
    std::string field = "Q";
    long trials = 200;
    uint64_t seed = 0;
    std::string out;
    bool text = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_trials = true) {
    cmd->add_option("--n", opts.n, "spacetime dimension (>= 2)");
    cmd->add_option("--field", opts.field, "field context: Q or Q(rtD)");
    if (with_trials) cmd->add_option("--trials", opts.trials, "seeded trials per relation kind");
    cmd->add_option("--seed", opts.seed, "seed for all randomized sampling");
    cmd->add_option("--out", opts.out, "write the report to this file instead of stdout");
    cmd->add_flag("--text", opts.text, "render a text report instead of JSON");
    cmd->add_flag("--json", [](std::int64_t) {}, "emit JSON (the default)");
}

int emit(const minkdef::Report& report, const CommonOpts& opts) {
    std::string payload = opts.text ? report.to_text() : report.to_json();
    if (!opts.out.empty()) {
        std::ofstream file(opts.out, std::ios::binary);
        if (!file) {
            std::cerr << "cannot write " << opts.out << "\n";
            return kExitUsage;
        }
        file << payload;
    } else {
        std::cout << payload;
    }
    return report.all_passed() ? kExitPass : kExitFail;
}

int cmd_relate(const CommonOpts& opts, const std::string& a, const std::string& b) {
    minkdef::FieldCtx ctx = minkdef::FieldCtx::parse(opts.field);
    minkdef::Point p = minkdef::Point::parse(ctx, a);
    minkdef::Point q = minkdef::Point::parse(ctx, b);
    if (opts.n != 0 && opts.n != p.dim()) {
        std::cerr << "--n disagrees with the point literals\n";
        return kExitUsage;
    }
    std::cout << minkdef::rel_kind_name(minkdef::relate(p, q)) << " "
              << minkdef::mink_form(p, q).to_string() << "\n";
    return kExitPass;
}

int cmd_verify(const CommonOpts& opts, const std::string& theorem) {
    minkdef::FieldCtx ctx = minkdef::FieldCtx::parse(opts.field);
    int n = opts.n != 0 ? opts.n : 2;
    minkdef::Report report;
    report.command = "verify " + theorem;
    report.n = n;
    report.field = ctx.to_string();
    report.seed = opts.seed;
    report.trials = opts.trials;
    report.verdicts.push_back(minkdef::run_check(theorem, ctx, n, opts.trials, opts.seed));
    return emit(report, opts);
}

int cmd_matrix(const CommonOpts& opts) {
    minkdef::FieldCtx ctx = minkdef::FieldCtx::parse(opts.field);
    int n = opts.n != 0 ? opts.n : 2;
    minkdef::Report report;
    report.command = "matrix";
    report.n = n;
    report.field = ctx.to_string();
    report.seed = opts.seed;
    report.trials = 0;
    report.matrix = minkdef::status_matrix(n);
    std::string payload = opts.text ? report.to_text() : report.to_json();
    if (!opts.out.empty()) {
        std::ofstream file(opts.out, std::ios::binary);
        if (!file) {
            std::cerr << "cannot write " << opts.out << "\n";
            return kExitUsage;
        }
        file << payload;
    } else {
        std::cout << payload;
    }
    return kExitPass;
}

int cmd_formula(const std::string& name, bool print, bool classify) {
    const minkdef::NamedFormula& nf = minkdef::builtin(name);
    if (!print && !classify) print = classify = true;
    if (print) std::cout << minkdef::print_formula(nf.formula) << "\n";
    if (classify)
        std::cout << "vars=" << minkdef::count_variables(nf.formula)
                  << " prefix=" << minkdef::classify_prefix(nf.formula).to_string() << "\n";
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for the causal relations of rational Minkowski spacetime"};
    app.require_subcommand(1);

    CommonOpts opts;

    auto* relate = app.add_subcommand("relate", "relation and interval of two point literals");
    std::string point_a, point_b;
    relate->add_option("a", point_a, "first point literal, e.g. \"(0,0)\"")->required();
    relate->add_option("b", point_b, "second point literal")->required();
    add_common(relate, opts, false);

    auto* verify = app.add_subcommand("verify", "run one registered theorem check");
    std::string theorem;
    std::string plan_list;
    for (const auto& plan : minkdef::all_check_plans()) {
        if (!plan_list.empty()) plan_list += ", ";
        plan_list += plan.id;
    }
    verify->add_option("theorem", theorem, "one of: " + plan_list)->required();
    add_common(verify, opts);

    auto* matrix = app.add_subcommand("matrix", "emit the definability status matrix");
    add_common(matrix, opts, false);

    auto* formula = app.add_subcommand("formula", "print or classify a named formula");
    std::string formula_name;
    bool do_print = false, do_classify = false;
    formula->add_option("name", formula_name, "builtin formula name, e.g. PsiTS")->required();
    formula->add_flag("--print", do_print, "print the formula text");
    formula->add_flag("--classify", do_classify, "print variable count and prefix class");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (relate->parsed()) return cmd_relate(opts, point_a, point_b);
        if (verify->parsed()) return cmd_verify(opts, theorem);
        if (matrix->parsed()) return cmd_matrix(opts);
        if (formula->parsed()) return cmd_formula(formula_name, do_print, do_classify);
    } catch (const minkdef::RegimeViolation& e) {
        std::cerr << "regime violation: " << e.what() << "\n";
        return kExitRegime;
    } catch (const minkdef::UnknownName& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
