// itdual: exact manipulation of linear information inequalities -- formal
// duals, balancing, Shannon-type certificates, entropies of finite
// distributions, and the bundled 5-variable duality counterexample.

#include "itdual/catalog.hpp"
#include "itdual/distribution.hpp"
#include "itdual/expr.hpp"
#include "itdual/json_io.hpp"
#include "itdual/parse.hpp"
#include "itdual/shannon.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>

using namespace itdual;
using nlohmann::json;

namespace {

// 0: success / positive verdict. 1: negative verdict (not shannon-type,
// failed theorem check, no self-duality witness). 2: malformed input or
// violated precondition, with an error JSON on stderr.
constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitError = 2;

struct ExprInput {
    std::string text;
    std::string ground_csv;
    bool strict = false;

    InfExpr parse() const
    {
        std::optional<GroundSet> ground;
        if (!ground_csv.empty())
            ground = GroundSet::from_text(ground_csv);
        else if (strict)
            throw std::invalid_argument(
                "--strict requires an explicit --ground (the dual depends on it)");
        return parse_expr(text, ground);
    }
};

void add_expr_options(CLI::App* cmd, ExprInput& input)
{
    cmd->add_option("--expr", input.text, "expression, e.g. \"I(A;B|C)\"")
        ->required();
    cmd->add_option("--ground", input.ground_csv,
                    "explicit ground set, e.g. A,B,C,D (inferred from the "
                    "expression otherwise)");
}

void emit_error(const std::string& code, const std::string& message,
                std::optional<int> position = std::nullopt)
{
    json err{{"code", code}, {"message", message}};
    if (position)
        err["position"] = *position;
    std::cerr << err.dump() << "\n";
}

std::string residuals_line(const InfExpr& c)
{
    std::string out;
    const auto r = residuals(c);
    for (int i = 0; i < c.ground().size(); ++i) {
        if (i)
            out += " ";
        out += c.ground().label(i) + "=" + rat_to_string(r[i]);
    }
    return out;
}

void print_theorem_report(const TheoremReport& r)
{
    auto flag = [](bool ok) { return ok ? "[pass]" : "[FAIL]"; };
    std::cout << "counterexample distribution at eps = " << rat_to_string(r.eps)
              << ", eps/2 = " << rat_to_string(r.eps_half) << "\n";
    for (const auto& [name, value] : r.zero_terms)
        std::cout << "  " << name << " = " << value << "\n";
    std::cout << flag(r.zero_terms_ok) << " five vanishing terms within 1e-12\n";
    std::cout << "  I(C;D|E)   = " << r.icd_e << "  (ratio vs eps/2: " << r.icd_e_ratio
              << ", want ~2)\n";
    std::cout << "  I(A;B|CD)  = " << r.iab_cd << "  (ratio vs eps/2: "
              << r.iab_cd_ratio << ", want ~4)\n";
    std::cout << flag(r.ratios_ok) << " scaling ratios inside [1.7,2.3] and [3.4,4.6]\n";
    std::cout << flag(r.dual_negative) << " dual of mmrv on D(eps): " << r.total
              << " < 0\n";
    std::cout << flag(r.mmrv_nonnegative) << " mmrv on D(eps): " << r.mmrv_on_h
              << " >= 0\n";
    std::cout << flag(r.dual_point_negative)
              << " <mmrv, dual of the entropic point> = " << r.mmrv_on_dual_point
              << " < 0\n";
    std::cout << (r.all_ok ? "PASS" : "FAIL")
              << ": the dual point violates mmrv, the entropy region is not "
                 "closed under duality\n";
}

int run(int argc, char** argv)
{
    CLI::App app{
        "exact tools for linear information inequalities and their formal duals"};
    app.require_subcommand(1);
    int exit_code = kExitOk;

    // dual
    auto* dual_cmd = app.add_subcommand(
        "dual", "formal dual of an expression (depends on the ground set)");
    ExprInput dual_in;
    add_expr_options(dual_cmd, dual_in);
    dual_cmd->add_flag("--strict", dual_in.strict,
                       "refuse to infer the ground set");
    bool dual_hform = false, dual_json = false;
    dual_cmd->add_flag("--h-form", dual_hform, "print raw entropy terms");
    dual_cmd->add_flag("--json", dual_json, "print the coefficient map");
    dual_cmd->callback([&] {
        InfExpr c = dual_in.parse();
        if (dual_in.ground_csv.empty())
            std::cerr << "note: ground set inferred as "
                      << c.ground().subset_name(c.ground().full_mask())
                      << "; the dual depends on it\n";
        InfExpr d = dual_expr(c);
        if (dual_json)
            std::cout << expr_to_json(d).dump(2) << "\n";
        else
            std::cout << print_expr(d, dual_hform ? ExprStyle::HForm
                                                  : ExprStyle::IFormGreedy)
                      << "\n";
    });

    // balance
    auto* balance_cmd =
        app.add_subcommand("balance", "balanced version and residuals");
    ExprInput balance_in;
    add_expr_options(balance_cmd, balance_in);
    bool balance_json = false;
    balance_cmd->add_flag("--json", balance_json, "JSON output");
    balance_cmd->callback([&] {
        InfExpr c = balance_in.parse();
        InfExpr b = balance(c);
        if (balance_json) {
            json out{{"balanced", expr_to_json(b)},
                     {"already_balanced", is_balanced(c)},
                     {"residuals", json::object()}};
            const auto r = residuals(c);
            for (int i = 0; i < c.ground().size(); ++i)
                out["residuals"][c.ground().label(i)] = rat_to_string(r[i]);
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "balanced:  " << print_expr(b, ExprStyle::IFormGreedy) << "\n";
            std::cout << "residuals: " << residuals_line(c) << "\n";
        }
    });

    // check
    auto* check_cmd = app.add_subcommand(
        "check", "Shannon-type test: nonnegative combination of elementals");
    ExprInput check_in;
    add_expr_options(check_cmd, check_in);
    bool check_json = false;
    check_cmd->add_flag("--json", check_json, "JSON output only");
    check_cmd->callback([&] {
        InfExpr c = check_in.parse();
        ShannonCertificate cert = is_shannon_type(c);
        const bool positive = cert.verdict == ShannonVerdict::ShannonType;
        if (!check_json)
            std::cout << (positive ? "shannon-type" : "not-shannon-type") << "\n";
        std::cout << certificate_to_json(cert, c.ground()).dump(2) << "\n";
        exit_code = positive ? kExitOk : kExitNegative;
    });

    // selfdual
    auto* selfdual_cmd = app.add_subcommand(
        "selfdual", "search for a witness that the dual is an instance or "
                    "conditional version of the expression");
    ExprInput selfdual_in;
    add_expr_options(selfdual_cmd, selfdual_in);
    SelfDualConfig selfdual_config;
    selfdual_cmd->add_option("--max-image", selfdual_config.max_image,
                             "largest substitution image searched (default 1)");
    selfdual_cmd->callback([&] {
        InfExpr c = selfdual_in.parse();
        SelfDualCertificate cert = is_self_dual(c, selfdual_config);
        std::cout << selfdual_to_json(cert).dump(2) << "\n";
        exit_code =
            cert.verdict == SelfDualVerdict::NotFound ? kExitNegative : kExitOk;
    });

    // eval
    auto* eval_cmd =
        app.add_subcommand("eval", "evaluate an expression on a distribution");
    ExprInput eval_in;
    add_expr_options(eval_cmd, eval_in);
    std::string eval_dist;
    eval_cmd->add_option("--dist", eval_dist, "distribution JSON file")->required();
    bool eval_json = false;
    eval_cmd->add_flag("--json", eval_json, "JSON output");
    eval_cmd->callback([&] {
        JointDistribution d = load_distribution(eval_dist);
        InfExpr c = parse_expr(eval_in.text, d.ground());
        EvalReport report = evaluate(c, d);
        if (eval_json) {
            std::cout << eval_report_to_json(report, d.ground()).dump(2) << "\n";
        } else {
            for (const auto& [mask, value] : report.terms)
                std::cout << "  " << rat_to_string(c.coeff(mask)) << " * H("
                          << d.ground().subset_name(mask) << ") -> " << value
                          << "\n";
            std::cout << "value = " << report.value << " bits\n";
        }
    });

    // entropy
    auto* entropy_cmd = app.add_subcommand(
        "entropy", "entropy of a subset, or the full entropic vector");
    std::string entropy_dist, entropy_subset;
    entropy_cmd->add_option("--dist", entropy_dist, "distribution JSON file")
        ->required();
    entropy_cmd->add_option("--subset", entropy_subset,
                            "subset like A,C; omit for the full vector");
    entropy_cmd->callback([&] {
        JointDistribution d = load_distribution(entropy_dist);
        if (!entropy_subset.empty()) {
            Mask m = d.ground().mask_of(parse_label_list(entropy_subset));
            std::cout << entropy(d, m) << "\n";
        } else {
            std::cout << point_to_json(entropic_vector(d)).dump(2) << "\n";
        }
    });

    // verify-theorem
    auto* verify_cmd = app.add_subcommand(
        "verify-theorem",
        "check that the dual of mmrv fails on the bundled distribution");
    std::string verify_eps = "1/100";
    bool verify_json = false, verify_hp = false;
    verify_cmd->add_option("--eps", verify_eps, "epsilon as p/q (default 1/100)");
    verify_cmd->add_flag("--json", verify_json, "JSON report");
    verify_cmd->add_flag("--hp", verify_hp,
                         "256-bit float entropies (for very small eps)");
    verify_cmd->callback([&] {
        Rat eps = parse_rational(verify_eps);
        TheoremReport report = verify_main_theorem(eps, eps / 2, verify_hp);
        if (verify_json)
            std::cout << theorem_report_to_json(report).dump(2) << "\n";
        else
            print_theorem_report(report);
        exit_code = report.all_ok ? kExitOk : kExitNegative;
    });

    // catalog
    auto* catalog_cmd =
        app.add_subcommand("catalog", "named inequalities shipped with the tool");
    std::string catalog_name;
    bool catalog_json = false;
    catalog_cmd->add_option("--name", catalog_name, "single entry to print");
    catalog_cmd->add_flag("--json", catalog_json, "JSON coefficient maps");
    catalog_cmd->callback([&] {
        std::vector<NamedInequality> entries;
        if (catalog_name.empty())
            entries = catalog();
        else
            entries = {catalog_entry(catalog_name)};
        if (catalog_json) {
            json out = json::array();
            for (const auto& entry : entries) {
                json e = expr_to_json(entry.expr);
                e["name"] = entry.name;
                e["provenance"] = entry.provenance;
                out.push_back(e);
            }
            std::cout << out.dump(2) << "\n";
        } else {
            for (const auto& entry : entries) {
                std::cout << entry.name << " (on "
                          << entry.expr.ground().subset_name(
                                 entry.expr.ground().full_mask())
                          << "):\n  " << print_expr(entry.expr, ExprStyle::IFormGreedy)
                          << " >= 0\n  [" << entry.provenance << "]\n";
            }
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit_error("usage", e.what());
        return kExitError;
    }
    return exit_code;
}

}

int main(int argc, char** argv)
{
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        emit_error("parse-error", e.what(), e.position);
        return kExitError;
    } catch (const std::invalid_argument& e) {
        emit_error("invalid-argument", e.what());
        return kExitError;
    } catch (const std::exception& e) {
        emit_error("error", e.what());
        return kExitError;
    }
}
