// Acceptance suite: one line per criterion, nonzero exit on any failure.
// argv[1] must be the path to the itdual CLI binary (criterion 10).

#include "itdual/catalog.hpp"
#include "itdual/distribution.hpp"
#include "itdual/expr.hpp"
#include "itdual/parse.hpp"
#include "itdual/shannon.hpp"

#include "test_util.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <random>
#include <string>
#include <sys/wait.h>

using namespace itdual;
using test::ground_of_size;
using test::random_expr;
using test::random_point;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, bool ok)
{
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << number << ". " << label << "\n";
    if (!ok)
        ++failures;
}

InfExpr cmi_expr(const GroundSet& g, Mask a, Mask b, Mask cond)
{
    return expr_from_terms(g, {Term::mutual_info(Rat(1), a, b, cond)});
}

bool multipliers_reproduce(const InfExpr& c, const ShannonCertificate& cert,
                           const std::vector<InfExpr>& elementals)
{
    InfExpr sum(c.ground());
    for (const auto& [index, value] : cert.multipliers) {
        if (value < 0)
            return false;
        sum += value * elementals.at(index);
    }
    return expr_equal(sum, c);
}

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run_cli(const std::string& command)
{
    CliResult result;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe)
        return result;
    char buffer[4096];
    while (size_t n = fread(buffer, 1, sizeof buffer, pipe))
        result.output.append(buffer, n);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

void check_1_basic_self_duality()
{
    const GroundSet g4 = ground_of_size(4);
    const bool ok = expr_equal(dual_expr(cmi_expr(g4, 1, 2, 4)), cmi_expr(g4, 1, 2, 8));
    criterion(1, "dual of I(A;B|C) on {A,B,C,D} is I(A;B|D)", ok);
}

void check_2_ingleton_self_duality()
{
    const GroundSet g4 = ground_of_size(4);
    const bool four_ok = expr_equal(dual_expr(ingleton_expr(g4, 1, 2, 4, 8)),
                                    ingleton_expr(g4, 4, 8, 1, 2));
    const GroundSet g6 = ground_of_size(6);
    const bool six_ok = expr_equal(dual_expr(ingleton_expr(g6, 1, 2, 4, 8, 16)),
                                   ingleton_expr(g6, 4, 8, 1, 2, 32));
    criterion(2, "Ingleton self-duality: 4-variable swap and 6-variable E->F",
              four_ok && six_ok);
}

void check_3_dual_balance_properties()
{
    std::mt19937_64 rng(101);
    bool ok = true;
    for (int n = 2; n <= 5 && ok; ++n) {
        const GroundSet g = ground_of_size(n);
        for (int round = 0; round < 200 && ok; ++round) {
            InfExpr c = random_expr(rng, g);
            InfExpr d = dual_expr(c);
            ok = ok && is_balanced(d);
            ok = ok && expr_equal(dual_expr(d), balance(c));
            InfExpr b = balance(c);
            ok = ok && expr_equal(dual_expr(dual_expr(b)), b);
        }
    }
    criterion(3, "200 random exprs per n in 2..5: dual balanced, dual.dual = "
                 "balance, identity on balanced",
              ok);
}

void check_4_adjointness()
{
    std::mt19937_64 rng(103);
    bool ok = true;
    for (int n = 2; n <= 5 && ok; ++n) {
        const GroundSet g = ground_of_size(n);
        for (int round = 0; round < 200 && ok; ++round) {
            InfExpr c = random_expr(rng, g);
            EntropyPoint h = random_point(rng, g);
            ok = ok && pair_expr_point(dual_expr(c), h) ==
                           pair_expr_point(c, dual_point(h));
        }
    }
    criterion(4, "200 random pairs per n in 2..5: <dual c, h> = <c, dual h> exactly",
              ok);
}

void check_5_polymatroid_closure()
{
    std::mt19937_64 rng(107);
    bool ok = true;
    int points = 0;
    for (int n = 2; n <= 4 && ok; ++n) {
        const GroundSet g = ground_of_size(n);
        std::uniform_int_distribution<int> support(2, 8);
        std::uniform_int_distribution<int> arity(2, 3);
        std::uniform_int_distribution<long> weight(1, 12);
        for (int round = 0; round < 40 && ok; ++round) {
            const int atoms_wanted = support(rng);
            const int symbols = arity(rng);
            std::map<std::vector<std::string>, long> weights;
            std::uniform_int_distribution<int> symbol(0, symbols - 1);
            for (int a = 0; a < atoms_wanted; ++a) {
                std::vector<std::string> tuple;
                for (int i = 0; i < n; ++i)
                    tuple.push_back(std::to_string(symbol(rng)));
                weights[tuple] += weight(rng);
            }
            long total = 0;
            for (const auto& [tuple, w] : weights)
                total += w;
            std::vector<Atom> atoms;
            for (const auto& [tuple, w] : weights)
                atoms.push_back(Atom{tuple, Rat(w, total)});
            JointDistribution d(g, atoms);
            ok = ok && is_polymatroid_point(dual_point(entropic_vector(d)), 1e-9);
            ++points;
        }
    }
    criterion(5, "duals of " + std::to_string(points) +
                     " entropic points satisfy all elementals within 1e-9",
              ok && points >= 100);
}

void check_6_shannon_prover()
{
    bool elementals_ok = true;
    for (int n = 1; n <= 5 && elementals_ok; ++n) {
        const auto elementals = elemental_inequalities(ground_of_size(n));
        for (const auto& e : elementals) {
            auto cert = is_shannon_type(e);
            if (cert.verdict != ShannonVerdict::ShannonType ||
                !multipliers_reproduce(e, cert, elementals)) {
                elementals_ok = false;
                break;
            }
        }
    }

    bool instances_ok = true;
    long instances = 0;
    for (int n = 2; n <= 5 && instances_ok; ++n) {
        const GroundSet g = ground_of_size(n);
        const auto elementals = elemental_inequalities(g);
        const Mask full = g.full_mask();
        for (Mask p = 1; p <= full && instances_ok; ++p) {
            for (Mask q = 1; q <= full && instances_ok; ++q) {
                if ((p & q) || (q & -q) < (p & -p))
                    continue;  // disjoint, unordered via lowest set bit
                const Mask pool = full & ~(p | q);
                Mask r = 0;
                while (instances_ok) {
                    InfExpr inst = cmi_expr(g, p, q, r);
                    auto cert = is_shannon_type(inst);
                    instances_ok = cert.verdict == ShannonVerdict::ShannonType &&
                                   multipliers_reproduce(inst, cert, elementals);
                    ++instances;
                    if (r == pool)
                        break;
                    r = (r - pool) & pool;
                }
            }
        }
    }

    const InfExpr& mmrv = catalog_entry("mmrv").expr;
    auto mmrv_cert = is_shannon_type(mmrv);
    const bool mmrv_ok = mmrv_cert.verdict == ShannonVerdict::NotShannonType &&
                         mmrv_cert.separator &&
                         is_polymatroid_point(*mmrv_cert.separator) &&
                         pair_expr_point(mmrv, *mmrv_cert.separator) < 0;

    const InfExpr& ingleton = catalog_entry("ingleton").expr;
    auto ingl_cert = is_shannon_type(ingleton);
    const bool ingleton_ok =
        ingl_cert.verdict == ShannonVerdict::NotShannonType && ingl_cert.separator &&
        is_polymatroid_point(*ingl_cert.separator) &&
        pair_expr_point(ingleton, *ingl_cert.separator) < 0;

    criterion(6, "shannon prover: all elementals and " + std::to_string(instances) +
                     " basic instances certified, mmrv and Ingleton refuted "
                     "with verified separators",
              elementals_ok && instances_ok && mmrv_ok && ingleton_ok);
}

void check_7_main_theorem()
{
    const auto start = std::chrono::steady_clock::now();
    const TheoremReport r = verify_main_theorem(Rat(1, 100), Rat(1, 200));
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    const bool ok = r.zero_terms_ok && r.dual_negative && r.mmrv_nonnegative &&
                    r.dual_point_negative && r.icd_e_ratio >= 1.7 &&
                    r.icd_e_ratio <= 2.3 && r.iab_cd_ratio >= 3.4 &&
                    r.iab_cd_ratio <= 4.6 && seconds < 1.0;
    criterion(7, "verify_main_theorem(1/100, 1/200): zero terms, signs, dual "
                 "point, scaling ratios, under 1 second",
              ok);
}

void check_8_reduction_identity()
{
    const Mask A = 1, B = 2, C = 4, D = 8, E = 16;
    const InfExpr& dual = catalog_entry("mmrv-dual").expr;
    bool ok = true;
    for (const Rat& eps : {Rat(1, 8), Rat(1, 50), Rat(1, 100)}) {
        auto d = counterexample_distribution(eps);
        const double total = evaluate(dual, d).value;
        const double survivors =
            -cond_mutual_info(d, C, D, E) + cond_mutual_info(d, A, B, C | D);
        ok = ok && std::abs(total - survivors) <= 1e-12;
    }
    criterion(8, "mmrv-dual on D(eps) equals -I(C;D|E) + I(A;B|CD) within 1e-12 "
                 "for eps in {1/8, 1/50, 1/100}",
              ok);
}

void check_9_catalog_integrity()
{
    const Mask A = 1, B = 2, C = 4, D = 8, E = 16;
    const InfExpr& mmrv = catalog_entry("mmrv").expr;
    const GroundSet& g5 = mmrv.ground();

    InfExpr expanded_dual = expr_from_terms(g5, {
        Term::mutual_info(Rat(1), C, D, A | E),
        Term::mutual_info(Rat(1), C, D, B | E),
        Term::mutual_info(Rat(1), A, B, E),
        Term::mutual_info(Rat(-1), C, D, E),
        Term::mutual_info(Rat(1), A, B, C | D),
        Term::mutual_info(Rat(1), A, E, C | D),
        Term::mutual_info(Rat(1), B, E, C | D),
    });
    const bool dual_ok = expr_equal(dual_expr(mmrv), expanded_dual) &&
                         expr_equal(catalog_entry("mmrv-dual").expr, expanded_dual);

    InfExpr rebuilt = ingleton_expr(g5, A, B, C, D) +
                      expr_from_terms(g5, {Term::mutual_info(Rat(1), A, B, E),
                                           Term::mutual_info(Rat(1), A, E, B),
                                           Term::mutual_info(Rat(1), B, E, A)});
    const bool split_ok = expr_equal(mmrv, rebuilt);

    criterion(9, "catalog: dual of mmrv matches the expanded form, mmrv = "
                 "Ingleton + three terms",
              dual_ok && split_ok);
}

void check_10_cli_contract(const std::string& cli)
{
    bool round_trip_ok = true;
    for (const auto& entry : catalog()) {
        const std::string h = print_expr(entry.expr, ExprStyle::HForm);
        round_trip_ok = round_trip_ok &&
                        expr_equal(parse_expr(h, entry.expr.ground()), entry.expr);
    }

    const std::string quiet = " 2>/dev/null";
    auto verify = run_cli(cli + " verify-theorem --eps 1/100" + quiet);
    const bool verify_ok = verify.exit_code == 0;

    auto shannon = run_cli(cli + " check --expr \"I(A;B)\"" + quiet);
    auto not_shannon = run_cli(
        cli + " check --expr \"I(A;B|C) + I(A;B|D) + I(C;D) - I(A;B)\"" + quiet);
    const bool check_ok = shannon.exit_code == 0 && not_shannon.exit_code == 1 &&
                          shannon.output.find("shannon-type") == 0;

    // malformed input: exit 2 and a positioned error JSON on stderr
    auto malformed =
        run_cli(cli + " check --expr \"I(A;B\" 2>&1 1>/dev/null");
    const bool malformed_ok = malformed.exit_code == 2 &&
                              malformed.output.find("position") != std::string::npos;

    criterion(10, "cli: catalog round trips, verify-theorem exits 0, check "
                  "exit codes, positioned parse errors",
              round_trip_ok && verify_ok && check_ok && malformed_ok);
}

}

int main(int argc, char** argv)
{
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-itdual-cli>\n";
        return 2;
    }
    const std::string cli = argv[1];

    check_1_basic_self_duality();
    check_2_ingleton_self_duality();
    check_3_dual_balance_properties();
    check_4_adjointness();
    check_5_polymatroid_closure();
    check_6_shannon_prover();
    check_7_main_theorem();
    check_8_reduction_identity();
    check_9_catalog_integrity();
    check_10_cli_contract(cli);

    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
