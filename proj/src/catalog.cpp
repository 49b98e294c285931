#include "itdual/catalog.hpp"

#include "itdual/shannon.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

namespace itdual {

InfExpr ingleton_expr(const GroundSet& ground, Mask a, Mask b, Mask c, Mask d,
                      Mask cond)
{
    return expr_from_terms(ground, {
        Term::mutual_info(Rat(1), a, b, c | cond),
        Term::mutual_info(Rat(1), a, b, d | cond),
        Term::mutual_info(Rat(1), c, d, cond),
        Term::mutual_info(Rat(-1), a, b, cond),
    });
}

namespace {

std::vector<NamedInequality> build_catalog()
{
    const GroundSet g4({"A", "B", "C", "D"});
    const GroundSet g5({"A", "B", "C", "D", "E"});
    const Mask A = 1, B = 2, C = 4, D = 8, E = 16;

    std::vector<NamedInequality> entries;

    entries.push_back({"basic",
                       expr_from_terms(g4, {Term::mutual_info(Rat(1), A, B, C)}),
                       "Shannon's basic inequality I(A;B|C) >= 0"});

    entries.push_back({"ingleton", ingleton_expr(g4, A, B, C, D),
                       "Ingleton (1971), rank inequality for representable "
                       "matroids; not valid for general entropic vectors"});

    entries.push_back({"ingleton-conditional", ingleton_expr(g5, A, B, C, D, E),
                       "conditional form of the Ingleton inequality"});

    // I(A;B) <= I(A;B|C) + I(A;B|D) + I(C;D) + I(A;B|E) + I(A;E|B) + I(B;E|A),
    // in ">= 0" form.
    InfExpr mmrv = expr_from_terms(g5, {
        Term::mutual_info(Rat(1), A, B, C),
        Term::mutual_info(Rat(1), A, B, D),
        Term::mutual_info(Rat(1), C, D, 0),
        Term::mutual_info(Rat(1), A, B, E),
        Term::mutual_info(Rat(1), A, E, B),
        Term::mutual_info(Rat(1), B, E, A),
        Term::mutual_info(Rat(-1), A, B, 0),
    });
    entries.push_back({"mmrv", mmrv,
                       "Makarychev, Makarychev, Romashchenko, Vereshchagin "
                       "(2002), non-Shannon-type information inequality"});

    // Ingl(C:D,A:B|E) + I(A;B|CD) + I(A;E|CD) + I(B;E|CD), expanded.
    InfExpr mmrv_dual_expanded = expr_from_terms(g5, {
        Term::mutual_info(Rat(1), C, D, A | E),
        Term::mutual_info(Rat(1), C, D, B | E),
        Term::mutual_info(Rat(1), A, B, E),
        Term::mutual_info(Rat(-1), C, D, E),
        Term::mutual_info(Rat(1), A, B, C | D),
        Term::mutual_info(Rat(1), A, E, C | D),
        Term::mutual_info(Rat(1), B, E, C | D),
    });
    if (!expr_equal(dual_expr(mmrv), mmrv_dual_expanded))
        throw std::logic_error("catalog drift: dual of mmrv does not match its "
                               "expanded form");
    entries.push_back({"mmrv-dual", mmrv_dual_expanded,
                       "formal dual of the mmrv inequality; violated by the "
                       "bundled counterexample distribution"});

    return entries;
}

}

const std::vector<NamedInequality>& catalog()
{
    static const std::vector<NamedInequality> entries = build_catalog();
    return entries;
}

const NamedInequality& catalog_entry(const std::string& name)
{
    for (const auto& entry : catalog())
        if (entry.name == name)
            return entry;
    throw std::invalid_argument("unknown catalog entry '" + name + "'");
}

JointDistribution counterexample_distribution(const Rat& eps)
{
    if (eps <= 0 || eps >= Rat(1, 4))
        throw std::invalid_argument("eps must satisfy 0 < eps < 1/4");
    const Rat q = Rat(1, 4) - eps;
    const GroundSet g5({"A", "B", "C", "D", "E"});

    auto atom = [&](const char* bits, const Rat& mass) {
        return Atom{{std::string(1, bits[0]), std::string(1, bits[1]),
                     std::string(1, bits[2]), std::string(1, bits[3]),
                     std::string(1, bits[4])},
                    mass};
    };
    return JointDistribution(g5, {
        atom("00000", eps),
        atom("00001", q),
        atom("01001", q),
        atom("01100", eps),
        atom("10001", q),
        atom("10010", eps),
        atom("11000", eps),
        atom("11001", q),
    });
}

TheoremReport verify_main_theorem(const Rat& eps, const Rat& eps_half,
                                  bool high_precision)
{
    if (!(eps_half > 0 && eps_half < eps && eps < Rat(1, 4)))
        throw std::invalid_argument("require 0 < eps_half < eps < 1/4");

    const InfExpr& mmrv = catalog_entry("mmrv").expr;
    const InfExpr& mmrv_dual = catalog_entry("mmrv-dual").expr;
    const Mask A = 1, B = 2, C = 4, D = 8, E = 16;

    const JointDistribution d = counterexample_distribution(eps);
    const JointDistribution dh = counterexample_distribution(eps_half);

    auto cmi = [&](const JointDistribution& dist, Mask a, Mask b, Mask cond) {
        if (high_precision)
            return cond_mutual_info_hp(dist, a, b, cond).convert_to<double>();
        return cond_mutual_info(dist, a, b, cond);
    };
    auto value_of = [&](const InfExpr& c, const JointDistribution& dist) {
        if (high_precision)
            return evaluate_hp(c, dist).convert_to<double>();
        return evaluate(c, dist).value;
    };

    TheoremReport r;
    r.eps = eps;
    r.eps_half = eps_half;

    r.zero_terms = {
        {"I(C;D|AE)", cmi(d, C, D, A | E)},
        {"I(C;D|BE)", cmi(d, C, D, B | E)},
        {"I(A;B|E)", cmi(d, A, B, E)},
        {"I(A;E|CD)", cmi(d, A, E, C | D)},
        {"I(B;E|CD)", cmi(d, B, E, C | D)},
    };
    r.icd_e = cmi(d, C, D, E);
    r.iab_cd = cmi(d, A, B, C | D);
    r.total = value_of(mmrv_dual, d);
    r.mmrv_on_h = value_of(mmrv, d);
    r.mmrv_on_dual_point = pair_expr_point(mmrv, dual_point(entropic_vector(d)));
    r.icd_e_ratio = r.icd_e / cmi(dh, C, D, E);
    r.iab_cd_ratio = r.iab_cd / cmi(dh, A, B, C | D);

    r.zero_terms_ok = std::all_of(
        r.zero_terms.begin(), r.zero_terms.end(),
        [](const auto& t) { return std::abs(t.second) <= 1e-12; });
    r.dual_negative = r.total < 0;
    r.mmrv_nonnegative = r.mmrv_on_h >= -1e-12;
    r.dual_point_negative = r.mmrv_on_dual_point < 0;
    r.ratios_ok = r.icd_e_ratio >= 1.7 && r.icd_e_ratio <= 2.3 &&
                  r.iab_cd_ratio >= 3.4 && r.iab_cd_ratio <= 4.6;
    r.all_ok = r.zero_terms_ok && r.dual_negative && r.mmrv_nonnegative &&
               r.dual_point_negative && r.ratios_ok;
    return r;
}

namespace {

std::vector<std::string> random_tuple(std::mt19937_64& rng, int n, int arity)
{
    std::uniform_int_distribution<int> symbol(0, arity - 1);
    std::vector<std::string> tuple;
    tuple.reserve(n);
    for (int i = 0; i < n; ++i)
        tuple.push_back(std::to_string(symbol(rng)));
    return tuple;
}

JointDistribution from_weights(const GroundSet& ground,
                               const std::vector<std::vector<std::string>>& tuples,
                               const std::vector<long>& weights)
{
    long total = 0;
    for (long w : weights)
        total += w;
    std::vector<Atom> atoms;
    for (size_t i = 0; i < tuples.size(); ++i)
        if (weights[i] > 0)
            atoms.push_back(Atom{tuples[i], Rat(weights[i], total)});
    return JointDistribution(ground, std::move(atoms));
}

}

std::optional<JointDistribution> search_counterexample(const InfExpr& c,
                                                       const SearchConfig& config)
{
    const GroundSet& ground = c.ground();
    const int n = ground.size();
    if (config.support < 1 || config.arity < 1 || config.trials < 1)
        throw std::invalid_argument("search config values must be positive");

    for (int trial = 0; trial < config.trials; ++trial) {
        std::mt19937_64 rng(config.seed * 0x9e3779b97f4a7c15ULL + trial);

        // Random distinct support, bounded by the number of possible tuples.
        std::set<std::vector<std::string>> support;
        for (int attempt = 0; attempt < config.support * 64; ++attempt) {
            support.insert(random_tuple(rng, n, config.arity));
            if (static_cast<int>(support.size()) == config.support)
                break;
        }
        std::vector<std::vector<std::string>> tuples(support.begin(), support.end());
        std::uniform_int_distribution<long> weight(1, 16);
        std::vector<long> weights(tuples.size());
        for (auto& w : weights)
            w = weight(rng);

        auto value = [&](const std::vector<std::vector<std::string>>& ts,
                         const std::vector<long>& ws) {
            return evaluate(c, from_weights(ground, ts, ws)).value;
        };

        double current = value(tuples, weights);
        std::uniform_int_distribution<size_t> pick(0, tuples.size() - 1);
        std::uniform_int_distribution<int> coordinate(0, n - 1);
        std::uniform_int_distribution<int> symbol(0, config.arity - 1);
        std::uniform_int_distribution<int> kind(0, 2);
        const int climb_steps = 128 * static_cast<int>(tuples.size());
        for (int step = 0; step < climb_steps && current >= -config.tolerance; ++step) {
            auto candidate_tuples = tuples;
            auto candidate = weights;
            if (kind(rng) == 0) {
                // move the support: flip one coordinate of one atom
                auto& tuple = candidate_tuples[pick(rng)];
                tuple[coordinate(rng)] = std::to_string(symbol(rng));
                if (std::set<std::vector<std::string>>(candidate_tuples.begin(),
                                                       candidate_tuples.end())
                        .size() != candidate_tuples.size())
                    continue;
            } else {
                // move a lump of mass between two atoms
                const size_t from = pick(rng);
                const size_t to = pick(rng);
                if (from == to || weights[from] == 0)
                    continue;
                std::uniform_int_distribution<long> lump(1, weights[from]);
                const long moved = lump(rng);
                candidate[from] -= moved;
                candidate[to] += moved;
            }
            const double candidate_value = value(candidate_tuples, candidate);
            if (candidate_value < current) {
                tuples = candidate_tuples;
                weights = candidate;
                current = candidate_value;
            }
        }
        if (current < -config.tolerance)
            return from_weights(ground, tuples, weights);
    }
    return std::nullopt;
}

}
