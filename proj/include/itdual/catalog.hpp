#ifndef ITDUAL_CATALOG_HPP
#define ITDUAL_CATALOG_HPP

#include "itdual/distribution.hpp"
#include "itdual/expr.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace itdual {

struct NamedInequality {
    std::string name;
    InfExpr expr;  // in ">= 0" form
    std::string provenance;
};

// I(A;B|CE) + I(A;B|DE) + I(C;D|E) - I(A;B|E) as an expression.
InfExpr ingleton_expr(const GroundSet& ground, Mask a, Mask b, Mask c, Mask d,
                      Mask cond = 0);

// Fixed golden entries: basic (4 vars), ingleton (4 vars),
// ingleton-conditional (5 vars), mmrv (5 vars), mmrv-dual (5 vars).
// mmrv-dual is produced by dual_expr and cross-checked against the
// hand-expanded form; a mismatch throws at first use.
const std::vector<NamedInequality>& catalog();
const NamedInequality& catalog_entry(const std::string& name);

// The eight-atom binary distribution on A,B,C,D,E that violates mmrv-dual
// for small eps. Requires 0 < eps < 1/4 so every mass stays positive.
JointDistribution counterexample_distribution(const Rat& eps);

struct TheoremReport {
    Rat eps;
    Rat eps_half;

    // The five terms of mmrv-dual that vanish identically on D(eps).
    std::vector<std::pair<std::string, double>> zero_terms;

    double icd_e = 0.0;    // I(C;D|E), the negative survivor, Theta(eps)
    double iab_cd = 0.0;   // I(A;B|CD), the positive survivor, Theta(eps^2)
    double total = 0.0;    // mmrv-dual evaluated on D(eps)
    double mmrv_on_h = 0.0;             // mmrv evaluated on D(eps)
    double mmrv_on_dual_point = 0.0;    // <mmrv, dual_point(entropic_vector)>
    double icd_e_ratio = 0.0;           // value at eps over value at eps_half
    double iab_cd_ratio = 0.0;

    bool zero_terms_ok = false;        // all five within 1e-12 of zero
    bool dual_negative = false;        // total < 0
    bool mmrv_nonnegative = false;     // mmrv_on_h >= -1e-12
    bool dual_point_negative = false;  // mmrv_on_dual_point < 0
    bool ratios_ok = false;            // icd ratio in [1.7,2.3], iab in [3.4,4.6]
    bool all_ok = false;
};

// Checks that the formal dual of mmrv fails on D(eps): the five zero terms,
// the sign of the dual and of mmrv itself, the pairing against the dual
// point, and the Theta(eps) / Theta(eps^2) scaling between eps and eps_half.
// The scaling windows are calibrated for halving, eps_half = eps/2, and are
// reliable for eps <= 1/100. Requires 0 < eps_half < eps < 1/4.
// high_precision switches the entropy sums to 256-bit floats; needed once
// the Theta(eps^2) term sinks toward double rounding noise (eps below ~2^-20).
TheoremReport verify_main_theorem(const Rat& eps, const Rat& eps_half,
                                  bool high_precision = false);

struct SearchConfig {
    int support = 8;    // atoms per candidate distribution
    int arity = 2;      // symbols per variable
    int trials = 200;
    std::uint64_t seed = 1;
    double tolerance = 1e-9;
};

// Random search for a distribution with evaluate(c, d) < -tolerance:
// random rational supports refined by hill-climbing mass moves.
// Deterministic under a fixed seed. Returns the first violator found.
std::optional<JointDistribution> search_counterexample(const InfExpr& c,
                                                       const SearchConfig& config = {});

}

#endif
