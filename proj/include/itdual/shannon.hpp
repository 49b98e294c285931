#ifndef ITDUAL_SHANNON_HPP
#define ITDUAL_SHANNON_HPP

#include "itdual/expr.hpp"
#include "itdual/point.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace itdual {

// The minimal generating family of the polymatroid cone, in a fixed order:
// first the n monotonicity elementals H(X_i | X_{N\i}) for i = 0..n-1, then
// the conditional mutual informations I(X_i; X_j | X_K) for i < j and every
// K inside N\{i,j}, ordered by (i, j, K ascending as a mask).
// Total: n + C(n,2) * 2^(n-2). For n = 1 the single elemental is H(X_1).
std::vector<InfExpr> elemental_inequalities(const GroundSet& ground);

// Number of elementals without building them.
long elemental_count(int n);

enum class ShannonVerdict { ShannonType, NotShannonType };

// shannon-type: multipliers y_k >= 0 with sum y_k e_k = c, stored sparsely
// as (elemental index, y_k) pairs.
// not-shannon-type: a polymatroid point with <c, separator> < 0.
// Both sides are exact and re-checked against the elementals before return.
struct ShannonCertificate {
    ShannonVerdict verdict = ShannonVerdict::NotShannonType;
    std::vector<std::pair<int, Rat>> multipliers;
    std::optional<EntropyPoint> separator;
};

ShannonCertificate is_shannon_type(const InfExpr& c);

// <e, h> >= 0 for every elemental e; exact on rational points, within tol on
// floating ones.
bool is_polymatroid_point(const EntropyPoint& h);
bool is_polymatroid_point(const RealPoint& h, double tol = 1e-9);

}

#endif
