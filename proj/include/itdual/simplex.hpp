#ifndef ITDUAL_SIMPLEX_HPP
#define ITDUAL_SIMPLEX_HPP

#include "itdual/rational.hpp"

#include <vector>

namespace itdual {

// Exact decision of b in cone(columns of A): either a nonnegative combination
// A y = b, or a Farkas separator s with s^T A >= 0 (componentwise over the
// columns) and <s, b> < 0. Phase-1 simplex with Bland's rule over rationals;
// deterministic and immune to cycling.
struct ConeDecision {
    bool feasible = false;
    std::vector<Rat> combination;  // per column, when feasible
    std::vector<Rat> separator;    // per row, when infeasible
};

// `columns` is column-major: columns[j][i] is the entry of column j in row i.
// All columns must share the row count of `rhs`.
ConeDecision decide_cone_membership(const std::vector<std::vector<Rat>>& columns,
                                    const std::vector<Rat>& rhs);

}

#endif
