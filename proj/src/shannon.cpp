#include "itdual/shannon.hpp"

#include "itdual/simplex.hpp"

#include <stdexcept>

namespace itdual {

long elemental_count(int n)
{
    if (n < 1)
        throw std::invalid_argument("ground set must contain at least one variable");
    if (n == 1)
        return 1;
    return n + (long(n) * (n - 1) / 2) * (1L << (n - 2));
}

std::vector<InfExpr> elemental_inequalities(const GroundSet& ground)
{
    const int n = ground.size();
    const Mask full = ground.full_mask();
    std::vector<InfExpr> out;
    out.reserve(elemental_count(n));

    // H(X_i | X_{N\i}) >= 0; just H(X_1) when n = 1.
    for (int i = 0; i < n; ++i) {
        InfExpr e(ground);
        const Mask rest = full & ~ground.singleton(i);
        e.add(full, Rat(1));
        if (rest != 0)
            e.add(rest, Rat(-1));
        out.push_back(std::move(e));
    }

    // I(X_i; X_j | X_K) >= 0 for i < j, K inside N\{i,j}, K in mask order.
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const Mask ij = ground.singleton(i) | ground.singleton(j);
            const Mask pool = full & ~ij;
            Mask k = 0;
            while (true) {
                out.push_back(expr_from_terms(
                    ground, {Term::mutual_info(Rat(1), ground.singleton(i),
                                               ground.singleton(j), k)}));
                if (k == pool)
                    break;
                k = (k - pool) & pool;  // next subset of pool
            }
        }
    }
    return out;
}

namespace {

std::vector<Rat> dense_coeffs(const InfExpr& c)
{
    std::vector<Rat> v(c.ground().full_mask(), Rat(0));
    for (const auto& [mask, coef] : c.coeffs())
        v[mask - 1] = coef;
    return v;
}

}

ShannonCertificate is_shannon_type(const InfExpr& c)
{
    const auto elementals = elemental_inequalities(c.ground());
    std::vector<std::vector<Rat>> columns;
    columns.reserve(elementals.size());
    for (const auto& e : elementals)
        columns.push_back(dense_coeffs(e));

    auto decision = decide_cone_membership(columns, dense_coeffs(c));

    ShannonCertificate cert;
    if (decision.feasible) {
        cert.verdict = ShannonVerdict::ShannonType;
        for (size_t k = 0; k < decision.combination.size(); ++k)
            if (decision.combination[k] != 0)
                cert.multipliers.emplace_back(static_cast<int>(k),
                                              decision.combination[k]);
        return cert;
    }

    cert.verdict = ShannonVerdict::NotShannonType;
    cert.separator = EntropyPoint(c.ground(), std::move(decision.separator));
    return cert;
}

bool is_polymatroid_point(const EntropyPoint& h)
{
    for (const auto& e : elemental_inequalities(h.ground))
        if (pair_expr_point(e, h) < 0)
            return false;
    return true;
}

bool is_polymatroid_point(const RealPoint& h, double tol)
{
    for (const auto& e : elemental_inequalities(h.ground))
        if (pair_expr_point(e, h) < -tol)
            return false;
    return true;
}

}
