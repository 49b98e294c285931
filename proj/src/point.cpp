#include "itdual/point.hpp"

namespace itdual {

Rat pair_expr_point(const InfExpr& c, const EntropyPoint& h)
{
    if (!(c.ground() == h.ground))
        throw std::invalid_argument("ground set mismatch in pairing");
    Rat sum = 0;
    for (const auto& [mask, coef] : c.coeffs())
        sum += coef * h.value(mask);
    return sum;
}

double pair_expr_point(const InfExpr& c, const RealPoint& h)
{
    if (!(c.ground() == h.ground))
        throw std::invalid_argument("ground set mismatch in pairing");
    double sum = 0.0;
    for (const auto& [mask, coef] : c.coeffs())
        sum += rat_to_double(coef) * h.value(mask);
    return sum;
}

}
