#ifndef ITDUAL_POINT_HPP
#define ITDUAL_POINT_HPP

#include "itdual/expr.hpp"
#include "itdual/ground_set.hpp"
#include "itdual/rational.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace itdual {

// A dense set function h over the nonempty subsets, h(empty) = 0 implicitly.
// values[m-1] is h of subset mask m. Exact rational points are what the
// prover exchanges; entropies of distributions live in BasicPoint<double>.
template <class V>
struct BasicPoint {
    GroundSet ground;
    std::vector<V> values;

    BasicPoint() = default;
    explicit BasicPoint(GroundSet g)
        : ground(std::move(g)), values(ground.full_mask(), V(0)) {}
    BasicPoint(GroundSet g, std::vector<V> v)
        : ground(std::move(g)), values(std::move(v))
    {
        if (values.size() != ground.full_mask())
            throw std::invalid_argument("point dimension must be 2^n - 1");
    }

    V value(Mask m) const
    {
        if (m == 0)
            return V(0);
        return values.at(m - 1);
    }

    void set(Mask m, V v)
    {
        values.at(m - 1) = std::move(v);
    }
};

using EntropyPoint = BasicPoint<Rat>;
using RealPoint = BasicPoint<double>;

// Pointwise dual h'(J) = h(N\J) - h(N) + sum_{j in J} h(j).
template <class V>
BasicPoint<V> dual_point(const BasicPoint<V>& h)
{
    const Mask full = h.ground.full_mask();
    BasicPoint<V> out(h.ground);
    for (Mask m = 1; m <= full; ++m) {
        V v = h.value(full & ~m);
        v -= h.value(full);
        for (int i = 0; i < h.ground.size(); ++i)
            if (m & h.ground.singleton(i))
                v += h.value(h.ground.singleton(i));
        out.set(m, v);
    }
    return out;
}

// <c, h> = sum_J c_J h(J). Exact for rational points; coefficients are
// converted when the point is floating.
Rat pair_expr_point(const InfExpr& c, const EntropyPoint& h);
double pair_expr_point(const InfExpr& c, const RealPoint& h);

}

#endif
