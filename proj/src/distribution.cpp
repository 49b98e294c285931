#include "itdual/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <type_traits>

namespace itdual {

JointDistribution::JointDistribution(GroundSet ground, std::vector<Atom> atoms)
    : ground_(std::move(ground)), atoms_(std::move(atoms))
{
    if (atoms_.empty())
        throw std::invalid_argument("distribution needs at least one atom");
    Rat total = 0;
    std::map<std::vector<std::string>, bool> seen;
    for (const auto& atom : atoms_) {
        if (atom.tuple.size() != static_cast<size_t>(ground_.size()))
            throw std::invalid_argument("atom arity does not match the ground set");
        if (atom.mass <= 0)
            throw std::invalid_argument("atom masses must be positive");
        if (!seen.emplace(atom.tuple, true).second)
            throw std::invalid_argument("duplicate atom tuple");
        total += atom.mass;
    }
    if (total != 1)
        throw std::invalid_argument("atom masses must sum to 1, got " +
                                    rat_to_string(total));
}

std::vector<Atom> marginal(const JointDistribution& d, Mask subset)
{
    if (subset == 0)
        throw std::invalid_argument("marginal of the empty subset");
    if (subset > d.ground().full_mask())
        throw std::invalid_argument("subset mask outside ground set");

    std::map<std::vector<std::string>, Rat> groups;
    for (const auto& atom : d.atoms()) {
        std::vector<std::string> key;
        for (int i = 0; i < d.ground().size(); ++i)
            if (subset & d.ground().singleton(i))
                key.push_back(atom.tuple[i]);
        groups[std::move(key)] += atom.mass;
    }

    std::vector<Atom> out;
    out.reserve(groups.size());
    for (auto& [tuple, mass] : groups)
        out.push_back(Atom{tuple, mass});
    return out;
}

namespace {

template <class Real>
Real log2_of(const Real& p)
{
    if constexpr (std::is_same_v<Real, double>) {
        return std::log2(p);
    } else {
        using std::log;
        static const Real ln2 = log(Real(2));
        return log(p) / ln2;
    }
}

template <class Real>
Real subset_entropy(const JointDistribution& d, Mask subset)
{
    // Summing in sorted-mass order makes the value independent of variable
    // order, so consistent relabelings preserve entropies bit-for-bit.
    std::vector<Rat> masses;
    for (const auto& atom : marginal(d, subset))
        masses.push_back(atom.mass);
    std::sort(masses.begin(), masses.end());

    Real h(0);
    for (const auto& mass : masses) {
        const Real p = mass.convert_to<Real>();
        h -= p * log2_of(p);
    }
    return h;
}

template <class Real>
Real cmi(const JointDistribution& d, Mask a, Mask b, Mask cond)
{
    if (a == 0 || b == 0)
        throw std::invalid_argument("mutual information needs nonempty arguments");
    Real v = subset_entropy<Real>(d, a | cond);
    v += subset_entropy<Real>(d, b | cond);
    v -= subset_entropy<Real>(d, a | b | cond);
    if (cond != 0)
        v -= subset_entropy<Real>(d, cond);
    return v;
}

}

double entropy(const JointDistribution& d, Mask subset)
{
    return subset_entropy<double>(d, subset);
}

BigReal entropy_hp(const JointDistribution& d, Mask subset)
{
    return subset_entropy<BigReal>(d, subset);
}

RealPoint entropic_vector(const JointDistribution& d)
{
    RealPoint h(d.ground());
    for (Mask m = 1; m <= d.ground().full_mask(); ++m)
        h.set(m, entropy(d, m));
    return h;
}

EvalReport evaluate(const InfExpr& c, const JointDistribution& d)
{
    if (!(c.ground() == d.ground()))
        throw std::invalid_argument("expression and distribution ground sets differ");
    EvalReport report;
    for (const auto& [mask, coef] : c.coeffs()) {
        const double term = rat_to_double(coef) * entropy(d, mask);
        report.terms.emplace_back(mask, term);
        report.value += term;
    }
    return report;
}

BigReal evaluate_hp(const InfExpr& c, const JointDistribution& d)
{
    if (!(c.ground() == d.ground()))
        throw std::invalid_argument("expression and distribution ground sets differ");
    BigReal value(0);
    for (const auto& [mask, coef] : c.coeffs())
        value += coef.convert_to<BigReal>() * entropy_hp(d, mask);
    return value;
}

double cond_mutual_info(const JointDistribution& d, Mask a, Mask b, Mask cond)
{
    return cmi<double>(d, a, b, cond);
}

BigReal cond_mutual_info_hp(const JointDistribution& d, Mask a, Mask b, Mask cond)
{
    return cmi<BigReal>(d, a, b, cond);
}

double ingleton_quantity(const JointDistribution& d, Mask a, Mask b, Mask c,
                         Mask dd, Mask cond)
{
    return cond_mutual_info(d, a, b, c | cond) + cond_mutual_info(d, a, b, dd | cond) +
           cond_mutual_info(d, c, dd, cond) - cond_mutual_info(d, a, b, cond);
}

}
