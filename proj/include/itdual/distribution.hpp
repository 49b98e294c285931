#ifndef ITDUAL_DISTRIBUTION_HPP
#define ITDUAL_DISTRIBUTION_HPP

#include "itdual/expr.hpp"
#include "itdual/ground_set.hpp"
#include "itdual/point.hpp"
#include "itdual/rational.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <string>
#include <utility>
#include <vector>

namespace itdual {

// 256-bit mantissa float for entropy computations where Theta(eps^2) terms
// sink below double rounding noise (eps around 2^-20 and smaller).
using BigReal = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<256, boost::multiprecision::digit_base_2>>;

struct Atom {
    std::vector<std::string> tuple;  // one symbol per ground variable
    Rat mass;
};

// Finite support with exact rational masses: all masses positive, summing to
// one, tuples pairwise distinct and of arity n.
class JointDistribution {
public:
    JointDistribution(GroundSet ground, std::vector<Atom> atoms);

    const GroundSet& ground() const { return ground_; }
    const std::vector<Atom>& atoms() const { return atoms_; }

private:
    GroundSet ground_;
    std::vector<Atom> atoms_;
};

// Masses grouped by the projection of each tuple onto `subset`, sorted by
// projected tuple. The projected masses again sum to one. Throws on an empty
// subset.
std::vector<Atom> marginal(const JointDistribution& d, Mask subset);

// Shannon entropy of the marginal on `subset`, in bits.
double entropy(const JointDistribution& d, Mask subset);
BigReal entropy_hp(const JointDistribution& d, Mask subset);

// Entropy of every nonempty subset.
RealPoint entropic_vector(const JointDistribution& d);

struct EvalReport {
    double value = 0.0;
    std::vector<std::pair<Mask, double>> terms;  // c_J * H(X_J) per subset
};

// sum_J c_J H_d(X_J); the expression and distribution must share the ground
// set.
EvalReport evaluate(const InfExpr& c, const JointDistribution& d);
BigReal evaluate_hp(const InfExpr& c, const JointDistribution& d);

// I(A;B|C) = H(AC) + H(BC) - H(ABC) - H(C), with H(empty) = 0. A and B must
// be nonempty; cond may be 0.
double cond_mutual_info(const JointDistribution& d, Mask a, Mask b, Mask cond = 0);
BigReal cond_mutual_info_hp(const JointDistribution& d, Mask a, Mask b, Mask cond = 0);

// I(A;B|CE) + I(A;B|DE) + I(C;D|E) - I(A;B|E).
double ingleton_quantity(const JointDistribution& d, Mask a, Mask b, Mask c,
                         Mask dd, Mask cond = 0);

}

#endif
