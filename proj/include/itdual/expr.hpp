#ifndef ITDUAL_EXPR_HPP
#define ITDUAL_EXPR_HPP

#include "itdual/ground_set.hpp"
#include "itdual/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace itdual {

// A linear combination of entropies, sum_J c_J H(X_J), kept canonical: only
// nonzero coefficients are stored and every key is a nonempty subset mask.
class InfExpr {
public:
    InfExpr() = default;
    explicit InfExpr(GroundSet ground) : ground_(std::move(ground)) {}
    InfExpr(GroundSet ground, std::map<Mask, Rat> coeffs);

    const GroundSet& ground() const { return ground_; }
    const std::map<Mask, Rat>& coeffs() const { return coeffs_; }

    Rat coeff(Mask m) const;
    bool empty() const { return coeffs_.empty(); }
    int term_count() const { return static_cast<int>(coeffs_.size()); }

    // Accumulates c into the coefficient of subset m, dropping exact zeros.
    // m must be a nonempty subset of the ground set.
    void add(Mask m, const Rat& c);

    InfExpr& operator+=(const InfExpr& other);  // same ground set required
    InfExpr& operator-=(const InfExpr& other);
    InfExpr& operator*=(const Rat& scale);

    friend InfExpr operator+(InfExpr a, const InfExpr& b) { return a += b; }
    friend InfExpr operator-(InfExpr a, const InfExpr& b) { return a -= b; }
    friend InfExpr operator*(const Rat& s, InfExpr a) { return a *= s; }

private:
    GroundSet ground_;
    std::map<Mask, Rat> coeffs_;
};

// Building block for expr_from_terms: a conditional entropy H(J|K) or a
// conditional mutual information I(J;K|L), expanded by
//   H(J|K)   = H(JK) - H(K)
//   I(J;K|L) = H(JL) + H(KL) - H(JKL) - H(L)
struct Term {
    Rat coef;
    Mask left = 0;
    Mask right = 0;  // only used by mutual information terms
    Mask cond = 0;
    bool mutual = false;

    static Term entropy(Rat coef, Mask subset, Mask cond = 0);
    static Term mutual_info(Rat coef, Mask left, Mask right, Mask cond = 0);
};

InfExpr expr_from_terms(const GroundSet& ground, const std::vector<Term>& terms);

// Per-variable coefficient sums r_i = sum of c_J over J containing i,
// indexed like the ground labels.
std::vector<Rat> residuals(const InfExpr& c);

bool is_balanced(const InfExpr& c);

// c minus sum_i r_i H(X_i | X_{N\i}); the result has all residuals zero.
InfExpr balance(const InfExpr& c);

// The formal dual: every H(X_J) is replaced by
// H(X_{N\J}) - H(X_N) + sum_{j in J} H(X_j). The result depends on the
// ground set N, not just on the subsets that carry coefficients.
InfExpr dual_expr(const InfExpr& c);

// Exact coefficient equality. Throws if the ground sets differ.
bool expr_equal(const InfExpr& a, const InfExpr& b);

// Variable assignment realizing an instance of an inequality: every source
// variable maps to a subset of the target ground set. The empty image makes
// a variable deterministic (it vanishes from every term).
struct Substitution {
    GroundSet source;
    GroundSet target;
    std::vector<Mask> images;  // indexed by source variable

    static Substitution identity(const GroundSet& ground);
    static Substitution from_map(
        const GroundSet& source, const GroundSet& target,
        const std::map<std::string, std::vector<std::string>>& images);
};

// H(X_J) -> H(X_{union of images}); terms with empty image union vanish.
InfExpr apply_substitution(const InfExpr& c, const Substitution& s);

// On ground + {fresh}: every H(X_J) becomes H(X_J, Z) - H(Z).
InfExpr conditional_version(const InfExpr& c, const std::string& fresh);

// Same expression over a ground set with the same labels in another order.
InfExpr reindex(const InfExpr& c, const GroundSet& ground);

struct SelfDualConfig {
    int max_image = 1;        // largest substitution image searched
    bool allow_fresh = true;  // also try conditional-version routes
};

enum class SelfDualVerdict { Instance, ConditionalVersion, NotFound };

// A replayable witness: apply_substitution (after conditional_version on
// `fresh`, when set) reproduces dual_expr(c) exactly. Substituting before
// conditioning yields the same expressions as conditioning first with the
// fresh variable mapped onto the conditioner, so only this order is
// searched. NotFound means no witness inside the searched bounds, not a
// disproof.
struct SelfDualCertificate {
    SelfDualVerdict verdict = SelfDualVerdict::NotFound;
    std::optional<Substitution> witness;
    std::optional<std::string> fresh;
};

SelfDualCertificate is_self_dual(const InfExpr& c, const SelfDualConfig& config = {});

// Replays a certificate and checks it reproduces dual_expr(c) exactly.
bool replay_certificate(const InfExpr& c, const SelfDualCertificate& cert);

}

#endif
