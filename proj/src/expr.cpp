#include "itdual/expr.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace itdual {

namespace {

void require_subset(const GroundSet& ground, Mask m, bool allow_empty = false)
{
    if (m == 0 && !allow_empty)
        throw std::invalid_argument("empty subset not allowed here");
    if (m > ground.full_mask())
        throw std::invalid_argument("subset mask outside ground set");
}

void require_same_ground(const GroundSet& a, const GroundSet& b)
{
    if (!(a == b))
        throw std::invalid_argument("ground set mismatch");
}

}

InfExpr::InfExpr(GroundSet ground, std::map<Mask, Rat> coeffs)
    : ground_(std::move(ground))
{
    for (auto& [mask, coef] : coeffs) {
        require_subset(ground_, mask);
        if (coef != 0)
            coeffs_.emplace(mask, std::move(coef));
    }
}

Rat InfExpr::coeff(Mask m) const
{
    auto it = coeffs_.find(m);
    return it == coeffs_.end() ? Rat(0) : it->second;
}

void InfExpr::add(Mask m, const Rat& c)
{
    require_subset(ground_, m);
    if (c == 0)
        return;
    auto [it, inserted] = coeffs_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            coeffs_.erase(it);
    }
}

InfExpr& InfExpr::operator+=(const InfExpr& other)
{
    require_same_ground(ground_, other.ground_);
    for (const auto& [mask, coef] : other.coeffs_)
        add(mask, coef);
    return *this;
}

InfExpr& InfExpr::operator-=(const InfExpr& other)
{
    require_same_ground(ground_, other.ground_);
    for (const auto& [mask, coef] : other.coeffs_)
        add(mask, -coef);
    return *this;
}

InfExpr& InfExpr::operator*=(const Rat& scale)
{
    if (scale == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [mask, coef] : coeffs_)
        coef *= scale;
    return *this;
}

Term Term::entropy(Rat coef, Mask subset, Mask cond)
{
    Term t;
    t.coef = std::move(coef);
    t.left = subset;
    t.cond = cond;
    t.mutual = false;
    return t;
}

Term Term::mutual_info(Rat coef, Mask left, Mask right, Mask cond)
{
    Term t;
    t.coef = std::move(coef);
    t.left = left;
    t.right = right;
    t.cond = cond;
    t.mutual = true;
    return t;
}

InfExpr expr_from_terms(const GroundSet& ground, const std::vector<Term>& terms)
{
    InfExpr out(ground);
    auto add = [&](Mask m, const Rat& c) {
        if (m != 0)  // H() = 0
            out.add(m, c);
    };
    for (const auto& t : terms) {
        require_subset(ground, t.left, /*allow_empty=*/!t.mutual);
        require_subset(ground, t.cond, /*allow_empty=*/true);
        if (t.mutual) {
            require_subset(ground, t.right);
            // I(J;K|L) = H(JL) + H(KL) - H(JKL) - H(L)
            add(t.left | t.cond, t.coef);
            add(t.right | t.cond, t.coef);
            add(t.left | t.right | t.cond, -t.coef);
            add(t.cond, -t.coef);
        } else {
            // H(J|K) = H(JK) - H(K)
            add(t.left | t.cond, t.coef);
            add(t.cond, -t.coef);
        }
    }
    return out;
}

std::vector<Rat> residuals(const InfExpr& c)
{
    const int n = c.ground().size();
    std::vector<Rat> r(n, Rat(0));
    for (const auto& [mask, coef] : c.coeffs())
        for (int i = 0; i < n; ++i)
            if (mask & c.ground().singleton(i))
                r[i] += coef;
    return r;
}

bool is_balanced(const InfExpr& c)
{
    auto r = residuals(c);
    return std::all_of(r.begin(), r.end(), [](const Rat& v) { return v == 0; });
}

InfExpr balance(const InfExpr& c)
{
    const Mask full = c.ground().full_mask();
    auto r = residuals(c);
    InfExpr out = c;
    for (int i = 0; i < c.ground().size(); ++i) {
        if (r[i] == 0)
            continue;
        // subtract r_i * H(X_i | X_{N\i}) = r_i * (H(N) - H(N\i))
        const Mask rest = full & ~c.ground().singleton(i);
        out.add(full, -r[i]);
        if (rest != 0)
            out.add(rest, r[i]);
    }
    return out;
}

InfExpr dual_expr(const InfExpr& c)
{
    const GroundSet& ground = c.ground();
    const Mask full = ground.full_mask();
    InfExpr out(ground);
    for (const auto& [mask, coef] : c.coeffs()) {
        // H(X_J) -> H(X_{N\J}) - H(X_N) + sum over singletons of J
        const Mask complement = full & ~mask;
        if (complement != 0)
            out.add(complement, coef);
        out.add(full, -coef);
        for (int i = 0; i < ground.size(); ++i)
            if (mask & ground.singleton(i))
                out.add(ground.singleton(i), coef);
    }
    return out;
}

bool expr_equal(const InfExpr& a, const InfExpr& b)
{
    require_same_ground(a.ground(), b.ground());
    return a.coeffs() == b.coeffs();
}

Substitution Substitution::identity(const GroundSet& ground)
{
    Substitution s;
    s.source = ground;
    s.target = ground;
    for (int i = 0; i < ground.size(); ++i)
        s.images.push_back(ground.singleton(i));
    return s;
}

Substitution Substitution::from_map(
    const GroundSet& source, const GroundSet& target,
    const std::map<std::string, std::vector<std::string>>& images)
{
    Substitution s;
    s.source = source;
    s.target = target;
    s.images.assign(source.size(), 0);
    for (const auto& [label, image] : images)
        s.images[source.index_of(label)] = target.mask_of(image);
    if (images.size() != static_cast<size_t>(source.size()))
        throw std::invalid_argument("substitution must map every source variable");
    return s;
}

InfExpr apply_substitution(const InfExpr& c, const Substitution& s)
{
    if (!(c.ground() == s.source))
        throw std::invalid_argument("substitution source does not match expression ground set");
    if (s.images.size() != static_cast<size_t>(s.source.size()))
        throw std::invalid_argument("substitution must map every source variable");
    InfExpr out(s.target);
    for (const auto& [mask, coef] : c.coeffs()) {
        Mask image = 0;
        for (int i = 0; i < s.source.size(); ++i)
            if (mask & s.source.singleton(i))
                image |= s.images[i];
        if (image != 0)  // empty image union means the term collapses to H() = 0
            out.add(image, coef);
    }
    return out;
}

InfExpr conditional_version(const InfExpr& c, const std::string& fresh)
{
    GroundSet ground = c.ground().extended(fresh);
    const Mask z = ground.singleton(ground.size() - 1);
    InfExpr out(ground);
    for (const auto& [mask, coef] : c.coeffs()) {
        // H(X_J) -> H(X_J, Z) - H(Z)
        out.add(mask | z, coef);
        out.add(z, -coef);
    }
    return out;
}

InfExpr reindex(const InfExpr& c, const GroundSet& ground)
{
    if (ground.size() != c.ground().size())
        throw std::invalid_argument("reindex requires the same label set");
    std::vector<Mask> to_new(c.ground().size());
    for (int i = 0; i < c.ground().size(); ++i)
        to_new[i] = ground.singleton(ground.index_of(c.ground().label(i)));
    InfExpr out(ground);
    for (const auto& [mask, coef] : c.coeffs()) {
        Mask m = 0;
        for (int i = 0; i < c.ground().size(); ++i)
            if (mask & c.ground().singleton(i))
                m |= to_new[i];
        out.add(m, coef);
    }
    return out;
}

namespace {

// Substitution images tried during the self-duality search: singletons in
// ground order first (plain relabelings make the nicest witnesses), then the
// empty image, then larger subsets by (size, mask).
std::vector<Mask> image_candidates(const GroundSet& target, int max_image)
{
    std::vector<Mask> out;
    for (int i = 0; i < target.size(); ++i)
        out.push_back(target.singleton(i));
    out.push_back(0);
    for (int size = 2; size <= max_image; ++size)
        for (Mask m = 1; m <= target.full_mask(); ++m)
            if (popcount(m) == size)
                out.push_back(m);
    return out;
}

// Odometer over all image assignments; calls visit(images) until it returns
// true. Returns whether any call succeeded.
bool enumerate_substitutions(int num_vars, const std::vector<Mask>& candidates,
                             const std::function<bool(const std::vector<Mask>&)>& visit)
{
    std::vector<size_t> digits(num_vars, 0);
    std::vector<Mask> images(num_vars);
    while (true) {
        for (int i = 0; i < num_vars; ++i)
            images[i] = candidates[digits[i]];
        if (visit(images))
            return true;
        int pos = num_vars - 1;
        while (pos >= 0 && ++digits[pos] == candidates.size())
            digits[pos--] = 0;
        if (pos < 0)
            return false;
    }
}

std::string pick_fresh_label(const GroundSet& ground)
{
    for (char c = 'Z'; c >= 'A'; --c) {
        std::string label(1, c);
        if (!ground.contains(label))
            return label;
    }
    for (int i = 0;; ++i) {
        std::string label = "Z" + std::to_string(i);
        if (!ground.contains(label))
            return label;
    }
}

}

SelfDualCertificate is_self_dual(const InfExpr& c, const SelfDualConfig& config)
{
    const GroundSet& ground = c.ground();
    const InfExpr dual = dual_expr(c);
    const auto candidates = image_candidates(ground, config.max_image);

    SelfDualCertificate cert;

    // Route 1: the dual is a plain instance.
    Substitution s;
    s.source = ground;
    s.target = ground;
    bool found = enumerate_substitutions(
        ground.size(), candidates, [&](const std::vector<Mask>& images) {
            s.images = images;
            return expr_equal(apply_substitution(c, s), dual);
        });
    if (found) {
        cert.verdict = SelfDualVerdict::Instance;
        cert.witness = s;
        return cert;
    }

    if (!config.allow_fresh)
        return cert;

    const std::string fresh = pick_fresh_label(ground);

    // Route 2: conditional version first, then substitute everything
    // (including the fresh conditioner) back into the original variables.
    const InfExpr conditioned = conditional_version(c, fresh);
    Substitution s2;
    s2.source = conditioned.ground();
    s2.target = ground;
    found = enumerate_substitutions(
        s2.source.size(), candidates, [&](const std::vector<Mask>& images) {
            s2.images = images;
            return expr_equal(apply_substitution(conditioned, s2), dual);
        });
    if (found) {
        cert.verdict = SelfDualVerdict::ConditionalVersion;
        cert.witness = s2;
        cert.fresh = fresh;
        return cert;
    }

    return cert;
}

bool replay_certificate(const InfExpr& c, const SelfDualCertificate& cert)
{
    const InfExpr dual = dual_expr(c);
    switch (cert.verdict) {
    case SelfDualVerdict::NotFound:
        return false;
    case SelfDualVerdict::Instance:
        return cert.witness && expr_equal(apply_substitution(c, *cert.witness), dual);
    case SelfDualVerdict::ConditionalVersion: {
        if (!cert.witness || !cert.fresh)
            return false;
        if (cert.substitute_first) {
            InfExpr inst = apply_substitution(c, *cert.witness);
            InfExpr cond = conditional_version(inst, *cert.fresh);
            return expr_equal(reindex(cond, c.ground()), dual);
        }
        InfExpr cond = conditional_version(c, *cert.fresh);
        return expr_equal(apply_substitution(cond, *cert.witness), dual);
    }
    }
    return false;
}

}
