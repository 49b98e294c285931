#include "itdual/parse.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace itdual {

namespace {

struct RawVars {
    std::vector<std::string> labels;
    int position;
};

struct RawAtom {
    bool mutual = false;
    RawVars left, right, cond;
    bool has_cond = false;
};

struct RawTerm {
    Rat coef;
    RawAtom atom;
};

class Scanner {
public:
    explicit Scanner(const std::string& text) : text_(text) {}

    void skip_ws()
    {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eof()
    {
        skip_ws();
        return pos_ >= text_.size();
    }

    int pos() const { return static_cast<int>(pos_); }

    char peek()
    {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c)
    {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what)
    {
        if (!accept(c))
            throw ParseError(std::string("expected ") + what, pos());
    }

    std::string integer()
    {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            throw ParseError("expected a number", static_cast<int>(start));
        return text_.substr(start, pos_ - start);
    }

    std::string identifier()
    {
        skip_ws();
        size_t start = pos_;
        if (pos_ >= text_.size() ||
            !std::isalpha(static_cast<unsigned char>(text_[pos_])))
            throw ParseError("expected a variable name", static_cast<int>(start));
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                text_[pos_] == '_'))
            ++pos_;
        return text_.substr(start, pos_ - start);
    }

private:
    const std::string& text_;
    size_t pos_ = 0;
};

bool all_uppercase(const std::string& s)
{
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isupper(static_cast<unsigned char>(c));
    });
}

// A variable list inside H(...) / I(...): identifiers, optionally comma
// separated. Without commas, a run of uppercase letters like "ABC" means the
// single-letter variables A, B, C.
RawVars parse_vars(Scanner& in)
{
    RawVars out;
    out.position = in.pos();
    std::vector<std::string> tokens;
    bool saw_comma = false;
    while (true) {
        tokens.push_back(in.identifier());
        char c = in.peek();
        if (c == ',') {
            in.accept(',');
            saw_comma = true;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)))
            continue;  // blank-separated labels
        break;
    }
    for (const auto& token : tokens) {
        if (!saw_comma && token.size() > 1 && all_uppercase(token)) {
            for (char c : token)
                out.labels.emplace_back(1, c);
        } else {
            out.labels.push_back(token);
        }
    }
    return out;
}

RawAtom parse_atom(Scanner& in)
{
    const int at = in.pos();
    RawAtom atom;
    char kind = in.peek();
    if (kind != 'H' && kind != 'I')
        throw ParseError("expected H(...) or I(...)", at);
    in.accept(kind);
    in.expect('(', "'('");
    atom.mutual = kind == 'I';
    atom.left = parse_vars(in);
    if (atom.mutual) {
        if (!in.accept(';') && !in.accept(':'))
            throw ParseError("expected ';' between mutual information arguments",
                             in.pos());
        atom.right = parse_vars(in);
    }
    if (in.accept('|')) {
        atom.has_cond = true;
        atom.cond = parse_vars(in);
    }
    in.expect(')', "')'");
    return atom;
}

std::vector<RawTerm> parse_terms(Scanner& in)
{
    std::vector<RawTerm> terms;
    bool first = true;
    while (true) {
        if (in.eof()) {
            if (first)
                throw ParseError("empty expression", in.pos());
            break;
        }
        Rat sign = 1;
        if (in.accept('-'))
            sign = -1;
        else if (in.accept('+'))
            sign = 1;
        else if (!first)
            throw ParseError("expected '+' or '-' between terms", in.pos());

        Rat coef = sign;
        if (std::isdigit(static_cast<unsigned char>(in.peek()))) {
            const int at = in.pos();
            std::string num = in.integer();
            std::string den = "1";
            if (in.accept('/'))
                den = in.integer();
            Rat magnitude;
            try {
                magnitude = parse_rational(num + "/" + den);
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what(), at);
            }
            coef = sign * magnitude;
            in.accept('*');
        }
        RawTerm term;
        term.coef = coef;
        term.atom = parse_atom(in);
        terms.push_back(std::move(term));
        first = false;
    }
    return terms;
}

Mask resolve(const GroundSet& ground, const RawVars& vars)
{
    Mask m = 0;
    for (const auto& label : vars.labels) {
        if (!ground.contains(label))
            throw ParseError("unknown variable '" + label + "'", vars.position);
        m |= ground.singleton(ground.index_of(label));
    }
    return m;
}

}

std::vector<std::string> parse_label_list(const std::string& text)
{
    return GroundSet::from_text(text).labels();
}

InfExpr parse_expr(const std::string& text, const std::optional<GroundSet>& ground)
{
    Scanner in(text);

    // literal zero: the empty expression
    if (in.peek() == '0') {
        in.accept('0');
        if (!in.eof())
            throw ParseError("unexpected input after '0'", in.pos());
        if (!ground)
            throw ParseError("the empty expression needs an explicit ground set", 0);
        return InfExpr(*ground);
    }

    auto terms = parse_terms(in);

    GroundSet resolved;
    if (ground) {
        resolved = *ground;
    } else {
        // inferred ground set: all mentioned labels, sorted
        std::set<std::string> labels;
        for (const auto& term : terms) {
            labels.insert(term.atom.left.labels.begin(), term.atom.left.labels.end());
            labels.insert(term.atom.right.labels.begin(), term.atom.right.labels.end());
            labels.insert(term.atom.cond.labels.begin(), term.atom.cond.labels.end());
        }
        resolved = GroundSet(std::vector<std::string>(labels.begin(), labels.end()));
    }

    std::vector<Term> built;
    built.reserve(terms.size());
    for (const auto& term : terms) {
        const Mask cond = resolve(resolved, term.atom.cond);
        const Mask left = resolve(resolved, term.atom.left);
        if (left == 0)
            throw ParseError("entropy argument must be nonempty",
                             term.atom.left.position);
        if (term.atom.mutual) {
            const Mask right = resolve(resolved, term.atom.right);
            if (right == 0)
                throw ParseError("mutual information argument must be nonempty",
                                 term.atom.right.position);
            built.push_back(Term::mutual_info(term.coef, left, right, cond));
        } else {
            built.push_back(Term::entropy(term.coef, left, cond));
        }
    }
    return expr_from_terms(resolved, built);
}

namespace {

std::string joined_labels(const GroundSet& ground, Mask m)
{
    auto labels = ground.labels_of(m);
    std::string out;
    for (size_t i = 0; i < labels.size(); ++i) {
        if (i)
            out += ',';
        out += labels[i];
    }
    return out;
}

void append_term(std::string& out, const Rat& coef, const std::string& atom)
{
    const bool negative = coef < 0;
    const Rat magnitude = negative ? Rat(-coef) : coef;
    if (out.empty())
        out += negative ? "- " : "";
    else
        out += negative ? " - " : " + ";
    if (magnitude != 1)
        out += rat_to_string(magnitude) + " ";
    out += atom;
}

std::string print_h_form(const InfExpr& c)
{
    if (c.empty())
        return "0";
    std::string out;
    for (const auto& [mask, coef] : c.coeffs())
        append_term(out, coef, "H(" + joined_labels(c.ground(), mask) + ")");
    return out;
}

int sign_of(const Rat& v)
{
    return v == 0 ? 0 : (v < 0 ? -1 : 1);
}

std::vector<Mask> subsets_richest_first(Mask pool)
{
    std::vector<Mask> out;
    Mask k = 0;
    while (true) {
        out.push_back(k);
        if (k == pool)
            break;
        k = (k - pool) & pool;
    }
    std::stable_sort(out.begin(), out.end(), [](Mask a, Mask b) {
        return popcount(a) > popcount(b);
    });
    return out;
}

// Greedily peels off q * I(X_i; X_j | X_K) patterns, richest conditioning
// sets first and at most one unit of magnitude per step. Each step consumes
// min(|a|,|b|,|u|,1) from three aligned coefficients and returns at most one
// unit elsewhere, so the L1 norm of the residue strictly decreases and the
// loop terminates. Whatever resists factoring comes out as plain entropies.
std::string print_i_form(const InfExpr& c)
{
    if (c.empty())
        return "0";
    const GroundSet& ground = c.ground();
    const int n = ground.size();
    std::map<Mask, Rat> rest = c.coeffs();
    auto get = [&](Mask m) {
        auto it = rest.find(m);
        return it == rest.end() ? Rat(0) : it->second;
    };
    auto adjust = [&](Mask m, const Rat& delta) {
        auto [it, inserted] = rest.emplace(m, delta);
        if (!inserted) {
            it->second += delta;
            if (it->second == 0)
                rest.erase(it);
        } else if (it->second == 0) {
            rest.erase(it);
        }
    };

    std::vector<std::string> atom_order;
    std::map<std::string, Rat> pieces;
    auto emit = [&](const std::string& atom, const Rat& q) {
        auto [it, inserted] = pieces.emplace(atom, q);
        if (inserted)
            atom_order.push_back(atom);
        else
            it->second += q;
    };

    for (int guard = 0; !rest.empty() && guard < 10000; ++guard) {
        bool factored = false;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                const Mask si = ground.singleton(i), sj = ground.singleton(j);
                for (Mask k : subsets_richest_first(ground.full_mask() & ~(si | sj))) {
                    const Rat a = get(si | k), b = get(sj | k), u = get(si | sj | k);
                    const int s = sign_of(a);
                    if (s == 0 || sign_of(b) != s || sign_of(u) != -s)
                        continue;
                    // q carries sign s, magnitude min(|a|, |b|, |u|, 1); one
                    // unit per candidate per sweep so overlapping patterns
                    // share their aligned coefficients
                    Rat q(s * a);
                    if (Rat mb(s * b); mb < q)
                        q = mb;
                    if (Rat mu(-s * u); mu < q)
                        q = mu;
                    if (q > 1)
                        q = 1;
                    q *= s;
                    adjust(si | k, -q);
                    adjust(sj | k, -q);
                    adjust(si | sj | k, q);
                    if (k != 0)
                        adjust(k, q);
                    std::string atom = "I(" + ground.label(i) + ";" + ground.label(j);
                    if (k != 0)
                        atom += "|" + joined_labels(ground, k);
                    atom += ")";
                    emit(atom, q);
                    factored = true;
                }
            }
        }
        if (!factored)
            break;
    }

    std::string out;
    for (const auto& atom : atom_order)
        if (pieces[atom] != 0)
            append_term(out, pieces[atom], atom);
    for (const auto& [mask, coef] : rest)
        append_term(out, coef, "H(" + joined_labels(ground, mask) + ")");
    if (out.empty())
        return "0";
    return out;
}

}

std::string print_expr(const InfExpr& c, ExprStyle style)
{
    return style == ExprStyle::HForm ? print_h_form(c) : print_i_form(c);
}

}
