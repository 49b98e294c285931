#ifndef ITDUAL_PARSE_HPP
#define ITDUAL_PARSE_HPP

#include "itdual/expr.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace itdual {

struct ParseError : std::runtime_error {
    ParseError(const std::string& message, int position)
        : std::runtime_error(message), position(position) {}
    int position;  // 0-based offset into the input text
};

// Grammar:
//   expr     := ['+'|'-'] term (('+'|'-') term)*
//   term     := [rational ['*']] atom
//   atom     := 'H(' vars ['|' vars] ')' | 'I(' vars (';'|':') vars ['|' vars] ')'
//   vars     := label (','? label)*
//   rational := int ['/' int]
// A run of uppercase letters without commas ("ABC") is the set {A,B,C};
// any other identifier ("X1") is a single label and needs commas as
// separators. The ground set is the union of the labels unless given
// explicitly, in which case unknown labels are an error.
InfExpr parse_expr(const std::string& text,
                   const std::optional<GroundSet>& ground = std::nullopt);

// "A,B" or "AB" to labels, same convention as inside H(...).
std::vector<std::string> parse_label_list(const std::string& text);

enum class ExprStyle {
    HForm,        // raw subset terms in ascending mask order; parses back exactly
    IFormGreedy,  // factors I(i;j|K) patterns for display; non-canonical
};

std::string print_expr(const InfExpr& c, ExprStyle style = ExprStyle::HForm);

}

#endif
