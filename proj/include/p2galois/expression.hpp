#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "p2galois/rational_function.hpp"

namespace p2g {

/// Lexical or syntax error, with the byte offset into the input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// AST for rational expressions in the single variable z. Integer powers only;
/// a quotient of two integer literals is folded into a rational literal.
struct ExpressionAST {
    enum class Kind {
        IntegerLiteral,
        RationalLiteral,
        Variable,
        Negation,
        Sum,
        Difference,
        Product,
        Quotient,
        Power,
        Group,
    };

    Kind kind;
    std::size_t position = 0;           // byte offset of the node's first token
    Rational value;                     // literals
    unsigned exponent = 0;              // Power
    std::unique_ptr<ExpressionAST> lhs; // unary child or left operand
    std::unique_ptr<ExpressionAST> rhs; // right operand
};

/// Parses with the usual precedence (power, then unary minus, then * and /,
/// then + and -; binary operators left-associative). Throws ParseError.
std::unique_ptr<ExpressionAST> parse_expression(const std::string& input);

/// Evaluates an AST; division by a rational function that is identically zero
/// raises std::domain_error.
RationalFunction evaluate(const ExpressionAST& ast);

/// parse + evaluate, reduced to canonical form.
RationalFunction parse_rational_expression(const std::string& input);

}  // namespace p2g
