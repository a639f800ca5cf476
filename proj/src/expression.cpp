#include "p2galois/expression.hpp"

#include <cctype>

namespace p2g {

namespace {

struct Token {
    enum class Kind { Integer, Variable, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
    Kind kind;
    std::size_t position;
    std::string text;  // digits for Integer
};

std::vector<Token> tokenize(const std::string& input) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < input.size()) {
        char c = input[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i;
            while (i < input.size() && std::isdigit(static_cast<unsigned char>(input[i]))) ++i;
            out.push_back({Token::Kind::Integer, start, input.substr(start, i - start)});
            continue;
        }
        Token::Kind kind;
        switch (c) {
            case 'z': kind = Token::Kind::Variable; break;
            case '+': kind = Token::Kind::Plus; break;
            case '-': kind = Token::Kind::Minus; break;
            case '*': kind = Token::Kind::Star; break;
            case '/': kind = Token::Kind::Slash; break;
            case '^': kind = Token::Kind::Caret; break;
            case '(': kind = Token::Kind::LParen; break;
            case ')': kind = Token::Kind::RParen; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", i);
        }
        out.push_back({kind, i, {}});
        ++i;
    }
    out.push_back({Token::Kind::End, input.size(), {}});
    return out;
}

using Node = std::unique_ptr<ExpressionAST>;

Node make_node(ExpressionAST::Kind kind, std::size_t position) {
    auto node = std::make_unique<ExpressionAST>();
    node->kind = kind;
    node->position = position;
    return node;
}

class Parser {
public:
    explicit Parser(const std::string& input) : tokens_(tokenize(input)) {}

    Node parse() {
        Node e = expression();
        if (peek().kind != Token::Kind::End) throw ParseError("trailing input", peek().position);
        return e;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    Token take() { return tokens_[pos_++]; }
    bool accept(Token::Kind kind) {
        if (peek().kind != kind) return false;
        ++pos_;
        return true;
    }

    Node expression() {
        Node left = term();
        for (;;) {
            if (accept(Token::Kind::Plus)) {
                Node node = make_node(ExpressionAST::Kind::Sum, left->position);
                node->lhs = std::move(left);
                node->rhs = term();
                left = std::move(node);
            } else if (accept(Token::Kind::Minus)) {
                Node node = make_node(ExpressionAST::Kind::Difference, left->position);
                node->lhs = std::move(left);
                node->rhs = term();
                left = std::move(node);
            } else {
                return left;
            }
        }
    }

    Node term() {
        Node left = unary();
        for (;;) {
            if (accept(Token::Kind::Star)) {
                Node node = make_node(ExpressionAST::Kind::Product, left->position);
                node->lhs = std::move(left);
                node->rhs = unary();
                left = std::move(node);
            } else if (accept(Token::Kind::Slash)) {
                Node rhs = unary();
                // integer / integer folds to a rational literal
                if (left->kind == ExpressionAST::Kind::IntegerLiteral &&
                    rhs->kind == ExpressionAST::Kind::IntegerLiteral) {
                    if (rhs->value.is_zero()) throw ParseError("division by zero", rhs->position);
                    Node node = make_node(ExpressionAST::Kind::RationalLiteral, left->position);
                    node->value = left->value / rhs->value;
                    left = std::move(node);
                } else {
                    Node node = make_node(ExpressionAST::Kind::Quotient, left->position);
                    node->lhs = std::move(left);
                    node->rhs = std::move(rhs);
                    left = std::move(node);
                }
            } else {
                return left;
            }
        }
    }

    Node unary() {
        if (peek().kind == Token::Kind::Minus) {
            std::size_t at = take().position;
            Node node = make_node(ExpressionAST::Kind::Negation, at);
            node->lhs = unary();
            return node;
        }
        return power();
    }

    Node power() {
        Node base = atom();
        if (!accept(Token::Kind::Caret)) return base;
        const Token& exp = peek();
        if (exp.kind != Token::Kind::Integer)
            throw ParseError("exponent must be a nonnegative integer literal", exp.position);
        take();
        mpz_class value(exp.text);
        if (!value.fits_uint_p()) throw ParseError("exponent too large", exp.position);
        Node node = make_node(ExpressionAST::Kind::Power, base->position);
        node->lhs = std::move(base);
        node->exponent = value.get_ui();
        return node;
    }

    Node atom() {
        const Token& token = peek();
        switch (token.kind) {
            case Token::Kind::Integer: {
                take();
                Node node = make_node(ExpressionAST::Kind::IntegerLiteral, token.position);
                node->value = Rational(mpz_class(token.text));
                return node;
            }
            case Token::Kind::Variable: {
                take();
                return make_node(ExpressionAST::Kind::Variable, token.position);
            }
            case Token::Kind::LParen: {
                std::size_t at = take().position;
                Node inner = expression();
                if (!accept(Token::Kind::RParen)) throw ParseError("missing ')'", peek().position);
                Node node = make_node(ExpressionAST::Kind::Group, at);
                node->lhs = std::move(inner);
                return node;
            }
            case Token::Kind::End:
                throw ParseError("unexpected end of input", token.position);
            default:
                throw ParseError("expected a number, 'z', or '('", token.position);
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

}  // namespace

std::unique_ptr<ExpressionAST> parse_expression(const std::string& input) { return Parser(input).parse(); }

RationalFunction evaluate(const ExpressionAST& ast) {
    switch (ast.kind) {
        case ExpressionAST::Kind::IntegerLiteral:
        case ExpressionAST::Kind::RationalLiteral:
            return RationalFunction(ast.value);
        case ExpressionAST::Kind::Variable:
            return RationalFunction::variable();
        case ExpressionAST::Kind::Negation:
            return -evaluate(*ast.lhs);
        case ExpressionAST::Kind::Sum:
            return evaluate(*ast.lhs) + evaluate(*ast.rhs);
        case ExpressionAST::Kind::Difference:
            return evaluate(*ast.lhs) - evaluate(*ast.rhs);
        case ExpressionAST::Kind::Product:
            return evaluate(*ast.lhs) * evaluate(*ast.rhs);
        case ExpressionAST::Kind::Quotient: {
            RationalFunction denominator = evaluate(*ast.rhs);
            if (denominator.is_zero())
                throw std::domain_error("division by zero (denominator vanishes at position " +
                                        std::to_string(ast.rhs->position) + ")");
            return evaluate(*ast.lhs) / denominator;
        }
        case ExpressionAST::Kind::Power:
            return pow(evaluate(*ast.lhs), ast.exponent);
        case ExpressionAST::Kind::Group:
            return evaluate(*ast.lhs);
    }
    throw std::logic_error("unreachable");
}

RationalFunction parse_rational_expression(const std::string& input) {
    return evaluate(*parse_expression(input));
}

}  // namespace p2g
