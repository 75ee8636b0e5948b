#include "chernsub/expr.hpp"

#include <cctype>
#include <string_view>

namespace chernsub {

namespace {

constexpr unsigned long kExponentCap = 10000;

struct Parser {
    std::string_view text;
    long p;
    Integer max_index;
    std::size_t pos = 0;

    char peek() const { return pos < text.size() ? text[pos] : '\0'; }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (peek() != c) return false;
        ++pos;
        return true;
    }

    [[noreturn]] void fail(std::size_t at, const std::string& msg) const { throw ExprError(at, msg); }

    Integer parse_uint(const char* what) {
        skip_ws();
        const std::size_t at = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == at) fail(at, std::string("expected ") + what);
        return Integer(std::string(text.substr(at, pos - at)), 10);
    }

    SUPolynomial parse_primary() {
        skip_ws();
        const std::size_t at = pos;
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c)))
            return SUPolynomial::constant(p, parse_uint("integer"));
        if (c == 'L') {
            ++pos;
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail(pos, "expected index after 'L'");
            const Integer idx = parse_uint("index");
            if (idx < 1 || idx > max_index)
                fail(at, "lambda index out of range [1, " + max_index.get_str() + "]");
            return SUPolynomial::lambda(p, static_cast<int>(idx.get_si()));
        }
        if (c == '(') {
            ++pos;
            SUPolynomial inner = parse_expr();
            if (!eat(')')) fail(pos, "expected ')'");
            return inner;
        }
        fail(at, "expected integer, 'L<k>', or '('");
    }

    SUPolynomial parse_factor() {
        SUPolynomial base = parse_primary();
        while (eat('^')) {
            skip_ws();
            const std::size_t at = pos;
            const Integer e = parse_uint("exponent");
            if (e > static_cast<long>(kExponentCap))
                fail(at, "exponent exceeds " + std::to_string(kExponentCap));
            base = base.pow(e.get_ui());
        }
        return base;
    }

    SUPolynomial parse_term() {
        SUPolynomial acc = parse_factor();
        while (eat('*')) acc = acc * parse_factor();
        return acc;
    }

    SUPolynomial parse_expr() {
        skip_ws();
        const bool negated = eat('-');
        SUPolynomial acc = parse_term();
        if (negated) acc = -acc;
        for (;;) {
            if (eat('+'))
                acc += parse_term();
            else if (eat('-'))
                acc -= parse_term();
            else
                return acc;
        }
    }
};

}  // namespace

SUPolynomial parse_lambda_expression(const std::string& text, long p) {
    if (!is_prime(p)) throw std::domain_error("parse_lambda_expression: " + std::to_string(p) + " is not prime");
    Parser parser{text, p, Integer(p) * p - 1};
    SUPolynomial x = parser.parse_expr();
    parser.skip_ws();
    if (parser.pos != text.size()) parser.fail(parser.pos, "unexpected character");
    return x;
}

}  // namespace chernsub
