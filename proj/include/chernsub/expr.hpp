#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "chernsub/repring.hpp"

namespace chernsub {

// Parse failure with the 0-based offset of the offending character.
class ExprError : public std::runtime_error {
public:
    ExprError(std::size_t position, const std::string& message)
        : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Grammar (whitespace-insensitive between tokens):
//   expr    := ['-'] term (('+' | '-') term)*
//   term    := factor ('*' factor)*
//   factor  := primary ('^' uint)*
//   primary := uint | 'L' uint | '(' expr ')'
// Integer literals are unbounded; 'L<k>' needs 1 <= k <= p^2-1; exponents
// are capped at 10000.
SUPolynomial parse_lambda_expression(const std::string& text, long p);

}  // namespace chernsub
