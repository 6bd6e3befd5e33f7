#pragma once

#include <string>
#include <utility>

#include "bezgw/field.hpp"
#include "bezgw/poly.hpp"

namespace bezgw {

class ParseError : public Error {
  public:
    ParseError(const std::string& msg, size_t column)
        : Error(msg + " at column " + std::to_string(column)), column_(column) {}
    size_t column() const { return column_; }

  private:
    size_t column_;
};

/// Parses "f" or "f/g" with a single top-level '/'. Grammar: integer and
/// tightly written rational literals (3/4 with no spaces), the variable,
/// 't' as the extension generator, + - * ^ and parentheses; '^' takes a
/// nonnegative integer exponent and binds tighter than unary minus.
std::pair<Polynomial, Polynomial> parse_rational_function(const std::string& text,
                                                          const FieldPtr& field,
                                                          const std::string& var = "x");

/// Parses a single polynomial (no top-level '/').
Polynomial parse_polynomial(const std::string& text, const FieldPtr& field,
                            const std::string& var = "x");

/// Parses a field element (a polynomial in 't' of degree 0 over base fields).
FieldElement parse_element(const std::string& text, const FieldPtr& field);

}  // namespace bezgw
