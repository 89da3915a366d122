#ifndef PLC_PARSE_HPP
#define PLC_PARSE_HPP

#include <string>

#include "plc/bipoly.hpp"
#include "plc/tripoly.hpp"

namespace plc {

class SyntaxError : public MathError {
public:
    SyntaxError(const std::string& msg, std::size_t pos)
        : MathError("syntax error at position " + std::to_string(pos) + ": " + msg), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

class WrongVariables : public MathError {
public:
    using MathError::MathError;
};

/// Grammar: sums/differences of products of powers of integer literals, the field generator `a`,
/// the variables, and parenthesized expressions. `/` divides by a nonzero constant.
/// Local mode accepts x, y; projective mode accepts x, y, z (either case).
BiPoly parse_poly(const std::string& src, Field f);
TriPoly parse_projective(const std::string& src, Field f);
/// A field element written in the generator `a`, e.g. "3", "a^2+1", "2/3".
Elem parse_element(const std::string& src, Field f);

} // namespace plc

#endif
