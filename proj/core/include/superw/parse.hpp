#pragma once

#include "superw/tensor.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace superw {

/// Syntax error with the offset of the offending character.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    size_t position() const { return position_; }

private:
    size_t position_;
};

/// element := ['+'|'-'] term (('+'|'-') term)*
/// term    := [rational '*'] gen
/// gen     := ('L'|'I'|'G'|'H') '(' rational ')'
/// Whitespace-insensitive. Coset violations (e.g. G(1) in case B) surface as
/// std::domain_error from symbol validation.
AlgElement parse_element(const Algebra& algebra, std::string_view text);

/// tensor := ['+'|'-'] tterm (('+'|'-') tterm)*
/// tterm  := [rational '*'] factor '(x)' factor
/// factor := gen | '(' element ')'
/// Parenthesized factors expand bilinearly.
TensorElement parse_tensor(const Algebra& algebra, std::string_view text);

/// All index values appearing in gen positions, without validating them
/// against any group. Used to infer a default group for quick CLI calls.
std::vector<Rational> collect_indices(std::string_view text);

}  // namespace superw
