#pragma once

#include "hvir/ward.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace hvir {

/// Malformed input; position is a 0-based character offset.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Whitespace-separated insertions, each FIELD@label with FIELD one of
///   T[k,m]          the descendant T_{k,m}
///   dT[k,m]         its first derivative, d^nT[k,m] the n-th
///   L[a,b,...]      the word L_a L_b ... 1 (normal ordered)
///   1               the vacuum
/// Labels are [A-Za-z_][A-Za-z0-9_]*. The empty string is the empty list.
std::vector<Insertion> parse_insertions(const std::string& text);

/// A single FIELD of the insertion grammar (no label).
PBWVector parse_field_vector(const std::string& text);

/// Integer or fraction "p/q" (optionally signed); throws ParseError.
Rational parse_rational(const std::string& text);

}  // namespace hvir
