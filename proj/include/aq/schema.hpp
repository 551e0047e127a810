#pragma once

#include "aq/simplicial.hpp"

#include <iosfwd>
#include <string>

namespace aq {

// Parse error with the offending line of the input text.
struct SchemaError : std::runtime_error {
  SchemaError(int line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg),
        line(line) {}
  int line;
};

// Structured-text description of a simplicial algebra.  Grammar (one
// directive per line, '#' starts a comment, blank lines ignored; all
// generators must be declared before they are used in a map image):
//
//   field q | fp:<p>
//   truncation <N> <W>
//   name <string>
//   gen <degree> <symbol> <weight>
//   face <i> <n> <symbol> = <lincomb>
//   deg <i> <n> <symbol> = <lincomb>
//   mul <n> <symbol> <symbol> = <lincomb>
//
// where <lincomb> is `0` or `term + term + ...` with term = `<coeff>*<symbol>`
// or `<symbol>`; coefficients are integers or fractions like -3/2.
SimplicialAlgebra parse_algebra(std::istream& in);
SimplicialAlgebra parse_algebra_text(const std::string& text);
SimplicialAlgebra parse_algebra_file(const std::string& path);

// Serializers emitting the same grammar.
class SchemaWriter {
 public:
  static std::string serialize(const SimplicialAlgebra& X);
  // Vector-space export (no `mul` lines); labels become generator symbols.
  static std::string serialize_blocks(const BlockSpace& V, const std::string& name);
};

}  // namespace aq
