#ifndef TORIMULT_PROBLEM_HPP
#define TORIMULT_PROBLEM_HPP

#include "torimult/multiplier.hpp"

#include <map>
#include <string>

namespace torimult {

/// A parsed problem file: a variety plus named divisors, ideals, pairs and
/// boundaries. The file format is UTF-8 JSON with integers for lattice
/// vectors and "p/q" strings for rationals; no floats accepted or emitted.
/// Coefficient arrays are permuted on load from the declared ray order to the
/// canonical (lex) ray order, which is also the order of all output.
struct ProblemDocument {
  AffineToricVariety X;
  std::map<std::string, TWeilDivisor> divisors;
  std::map<std::string, MonomialFractionalIdeal> ideals;
  std::map<std::string, std::vector<std::pair<Rat, std::string>>> pairs;
  std::map<std::string, TWeilDivisor> boundaries;

  const TWeilDivisor& divisor(const std::string& name) const;
  const MonomialFractionalIdeal& ideal(const std::string& name) const;
  const TWeilDivisor& boundary(const std::string& name) const;
  PairSpec pair(const std::string& name) const;
};

/// ParseError carries a 1-based line/column of the offending location.
struct ParseError {
  std::string message;
  size_t line = 0;
  size_t column = 0;
};

/// Parses a problem document; throws ParseError on malformed input.
ProblemDocument parse_problem(const std::string& json_text);

/// Canonical serialization (round-trip fixed point of parse_problem).
std::string serialize_problem(const ProblemDocument& doc);

/// The built-in gallery: quadric-cone, conifold, nqg-cone, cusp-plane.
std::vector<std::string> gallery_names();
ProblemDocument gallery_model(const std::string& name);
std::string gallery_json(const std::string& name);

} // namespace torimult

#endif
