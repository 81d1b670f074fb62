#pragma once

// Curated paper-scheme codes: valid terms and formulas whose building
// sequences stay small enough to evaluate literally, and corrupted codes.

#include <vector>

#include "arith/ast.hpp"

#include "arith/coding.hpp"

namespace arith::test {

inline std::vector<Natural> paper_corpus() {
  std::vector<Natural> valid;
  for (const char* t : {"0", "1", "v0", "v1", "v2", "v3", "v5", "v9", "(0 + 0)", "(0 + 1)", "(1 + 0)", "(0 * 0)",
                        "(1 * 0)", "(v0 + 0)", "(0 + v0)", "(v0 + v0)"})
    valid.push_back(encode(Scheme::Paper, parse_term(t)));
  for (const char* f : {"(0 = 0)", "(0 = 1)", "(1 = 0)", "(0 <= 0)", "(v0 = 0)", "(v0 = v0)", "(0 = v0)",
                        "(0 <= v0)"})
    valid.push_back(encode(Scheme::Paper, parse_formula(f)));
  std::vector<Natural> out = valid;
  for (const Natural& c : valid) {
    out.push_back(c + 2);
    out.push_back(c * 3);
  }
  // well-formed shapes with bad parts
  const auto bad = [](unsigned op, std::vector<Natural> parts) {
    parts.insert(parts.begin(), op);
    return Natural(2 * seq_encode(Scheme::Paper, parts) + 1);
  };
  out.push_back(bad(19, {1, 1}));   // no such symbol
  out.push_back(bad(9, {1}));       // = with one part
  out.push_back(bad(9, {1, 4}));    // 4 is not a term
  out.push_back(bad(5, {1, 460801}));  // a formula inside a term
  out.push_back(bad(13, {3}));      // negation of a term
  out.push_back(bad(17, {3, 1, 460801}));  // bound variable not a variable
  for (unsigned c : {0u, 7u, 11u, 15u, 24u, 100u, 1000u}) out.push_back(c);
  return out;
}

}  // namespace arith::test
