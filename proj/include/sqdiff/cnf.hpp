#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "sqdiff/colouring.hpp"
#include "sqdiff/solutions.hpp"

namespace sqdiff {

struct Cnf {
  std::int32_t num_vars = 0;
  std::vector<std::vector<std::int32_t>> clauses;

  friend bool operator==(const Cnf&, const Cnf&) = default;
};

/// Variable for "point x has colour c": (x - 1) * k + c + 1.
inline std::int32_t colour_var(std::uint64_t x, std::size_t c, std::size_t k) {
  return static_cast<std::int32_t>((x - 1) * k + c + 1);
}

/// Colouring instance for [1, n] with k colours. Clauses, in order:
/// at-least-one colour per point, optional pairwise at-most-one per point,
/// then one clause per (solution triple, colour) forbidding a monochromatic
/// triple, repeated literals collapsed.
inline Cnf encode_cnf(std::size_t k, std::uint64_t n, bool at_most_one = false) {
  if (k < 1) throw DomainError("encode_cnf needs k >= 1");
  if (n > 0 && (n > static_cast<std::uint64_t>(std::numeric_limits<std::int32_t>::max()) / k))
    throw CapacityError("n * k overflows DIMACS variable indices");
  Cnf cnf;
  cnf.num_vars = static_cast<std::int32_t>(n * k);
  for (std::uint64_t x = 1; x <= n; ++x) {
    std::vector<std::int32_t> alo;
    for (std::size_t c = 0; c < k; ++c) alo.push_back(colour_var(x, c, k));
    cnf.clauses.push_back(std::move(alo));
  }
  if (at_most_one)
    for (std::uint64_t x = 1; x <= n; ++x)
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b)
          cnf.clauses.push_back({-colour_var(x, a, k), -colour_var(x, b, k)});
  if (solution_count(n) * k > kMaxEnumeratedTriples)
    throw CapacityError("too many triple clauses");
  for_each_solution(n, [&](std::uint64_t x, std::uint64_t y, std::uint64_t z) {
    for (std::size_t c = 0; c < k; ++c) {
      std::vector<std::int32_t> cl{-colour_var(x, c, k)};
      for (auto p : {y, z}) {
        const auto lit = -colour_var(p, c, k);
        if (std::find(cl.begin(), cl.end(), lit) == cl.end()) cl.push_back(lit);
      }
      cnf.clauses.push_back(std::move(cl));
    }
  });
  return cnf;
}

inline void write_dimacs(std::ostream& os, const Cnf& cnf) {
  os << "p cnf " << cnf.num_vars << ' ' << cnf.clauses.size() << '\n';
  for (const auto& cl : cnf.clauses) {
    for (auto lit : cl) os << lit << ' ';
    os << "0\n";
  }
}

inline std::string to_dimacs(const Cnf& cnf) {
  std::ostringstream os;
  write_dimacs(os, cnf);
  return os.str();
}

/// Reads DIMACS CNF; comment lines ('c') are skipped.
inline Cnf parse_dimacs(std::istream& is) {
  Cnf cnf;
  std::string tok;
  bool header = false;
  std::size_t declared = 0;
  std::vector<std::int32_t> cur;
  while (is >> tok) {
    if (tok == "c") {
      std::getline(is, tok);
      continue;
    }
    if (tok == "p") {
      std::string fmt;
      if (!(is >> fmt >> cnf.num_vars >> declared) || fmt != "cnf")
        throw ParseError("bad DIMACS header");
      header = true;
      continue;
    }
    if (!header) throw ParseError("clause before DIMACS header");
    const long long lit = std::stoll(tok);
    if (lit == 0) {
      cnf.clauses.push_back(std::move(cur));
      cur.clear();
    } else {
      if (std::llabs(lit) > cnf.num_vars) throw ParseError("literal out of range: " + tok);
      cur.push_back(static_cast<std::int32_t>(lit));
    }
  }
  if (!cur.empty()) throw ParseError("unterminated clause");
  if (cnf.clauses.size() != declared) throw ParseError("clause count does not match header");
  return cnf;
}

inline Cnf parse_dimacs(const std::string& text) {
  std::istringstream is(text);
  return parse_dimacs(is);
}

/// Lowest true colour per point. model[v] is the value of variable v
/// (index 0 unused).
inline Colouring decode_model(const std::vector<bool>& model, std::size_t k, std::uint64_t n) {
  std::vector<Colour> cs(n);
  for (std::uint64_t x = 1; x <= n; ++x) {
    std::size_t c = 0;
    while (c < k && !model[colour_var(x, c, k)]) ++c;
    if (c == k) throw InvariantError("model leaves point " + std::to_string(x) + " uncoloured");
    cs[x - 1] = static_cast<Colour>(c);
  }
  return Colouring::explicit_form(k, std::move(cs));
}

}  // namespace sqdiff
