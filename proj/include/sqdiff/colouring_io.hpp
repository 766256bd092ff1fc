#pragma once

#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "sqdiff/colouring.hpp"

namespace sqdiff {

// Text format:
//   n k
//   E                       R
//   c_1 c_2 ... c_n    or   lo hi colour    (one line per run)

inline void write_colouring(std::ostream& os, const Colouring& c) {
  os << c.n().str() << ' ' << c.k() << '\n';
  if (c.is_explicit()) {
    os << "E\n";
    const auto& cs = c.colours();
    for (std::size_t i = 0; i < cs.size(); ++i) {
      if (i) os << ' ';
      os << cs[i];
    }
    os << '\n';
  } else {
    os << "R\n";
    for (const auto& r : c.runs()) os << r.lo.str() << ' ' << r.hi.str() << ' ' << r.colour << '\n';
  }
}

inline std::string colouring_to_string(const Colouring& c) {
  std::ostringstream os;
  write_colouring(os, c);
  return os.str();
}

namespace detail {

inline Colour parse_colour(const std::string& tok) {
  BigNat v = parse_natural(tok);
  if (v > std::numeric_limits<Colour>::max()) throw ParseError("colour index too large: " + tok);
  return static_cast<Colour>(v);
}

}  // namespace detail

inline Colouring read_colouring(std::istream& is,
                                std::uint64_t explicit_limit = kDefaultExplicitLimit) {
  std::vector<std::string> toks{std::istream_iterator<std::string>(is),
                                std::istream_iterator<std::string>()};
  if (toks.size() < 3) throw ParseError("colouring text too short");
  BigNat n = parse_natural(toks[0]);
  BigNat kk = parse_natural(toks[1]);
  if (kk > std::numeric_limits<Colour>::max()) throw ParseError("k too large");
  const auto k = static_cast<std::size_t>(kk);
  const std::string& tag = toks[2];
  if (tag == "E") {
    if (n > explicit_limit)
      throw CapacityError("explicit colouring with n = " + n.str() + " exceeds limit");
    const auto count = static_cast<std::size_t>(n);
    if (toks.size() != 3 + count)
      throw ParseError("explicit colouring lists " + std::to_string(toks.size() - 3) +
                       " colours, expected " + n.str());
    std::vector<Colour> cs(count);
    for (std::size_t i = 0; i < count; ++i) cs[i] = detail::parse_colour(toks[3 + i]);
    return Colouring(std::move(n), k, ExplicitAssignment{std::move(cs)});
  }
  if (tag == "R") {
    if ((toks.size() - 3) % 3 != 0) throw ParseError("run lines must have three fields");
    std::vector<Run> runs;
    for (std::size_t i = 3; i < toks.size(); i += 3)
      runs.push_back(Run{parse_natural(toks[i]), parse_natural(toks[i + 1]),
                         detail::parse_colour(toks[i + 2])});
    return Colouring(std::move(n), k, IntervalRuns{std::move(runs)});
  }
  throw ParseError("expected 'E' or 'R', got '" + tag + "'");
}

inline Colouring colouring_from_string(const std::string& text) {
  std::istringstream is(text);
  return read_colouring(is);
}

}  // namespace sqdiff
