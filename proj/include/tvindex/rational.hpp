#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

// Boost 1.74's mixed rational/integer comparisons recurse forever under
// C++20 rewritten operators. These exact-match overloads win overload
// resolution so the broken templates are never instantiated.
namespace boost {

#define TVI_MIXED_COMPARISONS(I)                                                                             \
  inline bool operator==(const rational<std::int64_t>& r, I i) {                                            \
    return r.denominator() == 1 && r.numerator() == i;                                                       \
  }                                                                                                          \
  inline bool operator<(const rational<std::int64_t>& r, I i) { return r < rational<std::int64_t>(i); }     \
  inline bool operator>(const rational<std::int64_t>& r, I i) { return r > rational<std::int64_t>(i); }     \
  inline bool operator<=(const rational<std::int64_t>& r, I i) { return !(r > rational<std::int64_t>(i)); } \
  inline bool operator>=(const rational<std::int64_t>& r, I i) { return !(r < rational<std::int64_t>(i)); } \
  inline bool operator<(I i, const rational<std::int64_t>& r) { return rational<std::int64_t>(i) < r; }     \
  inline bool operator>(I i, const rational<std::int64_t>& r) { return rational<std::int64_t>(i) > r; }     \
  inline bool operator<=(I i, const rational<std::int64_t>& r) { return !(rational<std::int64_t>(i) > r); } \
  inline bool operator>=(I i, const rational<std::int64_t>& r) { return !(rational<std::int64_t>(i) < r); }

TVI_MIXED_COMPARISONS(int)
TVI_MIXED_COMPARISONS(std::int64_t)

#undef TVI_MIXED_COMPARISONS

}  // namespace boost

namespace tvi {

using Integer = std::int64_t;
using Rational = boost::rational<Integer>;

/// Formats a rational in lowest terms as "p/q", or "p" when q == 1.
std::string to_string(const Rational& r);

/// Parses "p", "p/q" or "-p/q". Throws ParseError on malformed input or q == 0.
Rational parse_rational(std::string_view text);

inline Integer floor_div(Integer a, Integer b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Integer floor(const Rational& r) { return floor_div(r.numerator(), r.denominator()); }

}  // namespace tvi
