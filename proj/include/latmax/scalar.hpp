#pragma once

// Exact scalar types. Lattice coordinates are machine integers with a bounded
// magnitude; everything non-integral goes through GMP rationals.

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <limits>
#include <type_traits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace latmax {

using Integer = std::int64_t;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;

/// Largest coordinate magnitude accepted by integral hull construction. Keeps
/// every 3x3 determinant of coordinate differences inside 64 bits.
inline constexpr Integer kMaxCoordinate = Integer{1} << 16;

template <class T>
inline constexpr bool is_rational_v = std::is_same_v<T, Rat>;

template <class T>
concept Scalar = std::is_same_v<T, Integer> || std::is_same_v<T, Rat>;

inline Integer floor_div(Integer a, Integer b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Integer ceil_div(Integer a, Integer b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

inline Integer positive_mod(Integer a, Integer m) {
  Integer r = a % m;
  return r < 0 ? r + m : r;
}

inline Integer gcd(Integer a, Integer b) { return std::gcd(a, b); }

inline Integer to_machine(const BigInt& v) {
  if (v > BigInt(std::numeric_limits<Integer>::max()) ||
      v < BigInt(std::numeric_limits<Integer>::min()))
    throw std::overflow_error("integer value exceeds 64-bit range");
  return v.convert_to<Integer>();
}

inline Integer floor_of(Integer v) { return v; }
inline Integer ceil_of(Integer v) { return v; }

inline Integer floor_of(const Rat& v) {
  BigInt n = boost::multiprecision::numerator(v);
  BigInt d = boost::multiprecision::denominator(v);
  BigInt q = n / d;
  if (n % d != 0 && n < 0) q -= 1;
  return to_machine(q);
}

inline Integer ceil_of(const Rat& v) { return -floor_of(Rat(-v)); }

inline bool is_integral(Integer) { return true; }
inline bool is_integral(const Rat& v) { return boost::multiprecision::denominator(v) == 1; }

inline Rat to_rat(Integer v) { return Rat(v); }
inline const Rat& to_rat(const Rat& v) { return v; }

inline Integer to_integer(Integer v) { return v; }
inline Integer to_integer(const Rat& v) {
  if (!is_integral(v)) throw std::domain_error("rational value is not an integer");
  return to_machine(boost::multiprecision::numerator(v));
}

/// Floor of v / k for a positive integer k, exact for both scalar kinds.
inline Integer floor_over(Integer v, Integer k) { return floor_div(v, k); }
inline Integer floor_over(const Rat& v, Integer k) { return floor_of(Rat(v / k)); }

inline int sign(Integer v) { return (v > 0) - (v < 0); }
inline int sign(const Rat& v) { return v.sign(); }

inline std::string to_string(Integer v) { return std::to_string(v); }

/// "p" for integers, "p/q" in lowest terms otherwise.
inline std::string to_string(const Rat& v) {
  if (is_integral(v)) return boost::multiprecision::numerator(v).str();
  return boost::multiprecision::numerator(v).str() + "/" +
         boost::multiprecision::denominator(v).str();
}

/// Parses "p" or "p/q" (optional leading '-'); rejects anything else,
/// including non-reduced fractions and zero denominators.
inline Rat parse_rat(std::string_view text) {
  auto is_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view unsigned_num = (!num.empty() && num.front() == '-') ? num.substr(1) : num;
  if (!is_digits(unsigned_num)) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  BigInt n{std::string(num)};
  if (slash == std::string_view::npos) return Rat(n);
  std::string_view den = text.substr(slash + 1);
  if (!is_digits(den)) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  BigInt d{std::string(den)};
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rat r(n, d);
  if (boost::multiprecision::denominator(r) != d)
    throw std::invalid_argument("rational '" + std::string(text) + "' is not in lowest terms");
  return r;
}

}  // namespace latmax
