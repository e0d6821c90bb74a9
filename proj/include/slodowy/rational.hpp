#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace slodowy {

/// Exact arbitrary-precision integer.
using Int = boost::multiprecision::cpp_int;

/// Exact rational number, kept in lowest terms with positive denominator.
/// Every computation in the library is carried out over this field; no
/// floating point enters any mathematical routine.
using Rational = boost::multiprecision::cpp_rational;

/// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
inline std::string to_string(const Rational& r)
{
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

/// Parse "p" or "p/q"; throws std::invalid_argument on malformed input or q == 0.
inline Rational rational_from_string(const std::string& s)
{
  if (s.empty()) throw std::invalid_argument("rational_from_string: empty string");
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(s));
    const Int p(s.substr(0, slash));
    const Int q(s.substr(slash + 1));
    if (q == 0) throw std::invalid_argument("rational_from_string: zero denominator");
    return Rational(p, q);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("rational_from_string: cannot parse '" + s + "'");
  }
}

/// Pivot predicate for the exact linear solvers: over a plain field an
/// element is invertible iff it is nonzero.  Dual numbers overload this to
/// test the value part only, so elimination over duals follows the same
/// pivot path as over the underlying points.
template <class T>
bool field_nonzero(const T& x)
{
  return x != T(0);
}

/// Bit length of the larger of |numerator| and denominator; a cheap proxy
/// for how much exact arithmetic has inflated a value.  Divergence guards in
/// iterative solvers compare this against a generous threshold.
inline std::size_t magnitude_bits(const Rational& r)
{
  const Int num = boost::multiprecision::numerator(r);
  const Int den = boost::multiprecision::denominator(r);
  std::size_t bits = static_cast<std::size_t>(boost::multiprecision::msb(den)) + 1;
  if (num != 0) {
    const Int a = num < 0 ? Int(-num) : num;
    bits = std::max(bits, static_cast<std::size_t>(boost::multiprecision::msb(a)) + 1);
  }
  return bits;
}

} // namespace slodowy
