#pragma once

#include "slodowy/rational.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

namespace slodowy {

/// Dual number a + b·ε with ε² = 0, over any exact field T.  Used for
/// forward-mode differentiation through the canonicalisation solve in the
/// Poisson engine.  Nesting (Dual<Dual<...>>) gives higher directional data
/// and is used to assemble Jacobians inside Newton iterations.
template <class T>
struct Dual {
  T val{};
  T eps{};

  Dual() = default;
  Dual(int v) : val(v) {}                    // NOLINT: implicit by design, T(0)/T(1) in generic code
  Dual(T v) : val(std::move(v)) {}           // NOLINT
  Dual(T v, T e) : val(std::move(v)), eps(std::move(e)) {}

  Dual operator-() const { return {-val, -eps}; }

  Dual& operator+=(const Dual& o) { val += o.val; eps += o.eps; return *this; }
  Dual& operator-=(const Dual& o) { val -= o.val; eps -= o.eps; return *this; }
  Dual& operator*=(const Dual& o)
  {
    eps = val * o.eps + eps * o.val;
    val *= o.val;
    return *this;
  }
  Dual& operator/=(const Dual& o)
  {
    // (a + bε)/(c + dε) = a/c + (bc − ad)/c² ε;  requires c ≠ 0.
    val /= o.val;
    eps = (eps - val * o.eps) / o.val;
    return *this;
  }

  friend Dual operator+(Dual a, const Dual& b) { return a += b; }
  friend Dual operator-(Dual a, const Dual& b) { return a -= b; }
  friend Dual operator*(Dual a, const Dual& b) { return a *= b; }
  friend Dual operator/(Dual a, const Dual& b) { return a /= b; }
  friend bool operator==(const Dual& a, const Dual& b) { return a.val == b.val && a.eps == b.eps; }
  friend bool operator!=(const Dual& a, const Dual& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const Dual& d)
  {
    return os << d.val << " + " << d.eps << "*eps";
  }
};

/// Pivot predicate used by the exact linear solvers: a dual number is
/// invertible iff its value part is.
template <class T>
bool field_nonzero(const Dual<T>& x)
{
  return field_nonzero(x.val);
}

template <class T>
std::size_t magnitude_bits(const Dual<T>& x)
{
  return std::max(magnitude_bits(x.val), magnitude_bits(x.eps));
}

} // namespace slodowy
