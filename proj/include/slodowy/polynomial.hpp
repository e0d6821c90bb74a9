#pragma once

#include "slodowy/rational.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace slodowy {

/// A fixed, ordered list of variable names.  Polynomials hold a shared
/// pointer to their ring; ring identity is pointer identity.
struct PolyRing {
  std::vector<std::string> names;
  std::map<std::string, std::size_t> index;

  std::size_t size() const { return names.size(); }
};

using RingPtr = std::shared_ptr<const PolyRing>;

inline RingPtr make_ring(std::vector<std::string> names)
{
  auto r = std::make_shared<PolyRing>();
  r->names = std::move(names);
  for (std::size_t k = 0; k < r->names.size(); ++k) {
    if (!r->index.emplace(r->names[k], k).second)
      throw std::invalid_argument("make_ring: duplicate variable " + r->names[k]);
  }
  return r;
}

/// Sparse multivariate polynomial with exact rational coefficients.  A null
/// ring means a plain constant, which combines with polynomials of any ring.
class Polynomial {
public:
  RingPtr ring;                                 // null for ring-free constants
  std::map<std::vector<int>, Rational> terms;   // exponent vector → coefficient

  Polynomial() = default;
  Polynomial(const Rational& c) { if (c != 0) terms.emplace(std::vector<int>{}, c); }
  Polynomial(int c) : Polynomial(Rational(c)) {}

  static Polynomial constant(const Rational& c) { return Polynomial(c); }
  static Polynomial variable(const RingPtr& r, std::size_t j)
  {
    if (j >= r->size()) throw std::invalid_argument("variable: index out of range");
    Polynomial p;
    p.ring = r;
    std::vector<int> exp(r->size(), 0);
    exp[j] = 1;
    p.terms.emplace(std::move(exp), Rational(1));
    return p;
  }
  static Polynomial variable(const RingPtr& r, const std::string& name)
  {
    const auto it = r->index.find(name);
    if (it == r->index.end()) throw std::invalid_argument("variable: unknown name " + name);
    return variable(r, it->second);
  }

  bool is_zero() const { return terms.empty(); }
  bool is_constant() const
  {
    if (terms.empty()) return true;
    return terms.size() == 1 && terms.begin()->first == zero_exponent();
  }
  Rational constant_value() const
  {
    if (terms.empty()) return Rational(0);
    if (!is_constant()) throw std::invalid_argument("constant_value: not a constant");
    return terms.begin()->second;
  }

  /// Rewrite over ring r (r must contain whatever variables appear).
  Polynomial in_ring(const RingPtr& r) const
  {
    if (ring == r) return *this;
    if (ring && r && ring != r)
      throw std::invalid_argument("polynomial: mixed rings");
    Polynomial out;
    out.ring = r ? r : ring;
    const std::size_t width = out.ring ? out.ring->size() : 0;
    for (const auto& [exp, c] : terms) {
      std::vector<int> e = exp;
      e.resize(width, 0);
      out.terms.emplace(std::move(e), c);
    }
    return out;
  }

  Polynomial& operator+=(const Polynomial& o)
  {
    *this = aligned_combine(*this, o, 1);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o)
  {
    *this = aligned_combine(*this, o, -1);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a) { return Polynomial(0) - a; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
  {
    const RingPtr r = common_ring(a, b);
    const Polynomial x = a.in_ring(r), y = b.in_ring(r);
    Polynomial out;
    out.ring = r;
    for (const auto& [ea, ca] : x.terms)
      for (const auto& [eb, cb] : y.terms) {
        std::vector<int> e = ea;
        for (std::size_t k = 0; k < eb.size(); ++k) e[k] += eb[k];
        auto [it, fresh] = out.terms.emplace(std::move(e), ca * cb);
        if (!fresh) {
          it->second += ca * cb;
          if (it->second == 0) out.terms.erase(it);
        }
      }
    return out;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b)
  {
    return (a - b).is_zero();
  }

  Polynomial pow(int k) const
  {
    if (k < 0) throw std::invalid_argument("pow: negative exponent");
    Polynomial out(1);
    for (int t = 0; t < k; ++t) out *= *this;
    return out;
  }

  Polynomial derivative(std::size_t j) const
  {
    if (!ring || j >= ring->size()) throw std::invalid_argument("derivative: bad variable");
    Polynomial out;
    out.ring = ring;
    for (const auto& [exp, c] : terms) {
      if (exp[j] == 0) continue;
      std::vector<int> e = exp;
      const int k = e[j]--;
      out.terms.emplace(std::move(e), c * Rational(k));
    }
    return out;
  }
  Polynomial derivative(const std::string& name) const
  {
    if (!ring) throw std::invalid_argument("derivative: constant polynomial");
    const auto it = ring->index.find(name);
    if (it == ring->index.end()) throw std::invalid_argument("derivative: unknown " + name);
    return derivative(it->second);
  }

  /// Evaluate at a point with coordinates of any arithmetic type T that
  /// supports construction from Rational (e.g. Rational itself or duals).
  template <class T>
  T eval(const std::vector<T>& point) const
  {
    if (ring && point.size() != ring->size())
      throw std::invalid_argument("eval: point has wrong dimension");
    T acc(0);
    for (const auto& [exp, c] : terms) {
      T mono{T(c)};
      for (std::size_t j = 0; j < exp.size(); ++j)
        for (int t = 0; t < exp[j]; ++t) mono *= point[j];
      acc += mono;
    }
    return acc;
  }

  /// Substitute images[j] for variable j, producing a polynomial of the
  /// images' ring.
  Polynomial substitute(const std::vector<Polynomial>& images) const
  {
    if (ring && images.size() != ring->size())
      throw std::invalid_argument("substitute: wrong number of images");
    Polynomial acc(0);
    for (const auto& [exp, c] : terms) {
      Polynomial mono{c};
      for (std::size_t j = 0; j < exp.size(); ++j)
        for (int t = 0; t < exp[j]; ++t) mono *= images[j];
      acc += mono;
    }
    return acc;
  }

  int total_degree() const
  {
    int d = 0;
    for (const auto& [exp, c] : terms) {
      int s = 0;
      for (int e : exp) s += e;
      if (s > d) d = s;
    }
    return d;
  }

  std::string str() const
  {
    if (terms.empty()) return "0";
    std::string out;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
      std::string mono;
      for (std::size_t j = 0; j < it->first.size(); ++j) {
        const int e = it->first[j];
        if (e == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += ring->names[j];
        if (e > 1) mono += "^" + std::to_string(e);
      }
      const Rational& c = it->second;
      std::string piece;
      if (mono.empty()) piece = to_string(c);
      else if (c == 1) piece = mono;
      else if (c == -1) piece = "-" + mono;
      else piece = to_string(c) + "*" + mono;
      if (out.empty()) out = piece;
      else if (piece[0] == '-') out += " - " + piece.substr(1);
      else out += " + " + piece;
    }
    return out;
  }

private:
  std::vector<int> zero_exponent() const
  {
    return std::vector<int>(ring ? ring->size() : 0, 0);
  }
  static RingPtr common_ring(const Polynomial& a, const Polynomial& b)
  {
    if (a.ring && b.ring && a.ring != b.ring)
      throw std::invalid_argument("polynomial: mixed rings");
    return a.ring ? a.ring : b.ring;
  }
  static Polynomial aligned_combine(const Polynomial& a, const Polynomial& b, int sign)
  {
    const RingPtr r = common_ring(a, b);
    Polynomial out = a.in_ring(r);
    for (const auto& [exp, c] : b.in_ring(r).terms) {
      auto [it, fresh] = out.terms.emplace(exp, c * Rational(sign));
      if (!fresh) {
        it->second += c * Rational(sign);
        if (it->second == 0) out.terms.erase(it);
      }
    }
    return out;
  }
};

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

namespace detail {

/// Recursive-descent parser over a fixed ring.
///   expr   := ['-'] term (('+' | '-') term)*
///   term   := factor (('*' | '/') factor)*      (division by constants only)
///   factor := atom ['^' natural]
///   atom   := natural | identifier | '(' expr ')'
class PolyParser {
public:
  PolyParser(RingPtr ring, const std::string& text) : m_ring(std::move(ring)), m_text(text) {}

  Polynomial run()
  {
    Polynomial p = expr();
    skip_ws();
    if (m_pos != m_text.size())
      throw std::invalid_argument("parse error at '" + m_text.substr(m_pos) + "'");
    return p;
  }

private:
  RingPtr m_ring;
  const std::string& m_text;
  std::size_t m_pos = 0;

  void skip_ws()
  {
    while (m_pos < m_text.size() && std::isspace(static_cast<unsigned char>(m_text[m_pos])))
      ++m_pos;
  }
  bool eat(char c)
  {
    skip_ws();
    if (m_pos < m_text.size() && m_text[m_pos] == c) {
      ++m_pos;
      return true;
    }
    return false;
  }
  char peek()
  {
    skip_ws();
    return m_pos < m_text.size() ? m_text[m_pos] : '\0';
  }

  Polynomial expr()
  {
    const bool neg = eat('-');
    Polynomial acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (eat('+')) acc += term();
      else if (eat('-')) acc -= term();
      else return acc;
    }
  }

  Polynomial term()
  {
    Polynomial acc = factor();
    for (;;) {
      if (eat('*')) {
        acc *= factor();
      } else if (eat('/')) {
        const Polynomial d = factor();
        if (!d.is_constant() || d.is_zero())
          throw std::invalid_argument("parse error: division by a non-constant");
        acc *= Polynomial(Rational(1) / d.constant_value());
      } else {
        return acc;
      }
    }
  }

  Polynomial factor()
  {
    Polynomial base = atom();
    if (eat('^')) return base.pow(natural());
    return base;
  }

  Polynomial atom()
  {
    const char c = peek();
    if (c == '(') {
      eat('(');
      Polynomial p = expr();
      if (!eat(')')) throw std::invalid_argument("parse error: expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial(Rational(natural()));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (m_pos < m_text.size()) {
        const char d = m_text[m_pos];
        if (std::isalnum(static_cast<unsigned char>(d)) || d == '_') {
          name += d;
          ++m_pos;
        } else {
          break;
        }
      }
      return Polynomial::variable(m_ring, name);
    }
    throw std::invalid_argument(std::string("parse error: unexpected '") + c + "'");
  }

  int natural()
  {
    skip_ws();
    if (m_pos >= m_text.size() || !std::isdigit(static_cast<unsigned char>(m_text[m_pos])))
      throw std::invalid_argument("parse error: expected a number");
    long long v = 0;
    while (m_pos < m_text.size() && std::isdigit(static_cast<unsigned char>(m_text[m_pos]))) {
      v = 10 * v + (m_text[m_pos] - '0');
      if (v > 1'000'000'000) throw std::invalid_argument("parse error: number too large");
      ++m_pos;
    }
    return static_cast<int>(v);
  }
};

} // namespace detail

inline Polynomial parse_polynomial(const RingPtr& ring, const std::string& text)
{
  return detail::PolyParser(ring, text).run();
}

} // namespace slodowy
