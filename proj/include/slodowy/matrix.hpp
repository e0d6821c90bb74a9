#pragma once

#include "slodowy/rational.hpp"

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace slodowy {

/// Dense rectangular matrix over an exact field.  T is Rational almost
/// everywhere; the Poisson engine also instantiates it with dual numbers.
template <class T>
class MatT {
public:
  MatT() = default;
  MatT(std::size_t rows, std::size_t cols) : m_rows(rows), m_cols(cols), m_data(rows * cols) {}

  static MatT zero(std::size_t rows, std::size_t cols) { return MatT(rows, cols); }

  static MatT identity(std::size_t n)
  {
    MatT m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  /// Matrix unit: entry 1 in row i, column j (0-based), zero elsewhere.
  /// As an endomorphism it maps the j-th basis vector to the i-th one.
  static MatT unit(std::size_t n, std::size_t i, std::size_t j)
  {
    MatT m(n, n);
    m(i, j) = T(1);
    return m;
  }

  static MatT diagonal(const std::vector<T>& d)
  {
    MatT m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  /// Build from integer literals; convenient for pinning expected matrices in tests.
  static MatT from_rows(const std::vector<std::vector<long long>>& rows)
  {
    if (rows.empty()) return MatT();
    MatT m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.m_cols) throw std::invalid_argument("from_rows: ragged rows");
      for (std::size_t j = 0; j < m.m_cols; ++j) m(i, j) = T(rows[i][j]);
    }
    return m;
  }

  std::size_t rows() const { return m_rows; }
  std::size_t cols() const { return m_cols; }
  bool is_square() const { return m_rows == m_cols; }

  T& operator()(std::size_t i, std::size_t j) { return m_data[i * m_cols + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return m_data[i * m_cols + j]; }

  MatT& operator+=(const MatT& o)
  {
    check_same_shape(o);
    for (std::size_t k = 0; k < m_data.size(); ++k) m_data[k] += o.m_data[k];
    return *this;
  }
  MatT& operator-=(const MatT& o)
  {
    check_same_shape(o);
    for (std::size_t k = 0; k < m_data.size(); ++k) m_data[k] -= o.m_data[k];
    return *this;
  }
  MatT& operator*=(const T& s)
  {
    for (auto& x : m_data) x *= s;
    return *this;
  }

  friend MatT operator+(MatT a, const MatT& b) { return a += b; }
  friend MatT operator-(MatT a, const MatT& b) { return a -= b; }
  friend MatT operator*(MatT a, const T& s) { return a *= s; }
  friend MatT operator*(const T& s, MatT a) { return a *= s; }
  MatT operator-() const
  {
    MatT m = *this;
    for (auto& x : m.m_data) x = -x;
    return m;
  }

  friend MatT operator*(const MatT& a, const MatT& b)
  {
    if (a.m_cols != b.m_rows) throw std::invalid_argument("matrix product: shape mismatch");
    MatT c(a.m_rows, b.m_cols);
    for (std::size_t i = 0; i < a.m_rows; ++i)
      for (std::size_t k = 0; k < a.m_cols; ++k) {
        const T& aik = a(i, k);
        if (aik == T(0)) continue;
        for (std::size_t j = 0; j < b.m_cols; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend bool operator==(const MatT& a, const MatT& b)
  {
    return a.m_rows == b.m_rows && a.m_cols == b.m_cols && a.m_data == b.m_data;
  }
  friend bool operator!=(const MatT& a, const MatT& b) { return !(a == b); }

  MatT transpose() const
  {
    MatT m(m_cols, m_rows);
    for (std::size_t i = 0; i < m_rows; ++i)
      for (std::size_t j = 0; j < m_cols; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

  T trace() const
  {
    require_square("trace");
    T t{};
    for (std::size_t i = 0; i < m_rows; ++i) t += (*this)(i, i);
    return t;
  }

  bool is_zero() const
  {
    for (const auto& x : m_data)
      if (!(x == T(0))) return false;
    return true;
  }

  /// Row-major entries; the flattening used throughout the linear algebra layer.
  const std::vector<T>& data() const { return m_data; }

  void require_square(const char* who) const
  {
    if (!is_square()) throw std::invalid_argument(std::string(who) + ": square matrix required");
  }

private:
  void check_same_shape(const MatT& o) const
  {
    if (m_rows != o.m_rows || m_cols != o.m_cols)
      throw std::invalid_argument("matrix arithmetic: shape mismatch");
  }

  std::size_t m_rows = 0, m_cols = 0;
  std::vector<T> m_data;
};

using Mat = MatT<Rational>;

/// Lie bracket [X, Y] = XY − YX.
template <class T>
MatT<T> bracket(const MatT<T>& x, const MatT<T>& y)
{
  return x * y - y * x;
}

/// Invariant trace form ⟨X, Y⟩ = tr(XY), computed without forming the product.
template <class T>
T trace_pair(const MatT<T>& x, const MatT<T>& y)
{
  if (x.cols() != y.rows() || y.cols() != x.rows())
    throw std::invalid_argument("trace_pair: shape mismatch");
  T t{};
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t k = 0; k < x.cols(); ++k) t += x(i, k) * y(k, i);
  return t;
}

/// Exact matrix power with non-negative exponent.
template <class T>
MatT<T> pow_mat(const MatT<T>& x, unsigned k)
{
  x.require_square("pow_mat");
  MatT<T> r = MatT<T>::identity(x.rows());
  for (unsigned t = 0; t < k; ++t) r = r * x;
  return r;
}

/// Standard basis of 𝔤𝔩_n: all matrix units, ordered lexicographically by (row, col).
inline std::vector<Mat> gl_basis(std::size_t n)
{
  std::vector<Mat> b;
  b.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b.push_back(Mat::unit(n, i, j));
  return b;
}

/// Basis of 𝔰𝔩_n: off-diagonal units in (row, col) order, followed by the
/// traceless diagonals e_kk − e_{k+1,k+1}.
inline std::vector<Mat> sl_basis(std::size_t n)
{
  std::vector<Mat> b;
  b.reserve(n * n - 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) b.push_back(Mat::unit(n, i, j));
  for (std::size_t k = 0; k + 1 < n; ++k)
    b.push_back(Mat::unit(n, k, k) - Mat::unit(n, k + 1, k + 1));
  return b;
}

inline std::string to_string(const Mat& m)
{
  std::string s;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += (i == 0 ? "[" : " ");
    for (std::size_t j = 0; j < m.cols(); ++j) {
      s += to_string(m(i, j));
      if (j + 1 < m.cols()) s += " ";
    }
    s += (i + 1 < m.rows() ? "\n" : "]");
  }
  return s;
}

inline std::ostream& operator<<(std::ostream& os, const Mat& m) { return os << to_string(m); }

} // namespace slodowy
