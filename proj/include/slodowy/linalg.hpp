#pragma once

#include "slodowy/matrix.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace slodowy {

/// Reduced row echelon form together with the pivot columns.
template <class T>
struct Echelon {
  MatT<T> mat;
  std::vector<std::size_t> pivot_cols;
};

/// Exact Gauss–Jordan elimination.  Pivot selection uses field_nonzero, so the
/// same code runs over rationals and over dual numbers (pivoting on value parts).
template <class T>
Echelon<T> rref(MatT<T> a)
{
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && !field_nonzero(a(p, c))) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(r, j), a(p, j));
    const T inv_lead = T(1) / a(r, c);
    for (std::size_t j = c; j < cols; ++j) a(r, j) *= inv_lead;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const T f = a(i, c);
      if (f == T(0)) continue;
      for (std::size_t j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

inline std::size_t rank(const Mat& a) { return rref(a).pivot_cols.size(); }

/// Basis of the null space {v : a·v = 0}; vectors have length a.cols().
inline std::vector<std::vector<Rational>> kernel_basis(const Mat& a)
{
  const auto ech = rref(a);
  const std::size_t cols = a.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : ech.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t freec = 0; freec < cols; ++freec) {
    if (is_pivot[freec]) continue;
    std::vector<Rational> v(cols);
    v[freec] = 1;
    for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r)
      v[ech.pivot_cols[r]] = -ech.mat(r, freec);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// One exact solution of a·x = b, or nullopt if the system is inconsistent.
template <class T>
std::optional<std::vector<T>> solve_linear(const MatT<T>& a, const std::vector<T>& b)
{
  if (b.size() != a.rows()) throw std::invalid_argument("solve_linear: rhs length mismatch");
  MatT<T> aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const auto ech = rref(std::move(aug));
  std::vector<T> x(a.cols(), T(0));
  for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r) {
    if (ech.pivot_cols[r] == a.cols()) return std::nullopt; // pivot in the rhs column
    x[ech.pivot_cols[r]] = ech.mat(r, a.cols());
  }
  return x;
}

/// Exact inverse, or nullopt when singular (over duals: value part singular).
template <class T>
std::optional<MatT<T>> inverse(const MatT<T>& a)
{
  a.require_square("inverse");
  const std::size_t n = a.rows();
  MatT<T> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = T(1);
  }
  const auto ech = rref(std::move(aug));
  if (ech.pivot_cols.size() < n || ech.pivot_cols[n - 1] != n - 1) return std::nullopt;
  MatT<T> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = ech.mat(i, n + j);
  return inv;
}

inline std::vector<Rational> flatten(const Mat& m) { return m.data(); }

inline Mat unflatten(std::size_t n, const std::vector<Rational>& v)
{
  if (v.size() != n * n) throw std::invalid_argument("unflatten: length mismatch");
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = v[i * n + j];
  return m;
}

/// Subspace of n×n matrices presented by a linearly independent basis.
struct MatSpan {
  std::size_t n = 0;
  std::vector<Mat> basis;
  std::size_t dim() const { return basis.size(); }
};

/// Stack the flattened basis vectors of the given matrices as rows.
inline Mat stack_rows(std::size_t n, const std::vector<Mat>& mats)
{
  Mat s(mats.size(), n * n);
  for (std::size_t r = 0; r < mats.size(); ++r) {
    if (mats[r].rows() != n || mats[r].cols() != n)
      throw std::invalid_argument("stack_rows: shape mismatch");
    const auto& v = mats[r].data();
    for (std::size_t c = 0; c < n * n; ++c) s(r, c) = v[c];
  }
  return s;
}

/// Build a span from generators.  With reduce = false the generators must be
/// independent (throws otherwise); with reduce = true a maximal independent
/// subset is selected greedily in the given order.
inline MatSpan make_span(std::size_t n, std::vector<Mat> gens, bool reduce = false)
{
  for (const auto& g : gens)
    if (g.rows() != n || g.cols() != n) throw std::invalid_argument("make_span: shape mismatch");
  if (!reduce) {
    if (rank(stack_rows(n, gens)) != gens.size())
      throw std::invalid_argument("make_span: generators not linearly independent");
    return {n, std::move(gens)};
  }
  MatSpan span{n, {}};
  std::size_t current = 0;
  for (auto& g : gens) {
    auto trial = span.basis;
    trial.push_back(g);
    if (rank(stack_rows(n, trial)) > current) {
      span.basis.push_back(std::move(g));
      ++current;
    }
  }
  return span;
}

inline bool span_contains(const MatSpan& s, const Mat& x)
{
  if (x.is_zero()) return true;
  auto mats = s.basis;
  mats.push_back(x);
  return rank(stack_rows(s.n, mats)) == s.dim();
}

/// Dimension of the sum of two subspaces.
inline std::size_t dim_sum(const MatSpan& a, const MatSpan& b)
{
  auto mats = a.basis;
  mats.insert(mats.end(), b.basis.begin(), b.basis.end());
  return rank(stack_rows(a.n, mats));
}

/// Dimension of the intersection, via dim A + dim B − dim(A + B).
inline std::size_t dim_intersection(const MatSpan& a, const MatSpan& b)
{
  return a.dim() + b.dim() - dim_sum(a, b);
}

/// Coordinates of x in the basis of s, or nullopt if x lies outside the span.
inline std::optional<std::vector<Rational>> coordinates_in(const MatSpan& s, const Mat& x)
{
  const std::size_t nn = s.n * s.n;
  Mat cols(nn, s.dim());
  for (std::size_t c = 0; c < s.dim(); ++c) {
    const auto& v = s.basis[c].data();
    for (std::size_t r = 0; r < nn; ++r) cols(r, c) = v[r];
  }
  return solve_linear(cols, flatten(x));
}

/// Matrix of a linear map on `domain`, written in the coordinates of
/// `codomain`; throws if some image leaves the codomain span.
inline Mat operator_matrix(const std::function<Mat(const Mat&)>& op, const MatSpan& domain,
                           const MatSpan& codomain)
{
  Mat m(codomain.dim(), domain.dim());
  for (std::size_t c = 0; c < domain.dim(); ++c) {
    const auto coords = coordinates_in(codomain, op(domain.basis[c]));
    if (!coords) throw std::invalid_argument("operator_matrix: image leaves the codomain");
    for (std::size_t r = 0; r < codomain.dim(); ++r) m(r, c) = (*coords)[r];
  }
  return m;
}

/// Kernel of a linear map restricted to `domain`, as a span of matrices.
inline MatSpan kernel_of_operator(const std::function<Mat(const Mat&)>& op, const MatSpan& domain)
{
  const std::size_t nn = domain.n * domain.n;
  Mat cols(nn, domain.dim());
  for (std::size_t c = 0; c < domain.dim(); ++c) {
    const auto v = flatten(op(domain.basis[c]));
    for (std::size_t r = 0; r < nn; ++r) cols(r, c) = v[r];
  }
  MatSpan ker{domain.n, {}};
  for (const auto& coeffs : kernel_basis(cols)) {
    Mat x(domain.n, domain.n);
    for (std::size_t c = 0; c < domain.dim(); ++c)
      if (coeffs[c] != 0) x += domain.basis[c] * coeffs[c];
    ker.basis.push_back(std::move(x));
  }
  return ker;
}

/// Image of a linear map on `domain` (independent spanning subset of the images).
inline MatSpan image_of_operator(const std::function<Mat(const Mat&)>& op, const MatSpan& domain)
{
  std::vector<Mat> images;
  images.reserve(domain.dim());
  for (const auto& b : domain.basis) {
    Mat im = op(b);
    if (!im.is_zero()) images.push_back(std::move(im));
  }
  return make_span(domain.n, std::move(images), /*reduce=*/true);
}

} // namespace slodowy
