#pragma once

#include "slodowy/linalg.hpp"
#include "slodowy/matrix.hpp"
#include "slodowy/partitions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace slodowy {

/// Pyramid over a partition shape: row ℓ (0-based; row 0 is the longest,
/// bottom row) consists of shape[ℓ] boxes of width 2 centred at the integer
/// columns f_ℓ, f_ℓ+2, …, F_ℓ = f_ℓ + 2(shape[ℓ]−1).  Validity: row 0 is
/// centred at the origin and every row sits within the span of the row below.
struct Pyramid {
  Partition shape;
  std::vector<int> offsets; // f_ℓ per row

  int f(std::size_t row) const { return offsets[row]; }
  int F(std::size_t row) const { return offsets[row] + 2 * (shape[row] - 1); }
};

inline void validate(const Pyramid& p)
{
  if (p.shape.empty()) throw std::invalid_argument("pyramid: empty shape");
  if (p.offsets.size() != p.shape.size())
    throw std::invalid_argument("pyramid: offsets/shape length mismatch");
  if (p.f(0) != -(p.shape[0] - 1)) throw std::invalid_argument("pyramid: bottom row not centred");
  for (std::size_t r = 1; r < p.shape.size(); ++r)
    if (p.f(r) < p.f(r - 1) || p.F(r) > p.F(r - 1))
      throw std::invalid_argument("pyramid: row overhangs the one below");
}

/// The right-aligned pyramid: every row ends at column shape[0] − 1.
inline Pyramid right_aligned(const Partition& shape)
{
  if (shape.empty()) throw std::invalid_argument("right_aligned: empty shape");
  std::vector<int> offs(shape.size());
  const int big = shape[0];
  for (std::size_t r = 0; r < shape.size(); ++r) offs[r] = big + 1 - 2 * shape[r]; // F_r = big − 1
  Pyramid p{shape, std::move(offs)};
  validate(p);
  return p;
}

/// All pyramids of the given shape, offsets in descending lexicographic
/// order; the first element is always the right-aligned pyramid.
inline std::vector<Pyramid> enumerate_pyramids(const Partition& shape)
{
  if (shape.empty()) throw std::invalid_argument("enumerate_pyramids: empty shape");
  std::vector<Pyramid> out;
  std::vector<int> offs(shape.size());
  offs[0] = -(shape[0] - 1);
  auto rec = [&](auto&& self, std::size_t row) -> void {
    if (row == shape.size()) {
      out.push_back(Pyramid{shape, offs});
      return;
    }
    const int prev_f = offs[row - 1];
    const int prev_F = offs[row - 1] + 2 * (shape[row - 1] - 1);
    const int hi = prev_F - 2 * (shape[row] - 1); // keep F_row ≤ F_{row−1}
    for (int f = hi; f >= prev_f; --f) {          // descending: right-aligned first
      offs[row] = f;
      self(self, row + 1);
    }
  };
  rec(rec, 1);
  for (const auto& p : out) validate(p);
  return out;
}

/// Box of a pyramid: 0-based row index and centre column.
struct Box {
  std::size_t row = 0;
  int col = 0;
};

/// Canonical filling: labels 0..n−1 assigned column by column (left to
/// right), within a column bottom-up.  Rendering and JSON use 1-based labels.
struct Filling {
  Pyramid pyramid;
  std::size_t n = 0;
  std::vector<Box> box_of;                          // label → box
  std::map<std::pair<int, std::size_t>, std::size_t> label_at; // (col, row) → label

  std::size_t row(std::size_t label) const { return box_of[label].row; }
  int col(std::size_t label) const { return box_of[label].col; }

  bool has_box(std::size_t row, int col) const
  {
    return label_at.count({col, row}) != 0;
  }
  std::size_t label(std::size_t row, int col) const
  {
    const auto it = label_at.find({col, row});
    if (it == label_at.end()) throw std::invalid_argument("filling: no box at (row, col)");
    return it->second;
  }

  /// Labels of one row, ordered left to right.
  std::vector<std::size_t> row_labels(std::size_t row) const
  {
    std::vector<std::size_t> out;
    for (int c = pyramid.f(row); c <= pyramid.F(row); c += 2) out.push_back(label(row, c));
    return out;
  }
};

inline Filling canonical_filling(const Pyramid& p)
{
  validate(p);
  Filling fl;
  fl.pyramid = p;
  // the map orders keys by (col, row), which is exactly the filling order
  for (std::size_t r = 0; r < p.shape.size(); ++r)
    for (int c = p.f(r); c <= p.F(r); c += 2) fl.label_at[{c, r}] = 0;
  std::size_t next = 0;
  for (auto& [key, lab] : fl.label_at) {
    lab = next++;
    fl.box_of.push_back(Box{key.second, key.first});
  }
  fl.n = next;
  return fl;
}

/// Grading datum Γ: the column of each label.  deg unit(a,b) = col(b) − col(a),
/// realised by ad h_Γ with h_Γ = diag(−col) − (Σ(−col)/n)·Id.
struct Grading {
  std::vector<int> col_of;

  std::size_t n() const { return col_of.size(); }
  int deg(std::size_t a, std::size_t b) const { return col_of[b] - col_of[a]; }

  Mat h_gamma() const
  {
    const std::size_t nn = n();
    Rational tr(0);
    for (int c : col_of) tr += Rational(-c);
    Mat h(nn, nn);
    for (std::size_t i = 0; i < nn; ++i) h(i, i) = Rational(-col_of[i]) - tr / Rational(int(nn));
    return h;
  }

  std::vector<std::vector<int>> degree_matrix() const
  {
    const std::size_t nn = n();
    std::vector<std::vector<int>> d(nn, std::vector<int>(nn));
    for (std::size_t i = 0; i < nn; ++i)
      for (std::size_t j = 0; j < nn; ++j) d[i][j] = deg(i, j);
    return d;
  }
};

/// The pyramid nilpotent e_P = Σ unit(k, ℓ) over right-adjacent box pairs
/// k → ℓ (same row, col(ℓ) = col(k) + 2), together with the grading Γ_P.
inline std::pair<Mat, Grading> nilpotent_and_grading(const Filling& fl)
{
  Mat e(fl.n, fl.n);
  for (std::size_t lab = 0; lab < fl.n; ++lab) {
    const auto b = fl.box_of[lab];
    if (fl.has_box(b.row, b.col + 2)) e(lab, fl.label(b.row, b.col + 2)) = 1;
  }
  Grading g;
  g.col_of.resize(fl.n);
  for (std::size_t lab = 0; lab < fl.n; ++lab) g.col_of[lab] = fl.box_of[lab].col;
  return {std::move(e), std::move(g)};
}

/// Even pyramid: all box columns share one parity, so all degrees are even.
inline bool is_even(const Pyramid& p)
{
  validate(p);
  const int parity = ((p.f(0) % 2) + 2) % 2;
  for (std::size_t r = 0; r < p.shape.size(); ++r)
    if (((p.f(r) % 2) + 2) % 2 != parity) return false;
  return true;
}

/// Symmetric pyramid: invariant under column negation (every row centred at 0).
inline bool is_symmetric(const Pyramid& p)
{
  validate(p);
  for (std::size_t r = 0; r < p.shape.size(); ++r)
    if (p.f(r) != -p.F(r)) return false;
  return true;
}

/// Spanning family of the centraliser of e_P in 𝔤𝔩_n, one matrix per
/// box-shift map:
///   (a) within a row: boxes shift right by 2r, r = 0..len−1 (r = 0 is the
///       row projection; Σ_rows of the r = 1 maps is e_P itself);
///   (b) between rows i < j, left-anchored: box at column c of row i goes to
///       column c + (f_j − f_i) + 2r of row j;
///   (c) between rows i < j, right-anchored: box at column c of row j goes
///       to column c + (F_i − F_j) + 2r of row i.
/// Boxes sent outside the target row are dropped.  Cardinality Σ (λ*_k)².
inline std::vector<Mat> centralizer_basis(const Filling& fl)
{
  const auto& p = fl.pyramid;
  const std::size_t rows = p.shape.size();
  std::vector<Mat> out;

  auto shift_map = [&](std::size_t src, std::size_t dst, int shift) {
    Mat m(fl.n, fl.n);
    for (int c = p.f(src); c <= p.F(src); c += 2)
      if (fl.has_box(dst, c + shift)) m(fl.label(src, c), fl.label(dst, c + shift)) = 1;
    return m;
  };

  for (std::size_t r = 0; r < rows; ++r)
    for (int s = 0; s < p.shape[r]; ++s) out.push_back(shift_map(r, r, 2 * s));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = i + 1; j < rows; ++j) {
      for (int s = 0; s < p.shape[j]; ++s) out.push_back(shift_map(i, j, (p.f(j) - p.f(i)) + 2 * s));
      for (int s = 0; s < p.shape[j]; ++s) out.push_back(shift_map(j, i, (p.F(i) - p.F(j)) + 2 * s));
    }
  return out;
}

/// Degrees of the simple positive roots of the grading: the positive system
/// consists of the pairs (a,b), a ≠ b, with deg(a,b) > 0, together with the
/// degree-0 pairs with a < b; a root is simple when it is not the sum of two
/// positive roots.  Returns the sorted degree multiset (size n − 1).
inline std::vector<int> characteristic(const Grading& g)
{
  const std::size_t n = g.n();
  std::set<std::pair<std::size_t, std::size_t>> pos;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      const int d = g.deg(a, b);
      if (d > 0 || (d == 0 && a < b)) pos.insert({a, b});
    }
  std::vector<int> degs;
  for (const auto& [a, b] : pos) {
    bool composite = false;
    for (std::size_t c = 0; c < n && !composite; ++c)
      if (c != a && c != b && pos.count({a, c}) && pos.count({c, b})) composite = true;
    if (!composite) degs.push_back(g.deg(a, b));
  }
  std::sort(degs.begin(), degs.end());
  return degs;
}

/// Basis of 𝔰𝔩_n organised by Γ-degree: off-diagonal units by their degree,
/// the n−1 traceless diagonals in degree 0.
inline std::map<int, MatSpan> graded_sl_basis(const Grading& g)
{
  const std::size_t n = g.n();
  std::map<int, std::vector<Mat>> by_deg;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b) by_deg[g.deg(a, b)].push_back(Mat::unit(n, a, b));
  for (std::size_t k = 0; k + 1 < n; ++k)
    by_deg[0].push_back(Mat::unit(n, k, k) - Mat::unit(n, k + 1, k + 1));
  std::map<int, MatSpan> out;
  for (auto& [d, mats] : by_deg) out.emplace(d, make_span(n, std::move(mats)));
  return out;
}

/// ASCII rendering: 2×2 boxes with centred 1-based labels, plus a column axis.
inline std::string render_ascii(const Filling& fl)
{
  const auto& p = fl.pyramid;
  const std::size_t rows = p.shape.size();
  const int xmin = p.f(0) - 1, xmax = p.F(0) + 1;
  const std::size_t width = static_cast<std::size_t>(2 * (xmax - xmin)) + 1;
  const std::size_t height = 2 * rows + 1;
  std::vector<std::string> canvas(height, std::string(width, ' '));

  const auto xchar = [&](int x) { return static_cast<std::size_t>(2 * (x - xmin)); };
  for (std::size_t lab = 0; lab < fl.n; ++lab) {
    const auto b = fl.box_of[lab];
    const std::size_t top = 2 * (rows - 1 - b.row);
    const std::size_t left = xchar(b.col - 1), right = xchar(b.col + 1);
    for (std::size_t x = left; x <= right; ++x) {
      canvas[top][x] = canvas[top + 2][x] = '-';
    }
    for (std::size_t y = top; y <= top + 2; ++y) {
      canvas[y][left] = canvas[y][right] = (y == top || y == top + 2) ? '+' : '|';
    }
    const std::string text = std::to_string(lab + 1);
    const std::size_t at = xchar(b.col) - text.size() / 2;
    for (std::size_t k = 0; k < text.size(); ++k) canvas[top + 1][at + k] = text[k];
  }

  // column axis: tick and value under every column that carries a box
  std::string ticks(width, ' '), numbers(width, ' ');
  std::set<int> cols;
  for (const auto& b : fl.box_of) cols.insert(b.col);
  for (int c : cols) {
    ticks[xchar(c)] = '|';
    const std::string text = std::to_string(c);
    std::size_t at = xchar(c) >= text.size() / 2 ? xchar(c) - text.size() / 2 : 0;
    if (at + text.size() > width) at = width - text.size();
    bool free = true;
    for (std::size_t k = 0; k < text.size(); ++k)
      if (numbers[at + k] != ' ') free = false;
    if (free)
      for (std::size_t k = 0; k < text.size(); ++k) numbers[at + k] = text[k];
  }

  std::string out;
  for (const auto& line : canvas) out += line + "\n";
  out += ticks + "\n" + numbers + "\n";
  return out;
}

} // namespace slodowy
