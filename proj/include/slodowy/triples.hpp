#pragma once

#include "slodowy/jordan.hpp"
#include "slodowy/linalg.hpp"
#include "slodowy/matrix.hpp"
#include "slodowy/pyramids.hpp"

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace slodowy {

struct Sl2Triple {
  Mat e, h, f;
};

/// The block-diagonal sl₂-triple of a Jordan type: per block of size k the
/// standard triple with e on the superdiagonal, h = diag(k−1, k−3, …, 1−k)
/// and f(t, t−1) = t(k−t).  Blocks in decreasing size order.
inline Sl2Triple jordan_triple(const Partition& shape)
{
  const std::size_t n = static_cast<std::size_t>(shape.n());
  Mat e(n, n), h(n, n), f(n, n);
  std::size_t off = 0;
  for (std::size_t b = 0; b < shape.size(); ++b) {
    const int k = shape[b];
    for (int t = 0; t < k; ++t) h(off + t, off + t) = k - 1 - 2 * t;
    for (int t = 1; t < k; ++t) {
      e(off + t - 1, off + t) = 1;
      f(off + t, off + t - 1) = Rational(t) * Rational(k - t);
    }
    off += static_cast<std::size_t>(k);
  }
  return {std::move(e), std::move(h), std::move(f)};
}

inline void require_sl2_relations(const Sl2Triple& t, const char* who)
{
  if (!(bracket(t.h, t.e) == t.e * Rational(2)) || !(bracket(t.h, t.f) == t.f * Rational(-2)) ||
      !(bracket(t.e, t.f) == t.h))
    throw std::logic_error(std::string(who) + ": sl2 relations fail");
}

/// The component of m with entry-wise Γ-degree d (diagonal entries count as
/// degree 0).
inline Mat degree_component(const Grading& g, const Mat& m, int d)
{
  const std::size_t n = g.n();
  Mat out(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if ((a == b ? 0 : g.deg(a, b)) == d) out(a, b) = m(a, b);
  return out;
}

inline std::set<int> degrees_present(const Grading& g)
{
  std::set<int> ds{0};
  for (std::size_t a = 0; a < g.n(); ++a)
    for (std::size_t b = 0; b < g.n(); ++b)
      if (a != b) ds.insert(g.deg(a, b));
  return ds;
}

/// The six defining/derived conditions of a good grading for a nilpotent e:
///   gg1  e is homogeneous of degree 2;
///   gg2  ad e : 𝔤_j → 𝔤_{j+2} injective for j ≤ −1;
///   gg3  ad e : 𝔤_j → 𝔤_{j+2} surjective for j ≥ −1;
///   gg4  𝔷(e) ⊆ 𝔤_{≥0};
///   gg5  the trace pairing of 𝔤_i with 𝔤_j vanishes unless i + j = 0;
///   gg6  dim 𝔷(e) = dim 𝔤₀ + dim 𝔤₁.
/// For gg2/gg3 the map is composed with projection onto degree j+2, so both
/// remain meaningful (and dual to each other) even when gg1 fails.
struct GoodGradingReport {
  bool gg1 = false, gg2 = false, gg3 = false, gg4 = false, gg5 = false, gg6 = false;
  bool good() const { return gg1 && gg2 && gg3 && gg4 && gg5 && gg6; }
};

inline GoodGradingReport check_good_grading(const Mat& e, const Grading& g)
{
  const std::size_t n = g.n();
  if (e.rows() != n || e.cols() != n) throw std::invalid_argument("check_good_grading: size mismatch");
  GoodGradingReport rep;
  const auto graded = graded_sl_basis(g);

  rep.gg1 = (e == degree_component(g, e, 2));

  const auto space = [&](int d) -> const MatSpan* {
    const auto it = graded.find(d);
    return it == graded.end() ? nullptr : &it->second;
  };
  const auto projected_ad_e = [&](int target) {
    return [&g, &e, target](const Mat& x) { return degree_component(g, bracket(e, x), target); };
  };

  rep.gg2 = true;
  rep.gg3 = true;
  for (const auto& [d, span] : graded) {
    if (d <= -1 && kernel_of_operator(projected_ad_e(d + 2), span).dim() != 0) rep.gg2 = false;
    if (d >= -1) {
      const auto* target = space(d + 2);
      const std::size_t want = target ? target->dim() : 0;
      if (image_of_operator(projected_ad_e(d + 2), span).dim() != want) rep.gg3 = false;
    }
  }
  // degrees d ≥ −1 with 𝔤_d = 0 but 𝔤_{d+2} ≠ 0 also break surjectivity
  for (const auto& [d, span] : graded)
    if (d >= 1 && !graded.count(d - 2) && span.dim() != 0) rep.gg3 = false;

  const auto sl = make_span(n, sl_basis(n));
  const auto ze = kernel_of_operator([&e](const Mat& x) { return bracket(e, x); }, sl);
  rep.gg4 = true;
  for (const auto& z : ze.basis)
    for (int d : degrees_present(g))
      if (d < 0 && !degree_component(g, z, d).is_zero()) rep.gg4 = false;

  rep.gg5 = true;
  for (const auto& [di, si] : graded)
    for (const auto& [dj, sj] : graded) {
      if (di + dj == 0) continue;
      for (const auto& x : si.basis)
        for (const auto& y : sj.basis)
          if (trace_pair(x, y) != 0) rep.gg5 = false;
    }

  const auto* g0 = space(0);
  const auto* g1 = space(1);
  rep.gg6 = (ze.dim() == (g0 ? g0->dim() : 0) + (g1 ? g1->dim() : 0));
  return rep;
}

/// The sl₂-triple attached to a pyramid: e = e_P, h diagonal with entry
/// m − 1 − 2p at a label in position p (from the left) of a row of length m,
/// and f the unique degree −2 solution of [e, f] = h.
inline Sl2Triple graded_triple(const Filling& fl)
{
  auto [e, g] = nilpotent_and_grading(fl);
  const std::size_t n = fl.n;
  Mat h(n, n);
  for (std::size_t lab = 0; lab < n; ++lab) {
    const auto b = fl.box_of[lab];
    const int m = fl.pyramid.shape[b.row];
    const int p = (b.col - fl.pyramid.f(b.row)) / 2;
    h(lab, lab) = m - 1 - 2 * p;
  }

  Mat f(n, n);
  if (!h.is_zero()) {
    const auto graded = graded_sl_basis(g);
    const auto it2 = graded.find(-2);
    if (it2 == graded.end()) throw std::logic_error("graded_triple: no degree -2 component");
    const auto it0 = graded.find(0);
    const Mat a = operator_matrix([&e](const Mat& x) { return bracket(e, x); }, it2->second,
                                  it0->second);
    const auto coords = coordinates_in(it0->second, h);
    if (!coords) throw std::logic_error("graded_triple: h not of degree 0");
    const auto x = solve_linear(a, *coords);
    if (!x) throw std::logic_error("graded_triple: [e,f]=h not solvable in degree -2");
    for (std::size_t k = 0; k < x->size(); ++k)
      if ((*x)[k] != 0) f += it2->second.basis[k] * (*x)[k];
  }

  Sl2Triple t{std::move(e), std::move(h), std::move(f)};
  require_sl2_relations(t, "graded_triple");
  return t;
}

/// Slodowy slice e + 𝔷(f) through e, with 𝔷(f) computed inside 𝔰𝔩_n.
struct SliceChart {
  Sl2Triple triple;
  MatSpan zf;
};

inline SliceChart slice(const Sl2Triple& t)
{
  t.e.require_square("slice");
  const std::size_t n = t.e.rows();
  const auto sl = make_span(n, sl_basis(n));
  auto zf = kernel_of_operator([&t](const Mat& x) { return bracket(t.f, x); }, sl);
  return {t, std::move(zf)};
}

/// The entry-wise ad-h weight component of m (weight of position (a,b) is
/// h_aa − h_bb).
inline Mat weight_component(const Mat& h, const Mat& m, const Rational& w)
{
  const std::size_t n = h.rows();
  Mat out(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (h(a, a) - h(b, b) == w) out(a, b) = m(a, b);
  return out;
}

/// Structural checks on a Slodowy slice:
///   transversal   𝔷(f) ⊕ [𝔤, e] = 𝔰𝔩_n;
///   graded        𝔷(f) is the direct sum of its ad-h weight spaces;
///   contracting   every ad-h weight occurring in 𝔷(f) is ≤ 0.
struct SliceReport {
  SliceChart chart;
  std::map<int, MatSpan> weight_spaces;
  bool transversal = false;
  bool graded = false;
  bool contracting = false;
  bool ok() const { return transversal && graded && contracting; }
};

inline SliceReport slice_checks(const Sl2Triple& t)
{
  SliceReport rep;
  rep.chart = slice(t);
  const std::size_t n = t.e.rows();
  const auto sl = make_span(n, sl_basis(n));
  const auto ad_e_image =
      image_of_operator([&t](const Mat& x) { return bracket(t.e, x); }, sl);
  rep.transversal = dim_intersection(rep.chart.zf, ad_e_image) == 0 &&
                    rep.chart.zf.dim() + ad_e_image.dim() == n * n - 1;

  std::set<int> weights;
  for (const auto& z : rep.chart.zf.basis)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (z(a, b) != 0) weights.insert(static_cast<int>(t.h(a, a) - t.h(b, b)));

  std::size_t total = 0;
  rep.contracting = true;
  for (int w : weights) {
    auto ws = kernel_of_operator(
        [&t, w](const Mat& x) { return x - weight_component(t.h, x, Rational(w)); },
        rep.chart.zf);
    if (ws.dim() == 0) continue;
    total += ws.dim();
    if (w > 0) rep.contracting = false;
    rep.weight_spaces.emplace(w, std::move(ws));
  }
  rep.graded = (total == rep.chart.zf.dim());
  return rep;
}

/// The symplectic space 𝔤₋₁ of an (odd) pyramid grading: basis the degree −1
/// matrix units in lexicographic (row, column) order, form
/// ω(x, y) = ⟨e, [x, y]⟩, and an exact Darboux basis computed greedily.  The
/// Lagrangian is spanned by the first members of the Darboux pairs.
struct SymplecticData {
  MatSpan g_minus1;
  Mat gram;
  std::vector<Mat> darboux_u, darboux_v;
  MatSpan lagrangian;
};

inline SymplecticData symplectic_lagrangian(const Mat& e, const Grading& g)
{
  const std::size_t n = g.n();
  std::vector<Mat> basis;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && g.deg(a, b) == -1) basis.push_back(Mat::unit(n, a, b));

  SymplecticData out;
  out.g_minus1 = make_span(n, basis);
  const auto omega = [&e](const Mat& x, const Mat& y) { return trace_pair(e, bracket(x, y)); };

  out.gram = Mat(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) out.gram(i, j) = omega(basis[i], basis[j]);

  std::vector<Mat> work = basis;
  while (!work.empty()) {
    Mat u = std::move(work.front());
    work.erase(work.begin());
    std::size_t vi = work.size();
    for (std::size_t k = 0; k < work.size(); ++k)
      if (omega(u, work[k]) != 0) {
        vi = k;
        break;
      }
    if (vi == work.size())
      throw std::runtime_error("symplectic_lagrangian: degenerate form on g_{-1}");
    Mat v = work[vi] * (Rational(1) / omega(u, work[vi]));
    work.erase(work.begin() + static_cast<std::ptrdiff_t>(vi));
    for (auto& w : work) w = w - v * omega(u, w) + u * omega(v, w);
    out.darboux_u.push_back(std::move(u));
    out.darboux_v.push_back(std::move(v));
  }
  out.lagrangian = make_span(n, out.darboux_u);
  return out;
}

/// Premet subalgebra 𝔪 = 𝔩 ⊕ 𝔤_{≤−2} attached to a pyramid grading and an
/// isotropic Lagrangian 𝔩 ⊂ 𝔤₋₁, together with the values of χ = ⟨e, ·⟩ on
/// its basis.
struct PremetData {
  Mat e;
  MatSpan m;
  std::vector<Rational> chi;
};

inline PremetData premet(const Mat& e, const Grading& g, const MatSpan& lagrangian)
{
  const std::size_t n = g.n();
  std::vector<Mat> gens = lagrangian.basis;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && g.deg(a, b) <= -2) gens.push_back(Mat::unit(n, a, b));
  PremetData out;
  out.e = e;
  out.m = make_span(n, std::move(gens));
  for (const auto& x : out.m.basis) out.chi.push_back(trace_pair(e, x));
  return out;
}

inline PremetData premet(const Filling& fl)
{
  const auto [e, g] = nilpotent_and_grading(fl);
  const auto sympl = symplectic_lagrangian(e, g);
  return premet(e, g, sympl.lagrangian);
}

/// χ vanishes on [𝔪, 𝔪] — checked on basis pairs.
inline bool chi_vanishes_on_brackets(const PremetData& p)
{
  for (std::size_t i = 0; i < p.m.dim(); ++i)
    for (std::size_t j = i + 1; j < p.m.dim(); ++j)
      if (trace_pair(p.e, bracket(p.m.basis[i], p.m.basis[j])) != 0) return false;
  return true;
}

} // namespace slodowy
