#pragma once

#include "slodowy/dual.hpp"
#include "slodowy/linalg.hpp"
#include "slodowy/matrix.hpp"
#include "slodowy/polynomial.hpp"
#include "slodowy/triples.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace slodowy {

/// Coordinate ring of 𝔤𝔩_n* ≅ 𝔤𝔩_n: variables x11 … xnn, row-major.
/// Variable i·n+j is the matrix entry (i, j) (0-based), so evaluation points
/// are exactly flatten()ed matrices.
inline RingPtr matrix_ring(std::size_t n)
{
  if (n == 0 || n > 9) throw std::invalid_argument("matrix_ring: need 1 <= n <= 9");
  std::vector<std::string> names;
  names.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      names.push_back("x" + std::to_string(i + 1) + std::to_string(j + 1));
  return make_ring(std::move(names));
}

inline std::size_t var_index(std::size_t n, std::size_t i, std::size_t j) { return i * n + j; }

inline Polynomial entry_poly(const RingPtr& ring, std::size_t n, std::size_t i, std::size_t j)
{
  return Polynomial::variable(ring, var_index(n, i, j));
}

/// Gradient of F at p as a matrix: (dF)_{ij} = ∂F/∂v_{ji}(p).  With this
/// convention {F, G}(p) = ⟨[dF, dG], p⟩.
inline Mat gradient_at(const Polynomial& f, const Mat& p)
{
  const std::size_t n = p.rows();
  Mat d(n, n);
  if (!f.ring) return d;
  if (f.ring->size() != n * n) throw std::invalid_argument("gradient_at: ring/point mismatch");
  const auto pt = flatten(p);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d(i, j) = f.derivative(var_index(n, j, i)).eval(pt);
  return d;
}

inline MatT<Polynomial> gradient_poly(const Polynomial& f, std::size_t n)
{
  MatT<Polynomial> d(n, n);
  if (!f.ring) return d;
  if (f.ring->size() != n * n) throw std::invalid_argument("gradient_poly: ring size mismatch");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d(i, j) = f.derivative(var_index(n, j, i));
  return d;
}

/// Lie–Poisson bracket evaluated at a point: {F, G}(p) = ⟨[dF, dG], p⟩.
inline Rational lie_poisson_at(const Polynomial& f, const Polynomial& g, const Mat& p)
{
  return trace_pair(bracket(gradient_at(f, p), gradient_at(g, p)), p);
}

/// Symbolic Lie–Poisson bracket.  On coordinates it reduces to the structure
/// constants {v_ij, v_kl} = δ_il v_kj − δ_jk v_il.
inline Polynomial lie_poisson(const Polynomial& f, const Polynomial& g)
{
  if (f.ring && g.ring && f.ring != g.ring)
    throw std::invalid_argument("lie_poisson: mixed rings");
  const RingPtr ring = f.ring ? f.ring : g.ring;
  if (!ring) return Polynomial(0);
  std::size_t n = 1;
  while (n * n < ring->size()) ++n;
  if (n * n != ring->size()) throw std::invalid_argument("lie_poisson: not a matrix ring");
  const auto df = gradient_poly(f, n), dg = gradient_poly(g, n);
  const auto b = bracket(df, dg);
  Polynomial out(0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!b(i, j).is_zero()) out += b(i, j) * Polynomial::variable(ring, var_index(n, j, i));
  return out;
}

/// Seeded deterministic randomness for the sampling-based routines.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : m_gen(seed) {}

  int int_in(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(m_gen); }

  Rational small_rational() { return Rational(int_in(-9, 9), int_in(1, 3)); }

  Rational small_nonzero()
  {
    for (;;) {
      const Rational r = small_rational();
      if (r != 0) return r;
    }
  }

  std::vector<Rational> random_point(std::size_t k)
  {
    std::vector<Rational> p(k);
    for (auto& x : p) x = small_rational();
    return p;
  }

  Mat random_sl(std::size_t n)
  {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = small_rational();
    const Rational shift = m.trace() / Rational(static_cast<int>(n));
    for (std::size_t i = 0; i < n; ++i) m(i, i) -= shift;
    return m;
  }

  Polynomial random_polynomial(const RingPtr& ring, int max_deg, int n_terms)
  {
    Polynomial p(0);
    for (int t = 0; t < n_terms; ++t) {
      Polynomial mono{small_nonzero()};
      const int deg = int_in(0, max_deg);
      for (int d = 0; d < deg; ++d)
        mono *= Polynomial::variable(ring, int_in(0, static_cast<int>(ring->size()) - 1));
      p += mono;
    }
    return p;
  }

private:
  std::mt19937_64 m_gen;
};

/// Second-class constraint data at a point p: constraint gradients W_k (the
/// constraints are the affine functions ⟨W_k, ·⟩) and the inverse of
/// C_{kl} = {ψ_k, ψ_l}(p) = ⟨[W_k, W_l], p⟩.
struct DiracContext {
  Mat p;
  std::vector<Mat> constraints;
  Mat cinv;
};

inline std::optional<DiracContext> make_dirac(const std::vector<Mat>& constraints, const Mat& p)
{
  const std::size_t m = constraints.size();
  Mat c(m, m);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t l = 0; l < m; ++l)
      c(k, l) = trace_pair(bracket(constraints[k], constraints[l]), p);
  auto inv = inverse(c);
  if (!inv) return std::nullopt;
  return DiracContext{p, constraints, std::move(*inv)};
}

/// Dirac bracket at the context's base point:
///   {F,G}_D = {F,G} − Σ_{kl} {F,ψ_k} (C⁻¹)_{kl} {ψ_l,G}.
inline Rational dirac_bracket_at(const DiracContext& ctx, const Polynomial& f, const Polynomial& g)
{
  const Mat df = gradient_at(f, ctx.p), dg = gradient_at(g, ctx.p);
  Rational out = trace_pair(bracket(df, dg), ctx.p);
  const std::size_t m = ctx.constraints.size();
  std::vector<Rational> a(m), b(m);
  for (std::size_t k = 0; k < m; ++k) {
    a[k] = trace_pair(bracket(df, ctx.constraints[k]), ctx.p);
    b[k] = trace_pair(bracket(ctx.constraints[k], dg), ctx.p);
  }
  for (std::size_t k = 0; k < m; ++k) {
    if (a[k] == 0) continue;
    for (std::size_t l = 0; l < m; ++l) out -= a[k] * ctx.cinv(k, l) * b[l];
  }
  return out;
}

/// A Slodowy slice with polynomial coordinates: the section map
/// S : chart → 𝔤 (an n×n matrix of chart-ring polynomials with S(0) = e),
/// the extraction polynomials recovering the chart coordinates from ambient
/// matrix entries, and the Kazhdan weights of the coordinates.
struct ChartedSlice {
  Sl2Triple triple;
  MatSpan zf;
  RingPtr ambient, chart;
  std::vector<std::vector<Polynomial>> section;
  std::vector<Polynomial> extraction;
  std::vector<int> weights;

  Mat section_at(const std::vector<Rational>& w) const
  {
    const std::size_t n = section.size();
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = section[i][j].eval(w);
    return m;
  }

  /// Pull a chart polynomial back to the ambient matrix coordinates.
  Polynomial to_ambient(const Polynomial& f) const { return f.substitute(extraction); }
};

/// The affine chart on e + 𝔷(f) in an ad-h homogeneous basis of 𝔷(f)
/// (weights in decreasing order, so the weight-0 directions come first).
/// A coordinate along an ad-h weight −k direction gets Kazhdan weight k + 2.
inline ChartedSlice linear_chart(const Sl2Triple& t, std::vector<std::string> names = {})
{
  ChartedSlice cs;
  cs.triple = t;
  const std::size_t n = t.e.rows();
  const auto rep = slice_checks(t);
  if (!rep.ok()) throw std::logic_error("linear_chart: slice checks fail");

  std::vector<Mat> basis;
  for (auto it = rep.weight_spaces.rbegin(); it != rep.weight_spaces.rend(); ++it)
    for (const auto& b : it->second.basis) {
      basis.push_back(b);
      cs.weights.push_back(2 - it->first);
    }
  const std::size_t k = basis.size();
  cs.zf = make_span(n, basis);

  if (names.empty())
    for (std::size_t s = 0; s < k; ++s) names.push_back("c" + std::to_string(s + 1));
  if (names.size() != k) throw std::invalid_argument("linear_chart: wrong number of names");
  cs.chart = make_ring(std::move(names));
  cs.ambient = matrix_ring(n);

  cs.section.assign(n, std::vector<Polynomial>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Polynomial p{t.e(i, j)};
      for (std::size_t s = 0; s < k; ++s)
        if (basis[s](i, j) != 0)
          p += Polynomial(basis[s](i, j)) * Polynomial::variable(cs.chart, s);
      cs.section[i][j] = std::move(p);
    }

  // dual-linear extraction: with B the n²×k matrix of flattened basis vectors,
  // coords(x) = (BᵀB)⁻¹Bᵀ · flatten(x − e)
  Mat bmat(n * n, k);
  for (std::size_t s = 0; s < k; ++s) {
    const auto v = flatten(basis[s]);
    for (std::size_t r = 0; r < n * n; ++r) bmat(r, s) = v[r];
  }
  const auto gram_inv = inverse(bmat.transpose() * bmat);
  if (!gram_inv) throw std::logic_error("linear_chart: dependent slice basis");
  const Mat lft = *gram_inv * bmat.transpose();
  const auto e_flat = flatten(t.e);
  for (std::size_t s = 0; s < k; ++s) {
    Polynomial p(0);
    for (std::size_t m = 0; m < n * n; ++m)
      if (lft(s, m) != 0)
        p += Polynomial(lft(s, m)) *
             (Polynomial::variable(cs.ambient, m) - Polynomial(e_flat[m]));
    cs.extraction.push_back(std::move(p));
  }
  return cs;
}

/// Common weight of all terms of f (variable j weighs weights[j]); throws if
/// f mixes weights.  The zero polynomial counts as weight 0.
inline int homogeneous_weight(const Polynomial& f, const std::vector<int>& weights)
{
  std::optional<int> w;
  for (const auto& [exp, c] : f.terms) {
    int s = 0;
    for (std::size_t j = 0; j < exp.size(); ++j) s += exp[j] * weights[j];
    if (w && *w != s) throw std::invalid_argument("homogeneous_weight: mixed weights");
    w = s;
  }
  return w ? *w : 0;
}

/// All exponent vectors with Σ exp_j · weights_j = target (weights ≥ 1).
inline std::vector<std::vector<int>> weighted_monomials(const std::vector<int>& weights, int target)
{
  std::vector<std::vector<int>> out;
  if (target < 0) return out;
  for (int wgt : weights)
    if (wgt < 1) throw std::invalid_argument("weighted_monomials: weights must be positive");
  std::vector<int> exp(weights.size(), 0);
  const auto rec = [&](auto&& self, std::size_t j, int rem) -> void {
    if (j == weights.size()) {
      if (rem == 0) out.push_back(exp);
      return;
    }
    for (int e = 0; e * weights[j] <= rem; ++e) {
      exp[j] = e;
      self(self, j + 1, rem - e * weights[j]);
    }
    exp[j] = 0;
  };
  rec(rec, 0, target);
  return out;
}

/// The Dirac bracket {F, G}_D of two chart polynomials as a chart polynomial,
/// reconstructed by exact interpolation: the result must be Kazhdan-weight
/// homogeneous of weight wt(F) + wt(G) − 2, so it is solved for in that
/// monomial space from point evaluations and verified on held-out points.
/// Any failure throws; nothing is silently absorbed.
inline Polynomial dirac_bracket_poly(const ChartedSlice& cs, const Polynomial& f,
                                     const Polynomial& g, Rng& rng)
{
  const int target = homogeneous_weight(f, cs.weights) + homogeneous_weight(g, cs.weights) - 2;
  const auto monoms = weighted_monomials(cs.weights, target);
  const std::size_t m = monoms.size();
  const std::size_t k = cs.weights.size();

  const Polynomial fa = cs.to_ambient(f), ga = cs.to_ambient(g);
  const std::size_t n = cs.triple.e.rows();
  const auto sl = make_span(n, sl_basis(n));
  const auto constraints =
      image_of_operator([&cs](const Mat& x) { return bracket(cs.triple.f, x); }, sl).basis;

  const auto sample = [&]() -> std::pair<std::vector<Rational>, Rational> {
    for (int tries = 0; tries < 400; ++tries) {
      auto wpt = rng.random_point(k);
      const Mat p = cs.section_at(wpt);
      const auto ctx = make_dirac(constraints, p);
      if (!ctx) continue; // constraint matrix degenerate here; resample
      const Rational val = dirac_bracket_at(*ctx, fa, ga);
      return {std::move(wpt), val};
    }
    throw std::runtime_error("dirac_bracket_poly: no nondegenerate sample points found");
  };
  const auto monomial_row = [&](const std::vector<Rational>& wpt) {
    std::vector<Rational> row(m);
    for (std::size_t t = 0; t < m; ++t) {
      Rational mono(1);
      for (std::size_t j = 0; j < k; ++j)
        for (int e = 0; e < monoms[t][j]; ++e) mono *= wpt[j];
      row[t] = mono;
    }
    return row;
  };

  if (m == 0) {
    for (int s = 0; s < 5; ++s)
      if (sample().second != 0)
        throw std::runtime_error("dirac_bracket_poly: nonzero bracket with empty weight space");
    return Polynomial(0);
  }

  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> vals;
  for (std::size_t s = 0; s < m + 3; ++s) {
    const auto [wpt, val] = sample();
    rows.push_back(monomial_row(wpt));
    vals.push_back(val);
  }
  Mat vmat(rows.size(), m);
  const auto refill = [&]() {
    vmat = Mat(rows.size(), m);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < m; ++c) vmat(r, c) = rows[r][c];
  };
  refill();
  for (int extra = 0; rank(vmat) < m && extra < 60; ++extra) {
    const auto [wpt, val] = sample();
    rows.push_back(monomial_row(wpt));
    vals.push_back(val);
    refill();
  }
  if (rank(vmat) < m)
    throw std::runtime_error("dirac_bracket_poly: sample points do not separate the monomials");

  const auto sol = solve_linear(vmat, vals);
  if (!sol)
    throw std::runtime_error(
        "dirac_bracket_poly: bracket is not weight-homogeneous of the expected weight");

  Polynomial out;
  out.ring = cs.chart;
  for (std::size_t t = 0; t < m; ++t)
    if ((*sol)[t] != 0) out.terms.emplace(monoms[t], (*sol)[t]);

  for (int h = 0; h < 3; ++h) {
    const auto [wpt, val] = sample();
    if (out.eval(wpt) != val)
      throw std::runtime_error("dirac_bracket_poly: held-out verification failed");
  }
  return out;
}

/// A section for unipotent canonicalisation: the group M = I + 𝔪₂ acts by
/// conjugation on the affine surface {Y : ⟨m, Y⟩ = ⟨m, e₂⟩ ∀ m ∈ 𝔪₂}, and
/// the section matrix (over the chart ring) meets every orbit exactly once.
/// The conditions are linear functionals C·Y = Σ C_ab Y_ab pinning a matrix
/// to the section's shape; `cond_*` is the selected defining set (as many as
/// dim 𝔪₂), `allcond_*` keeps every derived condition for strict checking.
struct SectionChart {
  Mat e2;
  MatSpan m2;
  RingPtr ambient, chart;
  std::vector<std::vector<Polynomial>> section;
  std::vector<Polynomial> extraction;
  std::vector<int> weights;
  std::vector<Mat> cond_lhs;
  std::vector<Rational> cond_rhs;
  std::vector<Mat> allcond_lhs;
  std::vector<Rational> allcond_rhs;

  Mat section_at(const std::vector<Rational>& w) const
  {
    const std::size_t n = section.size();
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = section[i][j].eval(w);
    return m;
  }
};

template <class T>
T condition_value(const Mat& c, const MatT<T>& y)
{
  T acc(0);
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j)
      if (c(i, j) != 0) acc += T(c(i, j)) * y(i, j);
  return acc;
}

/// Derive the canonicalisation conditions from the section matrix itself:
/// every constant entry pins a value, every syntactically repeated
/// non-constant entry pins an equality.  From these, a defining subset is
/// selected greedily — a condition is kept iff it is independent of the
/// invariants of the flow (the functionals ⟨m, ·⟩, m ∈ 𝔪₂, and the trace)
/// and of the conditions already kept.  Exactly dim 𝔪₂ must survive.
inline void derive_conditions(SectionChart& sc)
{
  const std::size_t n = sc.e2.rows();
  sc.allcond_lhs.clear();
  sc.allcond_rhs.clear();
  sc.cond_lhs.clear();
  sc.cond_rhs.clear();

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (sc.section[i][j].is_constant()) {
        Mat c(n, n);
        c(i, j) = 1;
        sc.allcond_lhs.push_back(std::move(c));
        sc.allcond_rhs.push_back(sc.section[i][j].constant_value());
      }
  for (std::size_t p1 = 0; p1 < n * n; ++p1)
    for (std::size_t p2 = p1 + 1; p2 < n * n; ++p2) {
      const auto& f1 = sc.section[p1 / n][p1 % n];
      const auto& f2 = sc.section[p2 / n][p2 % n];
      if (f1.is_constant() || f2.is_constant() || !(f1 == f2)) continue;
      Mat c(n, n);
      c(p1 / n, p1 % n) = 1;
      c(p2 / n, p2 % n) = -1;
      sc.allcond_lhs.push_back(std::move(c));
      sc.allcond_rhs.push_back(0);
    }

  std::vector<Mat> current;
  for (const auto& m : sc.m2.basis) current.push_back(m.transpose());
  current.push_back(Mat::identity(n));
  std::size_t current_rank = rank(stack_rows(n, current));
  for (std::size_t c = 0; c < sc.allcond_lhs.size(); ++c) {
    current.push_back(sc.allcond_lhs[c]);
    const std::size_t r = rank(stack_rows(n, current));
    if (r > current_rank) {
      current_rank = r;
      sc.cond_lhs.push_back(sc.allcond_lhs[c]);
      sc.cond_rhs.push_back(sc.allcond_rhs[c]);
    } else {
      current.pop_back();
    }
  }
  if (sc.cond_lhs.size() != sc.m2.dim())
    throw std::logic_error("derive_conditions: conditions do not cut the group directions");
}

template <class T>
struct Canonical {
  std::vector<T> coords;
  MatT<T> group;     // the canonicalising element I + X, X ∈ 𝔪₂ ⊗ T
  MatT<T> canonical; // (I + X) · Y · (I + X)⁻¹, of section shape
};

/// Conjugate Y into the section by a unique element of I + 𝔪₂, solving the
/// selected conditions by exact Newton iteration (the action is unipotent,
/// so the iteration terminates exactly).  Works over Rational and over dual
/// numbers; with strict = true every derived condition is re-checked on the
/// result, which is only appropriate for points exactly on the surface.
template <class T>
Canonical<T> canonicalize(const SectionChart& sc, const MatT<T>& y, bool strict = false)
{
  const std::size_t n = sc.e2.rows();
  if (y.rows() != n || y.cols() != n) throw std::invalid_argument("canonicalize: shape mismatch");
  const std::size_t k = sc.m2.dim();

  const auto conjugated = [&]<class U>(const std::vector<U>& ts) -> MatT<U> {
    MatT<U> x(n, n);
    for (std::size_t s = 0; s < k; ++s)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (sc.m2.basis[s](i, j) != 0) x(i, j) += ts[s] * U(sc.m2.basis[s](i, j));
    MatT<U> grp = MatT<U>::identity(n) + x;
    const auto inv = inverse(grp);
    if (!inv) throw std::logic_error("canonicalize: group element not invertible");
    MatT<U> yu(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) yu(i, j) = U(y(i, j));
    return grp * yu * *inv;
  };

  std::vector<T> t(k, T(0));
  bool converged = false;
  // The action is unipotent, so on-surface inputs converge within the
  // nilpotency depth of 𝔪₂; a tight cap also stops divergent iterates from
  // doubling their digit counts every round.
  for (int iter = 0; iter < 12 && !converged; ++iter) {
    const MatT<T> z = conjugated(t);
    std::vector<T> res(k);
    bool all_zero = true;
    for (std::size_t c = 0; c < k; ++c) {
      res[c] = condition_value(sc.cond_lhs[c], z) - T(sc.cond_rhs[c]);
      if (!(res[c] == T(0))) all_zero = false;
    }
    if (all_zero) {
      converged = true;
      break;
    }
    MatT<T> jac(k, k);
    for (std::size_t s = 0; s < k; ++s) {
      std::vector<Dual<T>> td;
      td.reserve(k);
      for (std::size_t q = 0; q < k; ++q) td.emplace_back(t[q], T(q == s ? 1 : 0));
      const MatT<Dual<T>> zd = conjugated(td);
      for (std::size_t c = 0; c < k; ++c)
        jac(c, s) = condition_value(sc.cond_lhs[c], zd).eps;
    }
    const auto step = solve_linear(jac, res);
    if (!step) throw std::logic_error("canonicalize: singular Newton system");
    for (std::size_t q = 0; q < k; ++q) t[q] -= (*step)[q];
    // Divergent iterates double their digit counts every round; cut them off
    // long before exact arithmetic grinds to a halt.  Convergent solves stay
    // comparable in size to the input coordinates.
    for (const auto& c : t)
      if (magnitude_bits(c) > 4096)
        throw std::logic_error("canonicalize: Newton iteration diverged");
  }
  if (!converged) throw std::logic_error("canonicalize: Newton iteration did not terminate");

  Canonical<T> out;
  MatT<T> x(n, n);
  for (std::size_t s = 0; s < k; ++s)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (sc.m2.basis[s](i, j) != 0) x(i, j) += t[s] * T(sc.m2.basis[s](i, j));
  out.group = MatT<T>::identity(n) + x;
  out.canonical = conjugated(t);

  if (strict) {
    for (std::size_t c = 0; c < sc.allcond_lhs.size(); ++c)
      if (!(condition_value(sc.allcond_lhs[c], out.canonical) == T(sc.allcond_rhs[c])))
        throw std::logic_error("canonicalize: redundant section condition violated");
  }

  std::vector<T> pt;
  pt.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) pt.push_back(out.canonical(i, j));
  for (const auto& ex : sc.extraction) out.coords.push_back(ex.template eval<T>(pt));
  return out;
}

/// Reduced Poisson bracket of two chart functions at a surface point p: each
/// matrix entry direction is pushed through the canonicalisation with a dual
/// number, giving the gradients of F̃ = F ∘ coords and G̃; the bracket is then
/// ⟨[dF̃, dG̃], p⟩.  The value is independent of how F, G are extended off the
/// surface because the constraint functionals are Casimirs of this setup.
inline Rational reduced_bracket_at(const SectionChart& sc, const Polynomial& f,
                                   const Polynomial& g, const Mat& p)
{
  const std::size_t n = p.rows();
  using D = Dual<Rational>;
  Mat df(n, n), dg(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      MatT<D> yd(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          yd(i, j) = D(p(i, j), Rational((i == a && j == b) ? 1 : 0));
      const auto can = canonicalize<D>(sc, yd, /*strict=*/false);
      df(b, a) = f.eval<D>(can.coords).eps;
      dg(b, a) = g.eval<D>(can.coords).eps;
    }
  return trace_pair(bracket(df, dg), p);
}

} // namespace slodowy
