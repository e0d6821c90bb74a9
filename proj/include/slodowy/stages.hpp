#pragma once

#include "slodowy/jordan.hpp"
#include "slodowy/linalg.hpp"
#include "slodowy/partitions.hpp"
#include "slodowy/pyramids.hpp"
#include "slodowy/triples.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace slodowy {

/// Everything needed to reduce in two stages along a dominance cover
/// λ ⋗ μ, realised on the right-aligned pyramid of μ:
///   e1      the pyramid nilpotent of μ;
///   m1      its Premet subalgebra 𝔤_{≤−2} (right-aligned pyramids are even);
///   e2      e1 plus the column-matching arrows from witness row i to row j,
///           a nilpotent of Jordan type λ;
///   k_gens  E_1, …, E_{j−i}, the abelian ladder algebra 𝔨;
///   m2      m1 ⊕ 𝔨, the Premet-type subalgebra for e2.
struct ReductionData {
  Partition lambda, mu;
  CoverWitness witness;
  Pyramid pyramid;
  Filling filling;
  Grading grading;
  Mat e1, e2;
  MatSpan m1, m2, k;
  std::vector<Mat> k_gens;
};

inline ReductionData stage_data(const Partition& lambda, const Partition& mu)
{
  const auto w = covers(lambda, mu);
  if (!w) throw std::invalid_argument("stage_data: lambda does not cover mu");

  ReductionData rd;
  rd.lambda = lambda;
  rd.mu = mu;
  rd.witness = *w;
  rd.pyramid = right_aligned(mu);
  rd.filling = canonical_filling(rd.pyramid);
  auto [e1, g] = nilpotent_and_grading(rd.filling);
  rd.grading = std::move(g);
  rd.e1 = std::move(e1);
  const std::size_t n = rd.filling.n;

  std::vector<Mat> m1_gens;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && rd.grading.deg(a, b) <= -2) m1_gens.push_back(Mat::unit(n, a, b));
  rd.m1 = make_span(n, std::move(m1_gens));

  const std::size_t i = static_cast<std::size_t>(rd.witness.i) - 1; // 0-based rows
  const std::size_t j = static_cast<std::size_t>(rd.witness.j) - 1;
  rd.e2 = rd.e1;
  for (int c = rd.pyramid.f(j); c <= rd.pyramid.F(j); c += 2)
    rd.e2(rd.filling.label(i, c), rd.filling.label(j, c)) = 1;

  for (std::size_t m = 1; m <= j - i; ++m) {
    Mat em(n, n);
    for (std::size_t r = i; r + m <= j; ++r)
      for (int c = rd.pyramid.f(r + m); c <= rd.pyramid.F(r + m); c += 2)
        em(rd.filling.label(r + m, c), rd.filling.label(r, c)) = 1;
    rd.k_gens.push_back(std::move(em));
  }
  rd.k = make_span(n, rd.k_gens);

  std::vector<Mat> m2_gens = rd.m1.basis;
  m2_gens.insert(m2_gens.end(), rd.k_gens.begin(), rd.k_gens.end());
  rd.m2 = make_span(n, std::move(m2_gens));
  return rd;
}

inline Rational chi(const Mat& e, const Mat& x) { return trace_pair(e, x); }

/// The four conditions for reduction by stages:
///   SR1  m1 ◁ m2 with 𝔨 an abelian complementary subalgebra, m2 = m1 ⊕ 𝔨;
///   SR2  χ₂ vanishes on [m2, m2] and χ₂ − χ₁ vanishes on m1;
///   SR3  both characters vanish on [𝔨, m1];
///   SR4  X ↦ (⟨X, E_s⟩)_s maps m1^⊥ ∩ 𝔰𝔩_n onto 𝔨*.
struct SrReport {
  bool sr1_ideal = false, sr1_subalgebra = false, sr1_abelian = false, sr1_direct = false;
  bool sr2_iso = false, sr2_match = false;
  bool sr3_chi1 = false, sr3_chi2 = false;
  bool sr4_surjective = false;
  bool ok() const
  {
    return sr1_ideal && sr1_subalgebra && sr1_abelian && sr1_direct && sr2_iso && sr2_match &&
           sr3_chi1 && sr3_chi2 && sr4_surjective;
  }
};

inline SrReport verify_sr(const ReductionData& rd)
{
  SrReport rep;
  const std::size_t n = rd.filling.n;

  rep.sr1_ideal = true;
  for (const auto& x : rd.m2.basis)
    for (const auto& y : rd.m1.basis)
      if (!span_contains(rd.m1, bracket(x, y))) rep.sr1_ideal = false;
  rep.sr1_subalgebra = true;
  rep.sr1_abelian = true;
  for (const auto& x : rd.k.basis)
    for (const auto& y : rd.k.basis) {
      const Mat b = bracket(x, y);
      if (!span_contains(rd.k, b)) rep.sr1_subalgebra = false;
      if (!b.is_zero()) rep.sr1_abelian = false;
    }
  rep.sr1_direct = (dim_intersection(rd.m1, rd.k) == 0) &&
                   (rd.m1.dim() + rd.k.dim() == rd.m2.dim());

  rep.sr2_iso = true;
  for (const auto& x : rd.m2.basis)
    for (const auto& y : rd.m2.basis)
      if (chi(rd.e2, bracket(x, y)) != 0) rep.sr2_iso = false;
  rep.sr2_match = true;
  for (const auto& y : rd.m1.basis)
    if (chi(rd.e2 - rd.e1, y) != 0) rep.sr2_match = false;

  rep.sr3_chi1 = rep.sr3_chi2 = true;
  for (const auto& x : rd.k.basis)
    for (const auto& y : rd.m1.basis) {
      const Mat b = bracket(x, y);
      if (chi(rd.e1, b) != 0) rep.sr3_chi1 = false;
      if (chi(rd.e2, b) != 0) rep.sr3_chi2 = false;
    }

  // m1^⊥ ∩ 𝔰𝔩_n, then the rank of X ↦ (⟨X, E_s⟩)_s on it
  const auto sl = sl_basis(n);
  Mat pairing(rd.m1.dim(), sl.size());
  for (std::size_t r = 0; r < rd.m1.dim(); ++r)
    for (std::size_t c = 0; c < sl.size(); ++c) pairing(r, c) = trace_pair(rd.m1.basis[r], sl[c]);
  const auto perp_coords = kernel_basis(pairing);
  Mat onto_k(perp_coords.size(), rd.k.dim());
  for (std::size_t r = 0; r < perp_coords.size(); ++r) {
    Mat x(n, n);
    for (std::size_t c = 0; c < sl.size(); ++c)
      if (perp_coords[r][c] != 0) x += sl[c] * perp_coords[r][c];
    for (std::size_t s = 0; s < rd.k.dim(); ++s) onto_k(r, s) = trace_pair(x, rd.k.basis[s]);
  }
  rep.sr4_surjective = (rank(onto_k) == rd.k.dim());
  return rep;
}

/// The three defining conditions of a Premet-type subalgebra for a nilpotent e:
/// χ-isotropy, trivial intersection with 𝔷(e), and dimension
/// ½(n² − Σ (λ*_k)²) where λ is the Jordan type of e.
struct PremetConditions {
  bool isotropic = false;
  bool transversal = false;
  bool half_dimension = false;
  bool ok() const { return isotropic && transversal && half_dimension; }
};

inline PremetConditions premet_conditions(const Mat& e2, const MatSpan& m)
{
  PremetConditions pc;
  const std::size_t n = e2.rows();

  pc.isotropic = true;
  for (std::size_t a = 0; a < m.dim(); ++a)
    for (std::size_t b = a + 1; b < m.dim(); ++b)
      if (chi(e2, bracket(m.basis[a], m.basis[b])) != 0) pc.isotropic = false;

  const auto sl = make_span(n, sl_basis(n));
  const auto ze = kernel_of_operator([&e2](const Mat& x) { return bracket(e2, x); }, sl);
  pc.transversal = (dim_intersection(m, ze) == 0);

  const auto dual = dual_partition(jordan_type(e2));
  std::size_t sq = 0;
  for (std::size_t k = 0; k < dual.size(); ++k)
    sq += static_cast<std::size_t>(dual[k]) * static_cast<std::size_t>(dual[k]);
  pc.half_dimension = (2 * m.dim() == n * n - sq);
  return pc;
}

/// A Jordan string for e2 acting on row vectors, v ↦ v·e2.  The vectors are
/// produced by iterating the action from `vectors.front()` until it dies;
/// `expected_length` is the part of λ the string accounts for.
struct JordanString {
  std::vector<std::vector<Rational>> vectors;
  std::size_t expected_length = 0;
};

inline std::vector<Rational> row_action(const Mat& e2, const std::vector<Rational>& v)
{
  const std::size_t n = e2.rows();
  std::vector<Rational> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (v[k] == 0) continue;
    for (std::size_t l = 0; l < n; ++l)
      if (e2(k, l) != 0) out[l] += v[k] * e2(k, l);
  }
  return out;
}

inline bool is_zero_vector(const std::vector<Rational>& v)
{
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

/// Explicit Jordan strings for e2 on row vectors: the untouched pyramid rows
/// give unit-vector strings; witness row i seeds a string of length μ_i + 1;
/// when μ_j ≥ 2 the vector v_{i_{d+2}} − (μ_j − 1)·v_{j_1} (d = μ_i − μ_j)
/// seeds the remaining string of length μ_j − 1.
inline std::vector<JordanString> jordan_strings(const ReductionData& rd)
{
  const std::size_t n = rd.filling.n;
  const std::size_t i = static_cast<std::size_t>(rd.witness.i) - 1;
  const std::size_t j = static_cast<std::size_t>(rd.witness.j) - 1;

  const auto unit_vec = [&](std::size_t label) {
    std::vector<Rational> v(n);
    v[label] = 1;
    return v;
  };
  const auto iterate = [&](std::vector<Rational> start, std::size_t expected) {
    JordanString s;
    s.expected_length = expected;
    std::size_t guard = 0;
    while (!is_zero_vector(start)) {
      if (++guard > n + 1) throw std::logic_error("jordan_strings: string does not terminate");
      s.vectors.push_back(start);
      start = row_action(rd.e2, start);
    }
    return s;
  };

  std::vector<JordanString> out;
  for (std::size_t r = 0; r < rd.mu.size(); ++r) {
    const auto labels = rd.filling.row_labels(r);
    if (r == i) {
      out.push_back(iterate(unit_vec(labels[0]), static_cast<std::size_t>(rd.mu[i]) + 1));
    } else if (r == j) {
      if (rd.mu[j] >= 2) {
        const auto row_i = rd.filling.row_labels(i);
        const std::size_t d = static_cast<std::size_t>(rd.mu[i] - rd.mu[j]);
        auto start = unit_vec(row_i[d + 1]); // i_{d+2} in 1-based position
        start[labels[0]] -= Rational(rd.mu[j] - 1);
        out.push_back(iterate(std::move(start), static_cast<std::size_t>(rd.mu[j]) - 1));
      }
    } else {
      out.push_back(iterate(unit_vec(labels[0]), static_cast<std::size_t>(rd.mu[r])));
    }
  }
  return out;
}

/// Checks that the strings really exhibit the Jordan structure of e2:
/// lengths as announced and matching λ, successive vectors related by the
/// action, terminal vectors killed, and the full collection a basis.
inline bool verify_jordan_strings(const ReductionData& rd, const std::vector<JordanString>& strings)
{
  const std::size_t n = rd.filling.n;
  std::vector<int> lengths;
  std::vector<std::vector<Rational>> rows;
  for (const auto& s : strings) {
    if (s.vectors.size() != s.expected_length) return false;
    lengths.push_back(static_cast<int>(s.vectors.size()));
    for (std::size_t t = 0; t < s.vectors.size(); ++t) {
      const auto next = row_action(rd.e2, s.vectors[t]);
      if (t + 1 < s.vectors.size()) {
        if (next != s.vectors[t + 1]) return false;
      } else if (!is_zero_vector(next)) {
        return false;
      }
      rows.push_back(s.vectors[t]);
    }
  }
  if (Partition(lengths) != rd.lambda) return false;
  if (rows.size() != n) return false;
  Mat stack(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) stack(r, c) = rows[r][c];
  return rank(stack) == n;
}

} // namespace slodowy
