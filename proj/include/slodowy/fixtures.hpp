#pragma once

#include "slodowy/json_io.hpp"
#include "slodowy/poisson.hpp"
#include "slodowy/stages.hpp"

#include <fstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace slodowy {

#ifndef SLODOWY_DATA_DIR
#define SLODOWY_DATA_DIR "data"
#endif

inline std::string default_fixture_path()
{
  return std::string(SLODOWY_DATA_DIR) + "/sl4_fixture.json";
}

/// A full antisymmetric table {w_α, w_β} over one coordinate ring.
struct BracketTable {
  RingPtr ring;
  std::vector<std::vector<Polynomial>> table;

  const Polynomial& of(const std::string& lhs, const std::string& rhs) const
  {
    return table[ring->index.at(lhs)][ring->index.at(rhs)];
  }
};

/// Extend a coordinate bracket table to arbitrary polynomials by the Leibniz
/// rule: {P, Q} = Σ_{αβ} ∂P/∂w_α ∂Q/∂w_β {w_α, w_β}.
inline Polynomial table_bracket(const BracketTable& t, const Polynomial& p, const Polynomial& q)
{
  const std::size_t k = t.ring->size();
  Polynomial out(0);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      if (t.table[a][b].is_zero()) continue;
      out += p.derivative(a) * q.derivative(b) * t.table[a][b];
    }
  return out;
}

/// The worked 𝔰𝔩₄ pair λ = (3,1) ⋗ μ = (2,2): the Slodowy-slice chart with
/// its Poisson table, the two-stage reduced chart with its table, and the
/// comparison map φ between the two coordinate systems.
struct Sl4Fixture {
  Partition lambda, mu;
  ReductionData reduction;
  ChartedSlice slice_chart;
  BracketTable slice_table;
  SectionChart reduced_chart;
  BracketTable reduced_table;
  std::vector<Polynomial> phi;         // slice variable s ↦ reduced-ring polynomial
  std::vector<Polynomial> phi_inverse; // reduced variable r ↦ slice-ring polynomial
};

namespace detail {

inline std::vector<std::vector<Polynomial>> parse_section(const RingPtr& ring, const Json& j)
{
  std::vector<std::vector<Polynomial>> rows;
  for (const auto& jrow : j) {
    std::vector<Polynomial> row;
    for (const auto& cell : jrow) row.push_back(parse_polynomial(ring, cell.get<std::string>()));
    rows.push_back(std::move(row));
  }
  const std::size_t n = rows.size();
  for (const auto& r : rows)
    if (r.size() != n) throw std::invalid_argument("fixture: section matrix not square");
  return rows;
}

inline BracketTable parse_table(const RingPtr& ring, const Json& j)
{
  const std::size_t k = ring->size();
  BracketTable t;
  t.ring = ring;
  t.table.assign(k, std::vector<Polynomial>(k, Polynomial(0)));
  std::vector<std::vector<bool>> seen(k, std::vector<bool>(k, false));
  for (const auto& entry : j) {
    const std::size_t a = ring->index.at(entry.at("lhs").get<std::string>());
    const std::size_t b = ring->index.at(entry.at("rhs").get<std::string>());
    if (a == b || seen[a][b]) throw std::invalid_argument("fixture: duplicate or diagonal bracket");
    Polynomial v = parse_polynomial(ring, entry.at("value").get<std::string>());
    t.table[b][a] = -v;
    t.table[a][b] = std::move(v);
    seen[a][b] = seen[b][a] = true;
  }
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b)
      if (!seen[a][b]) throw std::invalid_argument("fixture: bracket table incomplete");
  return t;
}

inline MatT<Polynomial> constant_matrix_poly(const Mat& m)
{
  MatT<Polynomial> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Polynomial(m(i, j));
  return out;
}

/// extraction ∘ section must be the identity on the chart.
inline void require_round_trip(const RingPtr& chart,
                               const std::vector<std::vector<Polynomial>>& section,
                               const std::vector<Polynomial>& extraction, const char* who)
{
  const std::size_t n = section.size();
  std::vector<Polynomial> images(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) images[var_index(n, i, j)] = section[i][j];
  for (std::size_t s = 0; s < extraction.size(); ++s)
    if (!(extraction[s].substitute(images) == Polynomial::variable(chart, s)))
      throw std::logic_error(std::string(who) + ": extraction does not invert the section");
}

} // namespace detail

inline Sl4Fixture load_sl4_fixture(const std::string& path = default_fixture_path())
{
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_sl4_fixture: cannot open " + path);
  Json j;
  in >> j;

  Sl4Fixture fx;
  fx.lambda = partition_from_json(j.at("lambda"));
  fx.mu = partition_from_json(j.at("mu"));
  const std::size_t n = static_cast<std::size_t>(fx.lambda.n());
  fx.reduction = stage_data(fx.lambda, fx.mu);
  const RingPtr ambient = matrix_ring(n);

  // ---- slice chart on e + 𝔷(f) for the Jordan triple of λ ----
  {
    const auto& js = j.at("slice");
    std::vector<std::string> vars;
    for (const auto& v : js.at("vars")) vars.push_back(v.get<std::string>());
    ChartedSlice cs;
    cs.triple = jordan_triple(fx.lambda);
    cs.zf = slice(cs.triple).zf;
    cs.ambient = ambient;
    cs.chart = make_ring(vars);
    cs.section = detail::parse_section(cs.chart, js.at("section"));
    for (const auto& ex : js.at("extraction"))
      cs.extraction.push_back(parse_polynomial(ambient, ex.get<std::string>()));
    for (const auto& w : js.at("weights")) cs.weights.push_back(w.get<int>());
    if (cs.extraction.size() != vars.size() || cs.weights.size() != vars.size())
      throw std::invalid_argument("fixture: slice chart sizes disagree");

    if (cs.section_at(std::vector<Rational>(vars.size(), Rational(0))) != cs.triple.e)
      throw std::logic_error("fixture: slice section does not pass through e at 0");
    // the section must stay inside e + 𝔷(f): [f, S(w) − e] = 0 identically
    MatT<Polynomial> smat(n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        smat(a, b) = cs.section[a][b] - Polynomial(cs.triple.e(a, b));
    if (!bracket(detail::constant_matrix_poly(cs.triple.f), smat).is_zero())
      throw std::logic_error("fixture: slice section leaves e + z(f)");
    detail::require_round_trip(cs.chart, cs.section, cs.extraction, "fixture slice");
    // declared Kazhdan weights must match the ambient grading ⟨h⟩
    std::vector<int> ambient_weights(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        ambient_weights[var_index(n, a, b)] =
            2 - static_cast<int>(cs.triple.h(a, a) - cs.triple.h(b, b));
    for (std::size_t s = 0; s < cs.extraction.size(); ++s)
      if (homogeneous_weight(cs.extraction[s], ambient_weights) != cs.weights[s])
        throw std::logic_error("fixture: slice coordinate weight mismatch");

    fx.slice_table = detail::parse_table(cs.chart, js.at("brackets"));
    fx.slice_chart = std::move(cs);
  }

  // ---- reduced chart on the two-stage surface for e2, M2 = I + 𝔪₂ ----
  {
    const auto& jr = j.at("reduced");
    std::vector<std::string> vars;
    for (const auto& v : jr.at("vars")) vars.push_back(v.get<std::string>());
    SectionChart sc;
    sc.e2 = fx.reduction.e2;
    sc.m2 = fx.reduction.m2;
    sc.ambient = ambient;
    sc.chart = make_ring(vars);
    sc.section = detail::parse_section(sc.chart, jr.at("section"));
    for (const auto& ex : jr.at("extraction"))
      sc.extraction.push_back(parse_polynomial(ambient, ex.get<std::string>()));
    for (const auto& w : jr.at("weights")) sc.weights.push_back(w.get<int>());
    if (sc.extraction.size() != vars.size() || sc.weights.size() != vars.size())
      throw std::invalid_argument("fixture: reduced chart sizes disagree");

    if (sc.section_at(std::vector<Rational>(vars.size(), Rational(0))) != sc.e2)
      throw std::logic_error("fixture: reduced section does not pass through e2 at 0");
    // the section must lie on the surface ⟨m, Y⟩ = ⟨m, e2⟩ for all m ∈ 𝔪₂
    for (const auto& m : sc.m2.basis) {
      Polynomial lhs(0);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (m(a, b) != 0) lhs += Polynomial(m(a, b)) * sc.section[b][a];
      if (!(lhs == Polynomial(trace_pair(m, sc.e2))))
        throw std::logic_error("fixture: reduced section leaves the constraint surface");
    }
    detail::require_round_trip(sc.chart, sc.section, sc.extraction, "fixture reduced");
    derive_conditions(sc);

    fx.reduced_table = detail::parse_table(sc.chart, jr.at("brackets"));
    fx.reduced_chart = std::move(sc);
  }

  // ---- φ and its inverse, verified as mutually inverse ring maps ----
  {
    const auto& jp = j.at("phi");
    const auto& jq = j.at("phi_inverse");
    const RingPtr sring = fx.slice_chart.chart, rring = fx.reduced_chart.chart;
    for (const auto& name : sring->names)
      fx.phi.push_back(parse_polynomial(rring, jp.at(name).get<std::string>()));
    for (const auto& name : rring->names)
      fx.phi_inverse.push_back(parse_polynomial(sring, jq.at(name).get<std::string>()));
    for (std::size_t s = 0; s < sring->size(); ++s)
      if (!(fx.phi[s].substitute(fx.phi_inverse) == Polynomial::variable(sring, s)))
        throw std::logic_error("fixture: phi_inverse does not invert phi");
    for (std::size_t r = 0; r < rring->size(); ++r)
      if (!(fx.phi_inverse[r].substitute(fx.phi) == Polynomial::variable(rring, r)))
        throw std::logic_error("fixture: phi does not invert phi_inverse");
  }

  return fx;
}

} // namespace slodowy
