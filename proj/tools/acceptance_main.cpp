// Acceptance gate: ten end-to-end criteria, one PASS/FAIL line each.
// A criterion fails if its predicate is false or its time budget is exceeded.

#include "slodowy/slodowy.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <vector>

using namespace slodowy;

namespace {

int sum_dual_squares(const Partition& la)
{
  int s = 0;
  const auto dual = dual_partition(la);
  for (std::size_t i = 0; i < dual.size(); ++i) s += dual[i] * dual[i];
  return s;
}

bool criterion_hasse()
{
  const auto h = hasse(6);
  if (h.nodes.size() != 11 || h.edges.size() != 12) return false;
  const auto idx = [&h](const char* s) -> std::size_t {
    for (std::size_t k = 0; k < h.nodes.size(); ++k)
      if (h.nodes[k].to_string() == s) return k;
    return h.nodes.size();
  };
  const std::pair<const char*, const char*> expected[] = {
      {"1+1+1+1+1+1", "2+1+1+1+1"}, {"2+1+1+1+1", "2+2+1+1"}, {"2+2+1+1", "3+1+1+1"},
      {"2+2+1+1", "2+2+2"},         {"3+1+1+1", "3+2+1"},     {"2+2+2", "3+2+1"},
      {"3+2+1", "4+1+1"},           {"3+2+1", "3+3"},         {"4+1+1", "4+2"},
      {"3+3", "4+2"},               {"4+2", "5+1"},           {"5+1", "6"}};
  for (const auto& [lo, hi] : expected) {
    bool found = false;
    for (const auto& [a, b] : h.edges)
      if (a == idx(lo) && b == idx(hi)) found = true;
    if (!found) return false;
  }
  // Nodes listed in reverse-lexicographic order.
  for (std::size_t k = 0; k + 1 < h.nodes.size(); ++k)
    if (!(h.nodes[k] > h.nodes[k + 1])) return false;
  return true;
}

bool criterion_covers()
{
  for (int n = 2; n <= 8; ++n) {
    const auto all = partitions_of(n);
    for (const auto& la : all)
      for (const auto& mu : all) {
        if (la == mu) continue;
        bool brute = dominates(la, mu);
        if (brute)
          for (const auto& nu : all)
            if (nu != la && nu != mu && dominates(la, nu) && dominates(nu, mu)) {
              brute = false;
              break;
            }
        if (covers(la, mu).has_value() != brute) return false;
      }
  }
  const auto expect = [](const Partition& la, const Partition& mu, int i, int j) {
    const auto w = covers(la, mu);
    return w.has_value() && w->i == i && w->j == j;
  };
  return expect(Partition({3, 1}), Partition({2, 2}), 1, 2) &&
         expect(Partition({3, 3}), Partition({3, 2, 1}), 2, 3) &&
         !covers(Partition({4, 3, 1}), Partition({3, 3, 2})).has_value() &&
         expect(Partition({2, 1}), Partition({1, 1, 1}), 1, 3) &&
         expect(Partition({4, 1}), Partition({3, 2}), 1, 2);
}

bool criterion_pyramids()
{
  if (enumerate_pyramids(Partition({4, 3})).size() != 3) return false;

  for (int n = 2; n <= 6; ++n)
    for (const auto& la : partitions_of(n))
      for (const auto& p : enumerate_pyramids(la)) {
        const auto fl = canonical_filling(p);
        const auto [e, g] = nilpotent_and_grading(fl);
        if (!check_good_grading(e, g).good()) return false;
      }

  const Pyramid sym{Partition({3, 2, 2}), {-2, -1, -1}};
  const auto fl = canonical_filling(sym);
  const auto [e, g] = nilpotent_and_grading(fl);
  if (to_string(e) !=
      "[0 0 0 1 0 0 0\n 0 0 0 0 1 0 0\n 0 0 0 0 0 1 0\n 0 0 0 0 0 0 1\n"
      " 0 0 0 0 0 0 0\n 0 0 0 0 0 0 0\n 0 0 0 0 0 0 0]")
    return false;
  std::string dm;
  for (const auto& row : g.degree_matrix()) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) dm += " ";
      dm += std::to_string(row[j]);
    }
    dm += "\n";
  }
  return dm ==
         "0 1 1 2 3 3 4\n-1 0 0 1 2 2 3\n-1 0 0 1 2 2 3\n-2 -1 -1 0 1 1 2\n"
         "-3 -2 -2 -1 0 0 1\n-3 -2 -2 -1 0 0 1\n-4 -3 -3 -2 -1 -1 0\n";
}

bool criterion_centralizers()
{
  for (int n = 2; n <= 6; ++n)
    for (const auto& la : partitions_of(n))
      for (const auto& p : enumerate_pyramids(la)) {
        const auto fl = canonical_filling(p);
        const auto [e, g] = nilpotent_and_grading(fl);
        const auto cb = centralizer_basis(fl);
        if (cb.size() != static_cast<std::size_t>(sum_dual_squares(la))) return false;
        for (const auto& z : cb)
          if (!bracket(e, z).is_zero()) return false;
        if (make_span(fl.n, cb).dim() != cb.size()) return false;
        (void)g;
      }
  // Block-tower count: n + 2 Σ (i-1) λ_i = Σ (λ*_i)².
  for (int n = 1; n <= 30; ++n)
    for (const auto& la : partitions_of(n)) {
      long long lhs = n;
      for (std::size_t i = 0; i < la.size(); ++i) lhs += 2LL * static_cast<long long>(i) * la[i];
      if (lhs != sum_dual_squares(la)) return false;
    }
  return true;
}

bool criterion_triples()
{
  for (int n = 1; n <= 7; ++n)
    for (const auto& la : partitions_of(n)) {
      try {
        require_sl2_relations(jordan_triple(la), "acceptance");
      } catch (const std::exception&) {
        return false;
      }
      if (n >= 2)
        for (const auto& p : enumerate_pyramids(la)) {
          try {
            require_sl2_relations(graded_triple(canonical_filling(p)), "acceptance");
          } catch (const std::exception&) {
            return false;
          }
        }
    }

  for (int n = 2; n <= 6; ++n)
    for (const auto& la : partitions_of(n)) {
      const auto rep = slice_checks(jordan_triple(la));
      if (!rep.ok()) return false;
      for (const auto& [w, span] : rep.weight_spaces)
        if (w > 0 && span.dim() > 0) return false;
    }

  // The sl3 minimal slice is spanned by the expected four-element family.
  const auto rep = slice_checks(jordan_triple(Partition({2, 1})));
  const auto family = make_span(
      3, {Mat::diagonal({Rational(1), Rational(1), Rational(-2)}), Mat::unit(3, 1, 0),
          Mat::unit(3, 2, 0), Mat::unit(3, 1, 2)});
  if (rep.chart.zf.dim() != 4 || family.dim() != 4) return false;
  for (const auto& x : family.basis)
    if (!span_contains(rep.chart.zf, x)) return false;
  return true;
}

bool criterion_premet()
{
  for (int n = 2; n <= 6; ++n)
    for (const auto& la : partitions_of(n))
      for (const auto& p : enumerate_pyramids(la)) {
        const auto fl = canonical_filling(p);
        const auto [e, g] = nilpotent_and_grading(fl);
        const auto pd = premet(fl);
        if (2 * pd.m.dim() != static_cast<std::size_t>(n * n - sum_dual_squares(la)))
          return false;
        if (!chi_vanishes_on_brackets(pd)) return false;
        // Even pyramids have no degree −1 part at all.
        if (is_even(p) && symplectic_lagrangian(e, g).g_minus1.dim() != 0) return false;
      }
  return true;
}

bool criterion_stages()
{
  for (int n = 2; n <= 7; ++n)
    for (const auto& la : partitions_of(n))
      for (const auto& mu : partitions_of(n)) {
        if (!covers(la, mu).has_value()) continue;
        const auto rd = stage_data(la, mu);
        if (jordan_type(rd.e2) != la) return false;
        if (!verify_sr(rd).ok()) return false;
        if (!premet_conditions(rd.e2, rd.m2).ok()) return false;
        if (!verify_jordan_strings(rd, jordan_strings(rd))) return false;
      }

  // Worked stages reproduce the expected matrices.
  const auto rd1 = stage_data(Partition({3}), Partition({2, 1}));
  if (!(rd1.e2 == Mat::unit(3, 0, 1) + Mat::unit(3, 1, 2))) return false;
  if (rd1.k_gens.size() != 1 || !(rd1.k_gens[0] == Mat::unit(3, 2, 1))) return false;

  const auto rd2 = stage_data(Partition({3, 1}), Partition({2, 2}));
  if (!(rd2.e2 == Mat::unit(4, 0, 2) + Mat::unit(4, 1, 3) + Mat::unit(4, 0, 1) + Mat::unit(4, 2, 3)))
    return false;
  if (rd2.k_gens.size() != 1 || !(rd2.k_gens[0] == Mat::unit(4, 1, 0) + Mat::unit(4, 3, 2)))
    return false;

  const auto rd3 = stage_data(Partition({2, 1}), Partition({1, 1, 1}));
  if (!(rd3.e2 == Mat::unit(3, 0, 2))) return false;
  if (rd3.k_gens.size() != 2) return false;
  if (!(rd3.k_gens[0] == Mat::unit(3, 1, 0) + Mat::unit(3, 2, 1))) return false;
  if (!(rd3.k_gens[1] == Mat::unit(3, 2, 0))) return false;
  return true;
}

bool criterion_poisson_core()
{
  Rng rng(77001);
  // Jacobi, symbolically on gl_2 and pointwise on gl_3.
  const auto r2 = matrix_ring(2);
  for (int t = 0; t < 5; ++t) {
    const auto f = rng.random_polynomial(r2, 2, 3);
    const auto g = rng.random_polynomial(r2, 2, 3);
    const auto h = rng.random_polynomial(r2, 2, 3);
    const Polynomial jac = lie_poisson(lie_poisson(f, g), h) +
                           lie_poisson(lie_poisson(g, h), f) +
                           lie_poisson(lie_poisson(h, f), g);
    if (!jac.is_zero()) return false;
  }
  const auto r3 = matrix_ring(3);
  for (int t = 0; t < 10; ++t) {
    const auto f = rng.random_polynomial(r3, 3, 4);
    const auto g = rng.random_polynomial(r3, 3, 4);
    const auto h = rng.random_polynomial(r3, 3, 4);
    const auto pt = rng.random_sl(3);
    if (lie_poisson_at(lie_poisson(f, g), h, pt) + lie_poisson_at(lie_poisson(g, h), f, pt) +
            lie_poisson_at(lie_poisson(h, f), g, pt) !=
        0)
      return false;
  }

  // Poisson tensor rank at e_P equals the orbit dimension.
  for (int n = 2; n <= 4; ++n)
    for (const auto& la : partitions_of(n)) {
      const Mat e = nilpotent_and_grading(canonical_filling(right_aligned(la))).first;
      const std::size_t nn = static_cast<std::size_t>(n);
      Mat tensor(nn * nn, nn * nn);
      for (std::size_t i = 0; i < nn; ++i)
        for (std::size_t j = 0; j < nn; ++j)
          for (std::size_t k = 0; k < nn; ++k)
            for (std::size_t l = 0; l < nn; ++l) {
              Rational v(0);
              if (i == l) v += e(k, j);
              if (j == k) v -= e(i, l);
              tensor(i * nn + j, k * nn + l) = v;
            }
      if (rank(tensor) != static_cast<std::size_t>(n * n - sum_dual_squares(la))) return false;
    }

  // Regular slices carry the zero chart bracket.
  for (int n = 2; n <= 3; ++n) {
    const auto cs = linear_chart(jordan_triple(Partition({n})));
    for (std::size_t i = 0; i < cs.weights.size(); ++i)
      for (std::size_t j = 0; j < cs.weights.size(); ++j)
        if (!dirac_bracket_poly(cs, Polynomial::variable(cs.chart, i),
                                Polynomial::variable(cs.chart, j), rng)
                 .is_zero())
          return false;
  }
  return true;
}

bool criterion_sl4_tables()
{
  const auto fx = load_sl4_fixture();
  const Rational sigma(8);
  Rng rng(77002);

  {
    const auto& cs = fx.slice_chart;
    const auto& names = cs.chart->names;
    for (std::size_t i = 0; i < names.size(); ++i)
      for (std::size_t j = i + 1; j < names.size(); ++j) {
        const auto eng = dirac_bracket_poly(cs, Polynomial::variable(cs.chart, i),
                                            Polynomial::variable(cs.chart, j), rng);
        if (!(eng == Polynomial(sigma) * fx.slice_table.of(names[i], names[j]))) return false;
      }
  }

  {
    const auto& sc = fx.reduced_chart;
    const auto& names = sc.chart->names;
    const auto var = [&](const std::string& nm) { return Polynomial::variable(sc.chart, nm); };
    const Polynomial corrected = Polynomial(Rational(-1, 4)) *
                                 (var("z") + Polynomial(2) * var("x") * var("y") +
                                  (var("u") + var("v")) * var("y"));
    for (int t = 0; t < 3; ++t) {
      const auto w = rng.random_point(names.size());
      const Mat p = sc.section_at(w);
      for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t j = i + 1; j < names.size(); ++j) {
          const Rational eng = reduced_bracket_at(sc, var(names[i]), var(names[j]), p);
          const Rational target =
              (names[i] == "u" && names[j] == "v")
                  ? sigma * corrected.eval<Rational>(w)
                  : sigma * fx.reduced_table.of(names[i], names[j]).eval<Rational>(w);
          if (eng != target) return false;
        }
    }
  }

  {
    const auto& snames = fx.slice_chart.chart->names;
    const auto rring = fx.reduced_chart.chart;
    const auto var = [&](const std::string& nm) { return Polynomial::variable(rring, nm); };
    const Polynomial defect =
        Polynomial(Rational(1, 4)) * var("y") * (var("x") - var("u") - var("v"));
    for (std::size_t i = 0; i < snames.size(); ++i)
      for (std::size_t j = i + 1; j < snames.size(); ++j) {
        const Polynomial lhs = fx.slice_table.of(snames[i], snames[j]).substitute(fx.phi);
        const Polynomial rhs = table_bracket(fx.reduced_table, fx.phi[i], fx.phi[j]);
        if (snames[i] == "d" && snames[j] == "f") {
          if (!(rhs - lhs == defect)) return false;
        } else if (!(lhs == rhs)) {
          return false;
        }
      }
  }

  {
    const auto& sc = fx.reduced_chart;
    const auto& cs = fx.slice_chart;
    const auto sl = make_span(4, sl_basis(4));
    const auto img =
        image_of_operator([&cs](const Mat& x) { return bracket(cs.triple.f, x); }, sl);
    const auto rvar = [&](const char* nm) {
      return Polynomial::variable(sc.chart, std::string(nm));
    };
    const char* pairs[5][2] = {{"u", "y"}, {"v", "y"}, {"u", "z"}, {"v", "z"}, {"u", "v"}};
    for (int t = 0; t < 5; ++t) {
      const auto w = rng.random_point(5);
      const Mat p = sc.section_at(w);
      std::vector<Rational> a(cs.chart->size());
      for (std::size_t s = 0; s < a.size(); ++s) a[s] = fx.phi[s].eval<Rational>(w);
      const auto ctx = make_dirac(img.basis, cs.section_at(a));
      if (!ctx) return false;
      for (const auto& pr : pairs) {
        const Rational lhs = reduced_bracket_at(sc, rvar(pr[0]), rvar(pr[1]), p);
        const Polynomial fs = cs.to_ambient(fx.phi_inverse[sc.chart->index.at(pr[0])]);
        const Polynomial gs = cs.to_ambient(fx.phi_inverse[sc.chart->index.at(pr[1])]);
        if (lhs != dirac_bracket_at(*ctx, fs, gs)) return false;
      }
    }
  }
  return true;
}

bool criterion_canonicalize()
{
  const auto fx = load_sl4_fixture();
  const auto& sc = fx.reduced_chart;
  Rng rng(77003);
  for (int trial = 0; trial < 20; ++trial) {
    const auto w = rng.random_point(sc.chart->size());
    const Mat s = sc.section_at(w);
    Mat x(4, 4);
    for (const auto& b : sc.m2.basis) x += b * rng.small_rational();
    const Mat grp = Mat::identity(4) + x;
    const auto gi = inverse(grp);
    if (!gi) return false;
    const auto can = canonicalize<Rational>(sc, grp * s * *gi, /*strict=*/true);
    if (!(can.coords == w) || !(can.canonical == s)) return false;
  }
  const auto at_e2 = canonicalize<Rational>(sc, fx.reduction.e2, /*strict=*/true);
  if (!(at_e2.group == Mat::identity(4))) return false;
  for (const auto& c : at_e2.coords)
    if (c != 0) return false;
  return true;
}

} // namespace

int main()
{
  struct Criterion {
    const char* name;
    double budget_seconds;
    std::function<bool()> run;
  };
  const std::vector<Criterion> criteria = {
      {"dominance Hasse diagram for n = 6", 1.0, criterion_hasse},
      {"cover relation with canonical witnesses", 10.0, criterion_covers},
      {"pyramid enumeration and good gradings", 30.0, criterion_pyramids},
      {"centralizer bases and block-tower counts", 30.0, criterion_centralizers},
      {"sl2 triples and Slodowy slices", 30.0, criterion_triples},
      {"Premet subalgebras", 30.0, criterion_premet},
      {"reduction stages SR1-SR4 with Jordan strings", 60.0, criterion_stages},
      {"Lie-Poisson engine and Dirac reduction", 60.0, criterion_poisson_core},
      {"sl4 bracket tables, phi transport", 300.0, criterion_sl4_tables},
      {"canonicalisation round trips", 30.0, criterion_canonicalize},
  };

  bool all_ok = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = criteria[k].run();
    } catch (const std::exception& e) {
      std::fprintf(stderr, "criterion %zu threw: %s\n", k + 1, e.what());
      ok = false;
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > criteria[k].budget_seconds) ok = false;
    all_ok = all_ok && ok;
    std::printf("%s  [%2zu] %s  (%.2fs, budget %.0fs)\n", ok ? "PASS" : "FAIL", k + 1,
                criteria[k].name, secs, criteria[k].budget_seconds);
  }
  return all_ok ? 0 : 1;
}
