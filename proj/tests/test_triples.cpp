#include <catch2/catch_amalgamated.hpp>

#include "slodowy/slodowy.hpp"

using namespace slodowy;

namespace {

int sum_dual_squares(const Partition& la)
{
  int s = 0;
  const auto dual = dual_partition(la);
  for (std::size_t i = 0; i < dual.size(); ++i) s += dual[i] * dual[i];
  return s;
}

bool trivial_grading(const Grading& g)
{
  for (std::size_t a = 0; a < g.n(); ++a)
    if (g.col_of[a] != g.col_of[0]) return false;
  return true;
}

} // namespace

TEST_CASE("jordan_triple satisfies the sl2 relations", "[triples]")
{
  for (int n = 1; n <= 7; ++n)
    for (const auto& la : partitions_of(n)) {
      const auto t = jordan_triple(la);
      REQUIRE_NOTHROW(require_sl2_relations(t, "jordan_triple"));
      REQUIRE(jordan_type(t.e) == la);
      REQUIRE(t.h.trace() == 0);
    }
}

TEST_CASE("graded_triple satisfies the sl2 relations with f in degree -2", "[triples]")
{
  for (int n = 2; n <= 6; ++n)
    for (const auto& la : partitions_of(n))
      for (const auto& p : enumerate_pyramids(la)) {
        const auto fl = canonical_filling(p);
        const auto t = graded_triple(fl);
        REQUIRE_NOTHROW(require_sl2_relations(t, "graded_triple"));
        const auto g = nilpotent_and_grading(fl).second;
        REQUIRE(t.e == degree_component(g, t.e, 2));
        REQUIRE(t.f == degree_component(g, t.f, -2));
      }

  const auto t21 = graded_triple(canonical_filling(right_aligned(Partition({2, 1}))));
  REQUIRE(t21.h == Mat::diagonal({Rational(1), Rational(-1), Rational(0)}));
  REQUIRE(t21.f == Mat::unit(3, 1, 0));
}

TEST_CASE("pyramid gradings are good for their nilpotent", "[triples]")
{
  for (int n = 2; n <= 6; ++n)
    for (const auto& la : partitions_of(n))
      for (const auto& p : enumerate_pyramids(la)) {
        const auto fl = canonical_filling(p);
        const auto [e, g] = nilpotent_and_grading(fl);
        const auto rep = check_good_grading(e, g);
        INFO(la.to_string());
        REQUIRE(rep.good());
      }
}

TEST_CASE("injectivity below and surjectivity above are equivalent", "[triples]")
{
  // For any homogeneous degree-2 element, condition two holds iff condition
  // three does; exercised on deliberately mismatched nilpotent/grading pairs.
  for (int n = 2; n <= 5; ++n) {
    std::vector<Filling> fillings;
    for (const auto& la : partitions_of(n))
      for (const auto& p : enumerate_pyramids(la)) fillings.push_back(canonical_filling(p));
    for (const auto& fa : fillings)
      for (const auto& fb : fillings) {
        const Mat e = nilpotent_and_grading(fa).first;
        const auto g = nilpotent_and_grading(fb).second;
        const Mat e2 = degree_component(g, e, 2); // force condition one
        const auto rep = check_good_grading(e2, g);
        REQUIRE(rep.gg2 == rep.gg3);
      }
  }
}

TEST_CASE("the zero nilpotent is good only for the trivial grading", "[triples]")
{
  for (int n = 2; n <= 4; ++n)
    for (const auto& la : partitions_of(n))
      for (const auto& p : enumerate_pyramids(la)) {
        const auto g = nilpotent_and_grading(canonical_filling(p)).second;
        REQUIRE(check_good_grading(Mat(g.n(), g.n()), g).good() == trivial_grading(g));
      }
}

TEST_CASE("slice checks pass for every Jordan triple", "[triples]")
{
  for (int n = 2; n <= 6; ++n)
    for (const auto& la : partitions_of(n)) {
      const auto rep = slice_checks(jordan_triple(la));
      INFO(la.to_string());
      REQUIRE(rep.transversal);
      REQUIRE(rep.graded);
      REQUIRE(rep.contracting);
      REQUIRE(rep.chart.zf.dim() == static_cast<std::size_t>(sum_dual_squares(la) - 1));
    }
}

TEST_CASE("minimal nilpotent slice in sl3", "[triples]")
{
  const auto rep = slice_checks(jordan_triple(Partition({2, 1})));
  REQUIRE(rep.chart.zf.dim() == 4);

  const auto dim_at = [&rep](int w) {
    const auto it = rep.weight_spaces.find(w);
    return it == rep.weight_spaces.end() ? std::size_t{0} : it->second.dim();
  };
  REQUIRE(dim_at(-2) == 1);
  REQUIRE(dim_at(-1) == 2);
  REQUIRE(dim_at(0) == 1);

  const auto family = make_span(
      3, {Mat::diagonal({Rational(1), Rational(1), Rational(-2)}), Mat::unit(3, 1, 0),
          Mat::unit(3, 2, 0), Mat::unit(3, 1, 2)});
  REQUIRE(family.dim() == 4);
  for (const auto& x : family.basis) REQUIRE(span_contains(rep.chart.zf, x));
  for (const auto& x : rep.chart.zf.basis) REQUIRE(span_contains(family, x));
}

TEST_CASE("Lagrangian extraction on the symmetric (2,1) pyramid", "[triples]")
{
  const Pyramid p{Partition({2, 1}), {-1, 0}};
  const auto fl = canonical_filling(p);
  const auto [e, g] = nilpotent_and_grading(fl);
  const auto sd = symplectic_lagrangian(e, g);

  REQUIRE(sd.g_minus1.dim() == 2);
  REQUIRE(sd.gram == Mat::from_rows({{0, -1}, {1, 0}}));
  REQUIRE(sd.lagrangian.dim() == 1);
  REQUIRE(sd.lagrangian.basis.front() == Mat::unit(3, 1, 0));

  // ω vanishes identically for e = 0, so no Lagrangian complement exists.
  REQUIRE_THROWS_AS(symplectic_lagrangian(Mat(3, 3), g), std::runtime_error);
}

TEST_CASE("Darboux pairs diagonalise the form on g_{-1}", "[triples]")
{
  for (int n = 2; n <= 6; ++n)
    for (const auto& la : partitions_of(n))
      for (const auto& p : enumerate_pyramids(la)) {
        const auto fl = canonical_filling(p);
        const auto [e, g] = nilpotent_and_grading(fl);
        const auto sd = symplectic_lagrangian(e, g);
        const auto omega = [&](const Mat& x, const Mat& y) {
          return trace_pair(e, bracket(x, y));
        };
        REQUIRE(sd.darboux_u.size() == sd.darboux_v.size());
        REQUIRE(2 * sd.darboux_u.size() == sd.g_minus1.dim());
        for (std::size_t i = 0; i < sd.darboux_u.size(); ++i)
          for (std::size_t j = 0; j < sd.darboux_u.size(); ++j) {
            REQUIRE(omega(sd.darboux_u[i], sd.darboux_u[j]) == 0);
            REQUIRE(omega(sd.darboux_v[i], sd.darboux_v[j]) == 0);
            REQUIRE(omega(sd.darboux_u[i], sd.darboux_v[j]) == (i == j ? Rational(1) : Rational(0)));
          }
      }
}

TEST_CASE("Premet subalgebras have half the orbit dimension", "[triples]")
{
  for (int n = 2; n <= 6; ++n)
    for (const auto& la : partitions_of(n))
      for (const auto& p : enumerate_pyramids(la)) {
        const auto fl = canonical_filling(p);
        const auto pd = premet(fl);
        const int orbit_dim = n * n - sum_dual_squares(la);
        REQUIRE(2 * pd.m.dim() == static_cast<std::size_t>(orbit_dim));
        REQUIRE(chi_vanishes_on_brackets(pd));
        for (std::size_t i = 0; i < pd.m.dim(); ++i)
          REQUIRE(pd.chi[i] == trace_pair(pd.e, pd.m.basis[i]));
      }
}
