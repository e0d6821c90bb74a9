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

} // namespace

TEST_CASE("pyramid validation", "[pyramids]")
{
  REQUIRE_NOTHROW(validate(Pyramid{Partition({3, 2, 2}), {-2, -1, -1}}));
  // Bottom row must be centred.
  REQUIRE_THROWS_AS(validate(Pyramid{Partition({3, 2, 2}), {-1, -1, -1}}), std::invalid_argument);
  // Upper rows must nest inside the rows below.
  REQUIRE_THROWS_AS(validate(Pyramid{Partition({3, 2, 2}), {-2, -3, -1}}), std::invalid_argument);
  REQUIRE_THROWS_AS(validate(Pyramid{Partition({3, 2, 2}), {-2, 1, -1}}), std::invalid_argument);
}

TEST_CASE("right-aligned pyramid offsets", "[pyramids]")
{
  REQUIRE(right_aligned(Partition({3, 2, 2})).offsets == std::vector<int>{-2, 0, 0});
  REQUIRE(right_aligned(Partition({4, 3})).offsets == std::vector<int>{-3, -1});
  for (int n = 1; n <= 6; ++n)
    for (const auto& la : partitions_of(n)) {
      const auto p = right_aligned(la);
      REQUIRE_NOTHROW(validate(p));
      for (std::size_t r = 0; r < la.size(); ++r) REQUIRE(p.F(r) == la[0] - 1);
    }
}

TEST_CASE("pyramid enumeration is exhaustive and ordered", "[pyramids]")
{
  const auto p43 = enumerate_pyramids(Partition({4, 3}));
  REQUIRE(p43.size() == 3);
  REQUIRE(p43.front().offsets == right_aligned(Partition({4, 3})).offsets);

  const auto p21 = enumerate_pyramids(Partition({2, 1}));
  REQUIRE(p21.size() == 3);
  REQUIRE(p21[0].offsets == std::vector<int>{-1, 1});
  REQUIRE(p21[1].offsets == std::vector<int>{-1, 0});
  REQUIRE(p21[2].offsets == std::vector<int>{-1, -1});

  // Two-row shapes admit 2(λ1-λ2)+1 pyramids.
  for (const auto& [a, b] : {std::pair{3, 1}, {5, 2}, {4, 4}})
    REQUIRE(enumerate_pyramids(Partition({a, b})).size() ==
            static_cast<std::size_t>(2 * (a - b) + 1));

  for (int n = 1; n <= 6; ++n)
    for (const auto& la : partitions_of(n)) {
      const auto all = enumerate_pyramids(la);
      REQUIRE(!all.empty());
      REQUIRE(all.front().offsets == right_aligned(la).offsets);
      REQUIRE(is_even(right_aligned(la)));
      for (const auto& p : all) REQUIRE_NOTHROW(validate(p));
      // Descending lexicographic in the offset vectors.
      for (std::size_t k = 0; k + 1 < all.size(); ++k)
        REQUIRE(all[k].offsets > all[k + 1].offsets);
    }
}

TEST_CASE("canonical filling of the symmetric (3,2,2) pyramid", "[pyramids]")
{
  const Pyramid p{Partition({3, 2, 2}), {-2, -1, -1}};
  const auto fl = canonical_filling(p);
  REQUIRE(fl.n == 7);
  // Labels are assigned column by column, bottom-up inside a column.
  REQUIRE(fl.label(0, -2) == 0);
  REQUIRE(fl.label(1, -1) == 1);
  REQUIRE(fl.label(2, -1) == 2);
  REQUIRE(fl.label(0, 0) == 3);
  REQUIRE(fl.label(1, 1) == 4);
  REQUIRE(fl.label(2, 1) == 5);
  REQUIRE(fl.label(0, 2) == 6);
  REQUIRE(fl.row_labels(0) == std::vector<std::size_t>{0, 3, 6});

  const auto [e, g] = nilpotent_and_grading(fl);
  Mat expected(7, 7);
  expected(0, 3) = 1;
  expected(1, 4) = 1;
  expected(2, 5) = 1;
  expected(3, 6) = 1;
  REQUIRE(e == expected);
  REQUIRE(g.h_gamma() ==
          Mat::diagonal({Rational(2), Rational(1), Rational(1), Rational(0), Rational(-1),
                         Rational(-1), Rational(-2)}));

  const std::vector<std::vector<int>> dm = {
      {0, 1, 1, 2, 3, 3, 4},        {-1, 0, 0, 1, 2, 2, 3},    {-1, 0, 0, 1, 2, 2, 3},
      {-2, -1, -1, 0, 1, 1, 2},     {-3, -2, -2, -1, 0, 0, 1}, {-3, -2, -2, -1, 0, 0, 1},
      {-4, -3, -3, -2, -1, -1, 0}};
  REQUIRE(g.degree_matrix() == dm);

  REQUIRE(is_symmetric(p));
  REQUIRE_FALSE(is_even(p));
}

TEST_CASE("pyramid nilpotent has the shape as its Jordan type", "[pyramids]")
{
  for (int n = 1; n <= 6; ++n)
    for (const auto& la : partitions_of(n))
      for (const auto& p : enumerate_pyramids(la)) {
        const auto [e, g] = nilpotent_and_grading(canonical_filling(p));
        REQUIRE(jordan_type(e) == la);
        (void)g;
      }
}

TEST_CASE("centralizer basis of e_P", "[pyramids]")
{
  for (int n = 1; n <= 6; ++n)
    for (const auto& la : partitions_of(n))
      for (const auto& p : enumerate_pyramids(la)) {
        const auto fl = canonical_filling(p);
        const auto [e, g] = nilpotent_and_grading(fl);
        const auto cb = centralizer_basis(fl);
        REQUIRE(cb.size() == static_cast<std::size_t>(sum_dual_squares(la)));
        for (const auto& z : cb) REQUIRE(bracket(e, z).is_zero());
        REQUIRE(make_span(fl.n, cb).dim() == cb.size());
        // Every member is homogeneous for the pyramid grading.
        for (const auto& z : cb) {
          int deg = 0;
          bool found = false;
          for (std::size_t a = 0; a < fl.n && !found; ++a)
            for (std::size_t b = 0; b < fl.n; ++b)
              if (z(a, b) != 0) {
                deg = g.deg(a, b);
                found = true;
                break;
              }
          REQUIRE(bracket(g.h_gamma(), z) == z * Rational(deg));
        }
      }
}

TEST_CASE("single-row centralizer consists of powers of e_P", "[pyramids]")
{
  for (int n = 2; n <= 6; ++n) {
    const auto fl = canonical_filling(right_aligned(Partition({n})));
    const auto [e, g] = nilpotent_and_grading(fl);
    const auto cb = centralizer_basis(fl);
    REQUIRE(cb.size() == static_cast<std::size_t>(n));
    for (unsigned s = 0; s < static_cast<unsigned>(n); ++s)
      REQUIRE(cb[s] == pow_mat(e, s));
    (void)g;
  }
}

TEST_CASE("characteristics of the (2,1) pyramids", "[pyramids]")
{
  const auto all = enumerate_pyramids(Partition({2, 1}));
  const std::vector<std::vector<int>> expected = {{0, 2}, {1, 1}, {0, 2}};
  for (std::size_t k = 0; k < 3; ++k) {
    const auto fl = canonical_filling(all[k]);
    const auto [e, g] = nilpotent_and_grading(fl);
    REQUIRE(characteristic(g) == expected[k]);
    (void)e;
  }
  // The zero orbit carries the zero characteristic, the regular orbit all twos.
  const auto triv = canonical_filling(right_aligned(Partition({1, 1, 1})));
  REQUIRE(characteristic(nilpotent_and_grading(triv).second) == std::vector<int>{0, 0});
  const auto reg = canonical_filling(right_aligned(Partition({3})));
  REQUIRE(characteristic(nilpotent_and_grading(reg).second) == std::vector<int>{2, 2});
}

TEST_CASE("graded basis decomposes sl_n", "[pyramids]")
{
  for (int n = 2; n <= 5; ++n)
    for (const auto& la : partitions_of(n))
      for (const auto& p : enumerate_pyramids(la)) {
        const auto fl = canonical_filling(p);
        const auto g = nilpotent_and_grading(fl).second;
        const auto graded = graded_sl_basis(g);
        std::size_t total = 0;
        const Mat h = g.h_gamma();
        for (const auto& [d, span] : graded) {
          total += span.dim();
          for (const auto& x : span.basis) REQUIRE(bracket(h, x) == x * Rational(d));
        }
        REQUIRE(total == static_cast<std::size_t>(n * n - 1));
      }
}

TEST_CASE("ascii rendering", "[pyramids]")
{
  const auto right21 = canonical_filling(right_aligned(Partition({2, 1})));
  REQUIRE(render_ascii(right21) ==
          "    +---+\n"
          "    | 3 |\n"
          "+---+---+\n"
          "| 1 | 2 |\n"
          "+---+---+\n"
          "  |   |  \n"
          " -1   1  \n");

  const auto sym322 = canonical_filling(Pyramid{Partition({3, 2, 2}), {-2, -1, -1}});
  REQUIRE(render_ascii(sym322) ==
          "  +---+---+  \n"
          "  | 3 | 6 |  \n"
          "  +---+---+  \n"
          "  | 2 | 5 |  \n"
          "+-+-+-+-+---+\n"
          "| 1 | 4 | 7 |\n"
          "+---+---+---+\n"
          "  | | | | |  \n"
          " -2-1 0 1 2  \n");
}
