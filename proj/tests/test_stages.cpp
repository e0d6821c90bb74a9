#include <catch2/catch_amalgamated.hpp>

#include "slodowy/slodowy.hpp"

#include <algorithm>

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

TEST_CASE("stage_data requires an adjacent pair", "[stages]")
{
  REQUIRE_THROWS_AS(stage_data(Partition({4, 3, 1}), Partition({3, 3, 2})), std::invalid_argument);
  // Comparable but not adjacent.
  REQUIRE_THROWS_AS(stage_data(Partition({3, 1}), Partition({1, 1, 1, 1})), std::invalid_argument);
  REQUIRE_THROWS_AS(stage_data(Partition({2, 2}), Partition({2, 2})), std::invalid_argument);
  REQUIRE_THROWS_AS(stage_data(Partition({2, 2}), Partition({3, 1})), std::invalid_argument);
}

TEST_CASE("worked example: (3) over (2,1)", "[stages]")
{
  const auto rd = stage_data(Partition({3}), Partition({2, 1}));
  REQUIRE(rd.pyramid.offsets == right_aligned(Partition({2, 1})).offsets);
  REQUIRE(rd.e1 == Mat::unit(3, 0, 1)); // e_P of the right-aligned (2,1) pyramid
  REQUIRE(rd.e2 == Mat::unit(3, 0, 1) + Mat::unit(3, 1, 2));
  REQUIRE(rd.k_gens.size() == 1);
  REQUIRE(rd.k_gens.front() == Mat::unit(3, 2, 1));
  REQUIRE(jordan_type(rd.e2) == Partition({3}));
}

TEST_CASE("worked example: (3,1) over (2,2)", "[stages]")
{
  const auto rd = stage_data(Partition({3, 1}), Partition({2, 2}));
  REQUIRE(rd.e1 == Mat::unit(4, 0, 2) + Mat::unit(4, 1, 3));
  REQUIRE(rd.e2 == rd.e1 + Mat::unit(4, 0, 1) + Mat::unit(4, 2, 3));
  REQUIRE(rd.k_gens.size() == 1);
  REQUIRE(rd.k_gens.front() == Mat::unit(4, 1, 0) + Mat::unit(4, 3, 2));
  REQUIRE(jordan_type(rd.e2) == Partition({3, 1}));

  // m1 consists of the strictly-negative-degree part below the diagonal blocks.
  const std::vector<Mat> m1 = {Mat::unit(4, 2, 0), Mat::unit(4, 2, 1), Mat::unit(4, 3, 0),
                               Mat::unit(4, 3, 1)};
  REQUIRE(rd.m1.dim() == 4);
  for (const auto& x : m1) REQUIRE(span_contains(rd.m1, x));
}

TEST_CASE("worked example: (2,1) over the zero orbit", "[stages]")
{
  const auto rd = stage_data(Partition({2, 1}), Partition({1, 1, 1}));
  REQUIRE(rd.e1.is_zero());
  REQUIRE(rd.e2 == Mat::unit(3, 0, 2));
  REQUIRE(rd.k_gens.size() == 2);
  REQUIRE(rd.k_gens[0] == Mat::unit(3, 1, 0) + Mat::unit(3, 2, 1));
  REQUIRE(rd.k_gens[1] == Mat::unit(3, 2, 0));
  REQUIRE(rd.m1.dim() == 0);
  REQUIRE(rd.m2.dim() == 2);
}

TEST_CASE("ladder generators multiply like a truncated polynomial algebra", "[stages]")
{
  for (int n = 2; n <= 7; ++n)
    for (const auto& la : partitions_of(n))
      for (const auto& mu : partitions_of(n)) {
        if (!covers(la, mu).has_value()) continue;
        const auto rd = stage_data(la, mu);
        const std::size_t spread =
            static_cast<std::size_t>(rd.witness.j) - static_cast<std::size_t>(rd.witness.i);
        REQUIRE(rd.k_gens.size() == spread);
        REQUIRE(rd.k.dim() == spread);
        for (std::size_t a = 0; a < spread; ++a)
          for (std::size_t b = 0; b < spread; ++b) {
            const Mat prod = rd.k_gens[a] * rd.k_gens[b];
            if (a + b + 2 <= spread) {
              REQUIRE(prod == rd.k_gens[a + b + 1]);
            } else {
              REQUIRE(prod.is_zero());
            }
          }
      }
}

TEST_CASE("reduction data passes SR1-SR4 for every adjacent pair", "[stages]")
{
  for (int n = 2; n <= 7; ++n)
    for (const auto& la : partitions_of(n))
      for (const auto& mu : partitions_of(n)) {
        if (!covers(la, mu).has_value()) continue;
        INFO(la.to_string() + " over " + mu.to_string());
        const auto rd = stage_data(la, mu);

        REQUIRE(jordan_type(rd.e2) == la);
        REQUIRE(rd.m1.dim() ==
                static_cast<std::size_t>(n * n - sum_dual_squares(mu)) / 2);
        REQUIRE(rd.m2.dim() == rd.m1.dim() + rd.k.dim());

        const auto sr = verify_sr(rd);
        REQUIRE(sr.sr1_ideal);
        REQUIRE(sr.sr1_subalgebra);
        REQUIRE(sr.sr1_abelian);
        REQUIRE(sr.sr1_direct);
        REQUIRE(sr.sr2_iso);
        REQUIRE(sr.sr2_match);
        REQUIRE(sr.sr3_chi1);
        REQUIRE(sr.sr3_chi2);
        REQUIRE(sr.sr4_surjective);

        const auto pc = premet_conditions(rd.e2, rd.m2);
        REQUIRE(pc.isotropic);
        REQUIRE(pc.transversal);
        REQUIRE(pc.half_dimension);
      }
}

TEST_CASE("Jordan strings exhibit the larger type", "[stages]")
{
  for (int n = 2; n <= 7; ++n)
    for (const auto& la : partitions_of(n))
      for (const auto& mu : partitions_of(n)) {
        if (!covers(la, mu).has_value()) continue;
        INFO(la.to_string() + " over " + mu.to_string());
        const auto rd = stage_data(la, mu);
        const auto strings = jordan_strings(rd);
        REQUIRE(verify_jordan_strings(rd, strings));

        std::vector<int> lengths;
        for (const auto& s : strings) lengths.push_back(static_cast<int>(s.vectors.size()));
        std::sort(lengths.begin(), lengths.end(), std::greater<>());
        REQUIRE(Partition(lengths) == la);
      }
}

TEST_CASE("worked strings: (4,1) over (3,2)", "[stages]")
{
  const auto rd = stage_data(Partition({4, 1}), Partition({3, 2}));
  const auto strings = jordan_strings(rd);
  REQUIRE(verify_jordan_strings(rd, strings));
  std::vector<std::size_t> lengths;
  for (const auto& s : strings) lengths.push_back(s.vectors.size());
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  REQUIRE(lengths == std::vector<std::size_t>{4, 1});

  // Every string steps by the row action of e2 and dies at the end.
  for (const auto& s : strings) {
    for (std::size_t k = 0; k + 1 < s.vectors.size(); ++k)
      REQUIRE(row_action(rd.e2, s.vectors[k]) == s.vectors[k + 1]);
    REQUIRE(is_zero_vector(row_action(rd.e2, s.vectors.back())));
  }
}
