#include <catch2/catch_amalgamated.hpp>

#include "slodowy/slodowy.hpp"

using namespace slodowy;

namespace {

// Independent row-reduction rank, kept deliberately separate from the library
// implementation so the two can disagree.
std::size_t oracle_rank(Mat a)
{
  std::size_t rk = 0;
  for (std::size_t col = 0; col < a.cols() && rk < a.rows(); ++col) {
    std::size_t piv = rk;
    while (piv < a.rows() && a(piv, col) == 0) ++piv;
    if (piv == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(rk, j), a(piv, j));
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == rk || a(r, col) == 0) continue;
      const Rational s = a(r, col) / a(rk, col);
      for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) = a(r, j) - s * a(rk, j);
    }
    ++rk;
  }
  return rk;
}

Mat random_mat(Rng& rng, std::size_t rows, std::size_t cols)
{
  Mat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.small_rational();
  return m;
}

// Unitriangular, hence invertible over the rationals.
Mat random_unitriangular(Rng& rng, std::size_t n)
{
  Mat m = Mat::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) m(i, j) = rng.small_rational();
  return m;
}

} // namespace

TEST_CASE("rational strings round-trip", "[exactcore]")
{
  for (const char* s : {"0", "1", "-1", "3/4", "-22/7", "123456789123456789/2"}) {
    REQUIRE(to_string(rational_from_string(s)) == s);
  }
  REQUIRE(rational_from_string("2/4") == Rational(1, 2));
  REQUIRE(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
}

TEST_CASE("dual numbers differentiate products and quotients", "[exactcore]")
{
  using D = Dual<Rational>;
  const D x(Rational(5), Rational(1)); // x = 5, dx = 1
  const D y(Rational(3), Rational(0));

  const D p = x * x * y;      // d/dx (x^2 y) = 2xy = 30
  REQUIRE(p.val == Rational(75));
  REQUIRE(p.eps == Rational(30));

  const D q = y / x;          // d/dx (y/x) = -y/x^2 = -3/25
  REQUIRE(q.val == Rational(3, 5));
  REQUIRE(q.eps == Rational(-3, 25));
}

TEST_CASE("matrix units multiply by the delta rule", "[exactcore]")
{
  const std::size_t n = 3;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          const Mat lhs = Mat::unit(n, a, b) * Mat::unit(n, c, d);
          const Mat rhs = (b == c) ? Mat::unit(n, a, d) : Mat(n, n);
          REQUIRE(lhs == rhs);
        }
}

TEST_CASE("bracket is antisymmetric and satisfies Jacobi", "[exactcore]")
{
  Rng rng(20240001);
  for (int t = 0; t < 20; ++t) {
    const Mat x = random_mat(rng, 4, 4), y = random_mat(rng, 4, 4), z = random_mat(rng, 4, 4);
    REQUIRE(bracket(x, y) == bracket(y, x) * Rational(-1));
    const Mat j = bracket(bracket(x, y), z) + bracket(bracket(y, z), x) + bracket(bracket(z, x), y);
    REQUIRE(j.is_zero());
  }
}

TEST_CASE("trace form is nondegenerate on sl_n", "[exactcore]")
{
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto basis = sl_basis(n);
    Mat gram(basis.size(), basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j) gram(i, j) = trace_pair(basis[i], basis[j]);
    REQUIRE(rank(gram) == n * n - 1);
  }
}

TEST_CASE("Killing form is 2n times the trace form", "[exactcore]")
{
  // On sl_2, K(h, h) = 8 for h = diag(1, -1).
  const auto killing = [](std::size_t n, const Mat& x, const Mat& y) {
    const auto sl = make_span(n, sl_basis(n));
    const Mat adx = operator_matrix([&x](const Mat& m) { return bracket(x, m); }, sl, sl);
    const Mat ady = operator_matrix([&y](const Mat& m) { return bracket(y, m); }, sl, sl);
    return (adx * ady).trace();
  };
  const Mat h = Mat::from_rows({{1, 0}, {0, -1}});
  REQUIRE(killing(2, h, h) == Rational(8));

  Rng rng(20240002);
  for (int t = 0; t < 3; ++t) {
    const Mat x = rng.random_sl(3), y = rng.random_sl(3);
    REQUIRE(killing(3, x, y) == Rational(6) * trace_pair(x, y));
  }
}

TEST_CASE("rref rank agrees with an independent eliminator", "[exactcore]")
{
  Rng rng(20240003);
  for (int t = 0; t < 50; ++t) {
    // Products of thin factors hit every rank, not just full rank.
    const std::size_t k = static_cast<std::size_t>(rng.int_in(0, 8));
    const Mat a = (k == 0) ? Mat(8, 12) : random_mat(rng, 8, k) * random_mat(rng, k, 12);
    const std::size_t r = rank(a);
    REQUIRE(r == oracle_rank(a));

    const auto ker = kernel_basis(a);
    REQUIRE(r + ker.size() == 12); // rank–nullity
    for (const auto& v : ker) {
      for (std::size_t i = 0; i < 8; ++i) {
        Rational s(0);
        for (std::size_t j = 0; j < 12; ++j) s += a(i, j) * v[j];
        REQUIRE(s == 0);
      }
    }
  }
}

TEST_CASE("solve_linear returns solutions exactly when consistent", "[exactcore]")
{
  Rng rng(20240004);
  for (int t = 0; t < 20; ++t) {
    const Mat a = random_mat(rng, 5, 7);
    std::vector<Rational> x(7);
    for (auto& c : x) c = rng.small_rational();
    std::vector<Rational> b(5, Rational(0));
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 7; ++j) b[i] += a(i, j) * x[j];

    const auto sol = solve_linear(a, b);
    REQUIRE(sol.has_value());
    for (std::size_t i = 0; i < 5; ++i) {
      Rational s(0);
      for (std::size_t j = 0; j < 7; ++j) s += a(i, j) * (*sol)[j];
      REQUIRE(s == b[i]);
    }
  }
  // 0 x = b has no solution for b != 0.
  REQUIRE_FALSE(solve_linear(Mat(3, 3), {Rational(1), Rational(0), Rational(0)}).has_value());
}

TEST_CASE("inverse inverts exactly and rejects singular input", "[exactcore]")
{
  Rng rng(20240005);
  for (int t = 0; t < 10; ++t) {
    const Mat a = random_unitriangular(rng, 5) * random_unitriangular(rng, 5).transpose();
    const auto inv = inverse(a);
    REQUIRE(inv.has_value());
    REQUIRE(a * *inv == Mat::identity(5));
    REQUIRE(*inv * a == Mat::identity(5));
  }
  Mat sing(3, 3);
  sing(0, 0) = 1;
  sing(1, 1) = 1; // rank 2
  REQUIRE_FALSE(inverse(sing).has_value());
}

TEST_CASE("span dimensions satisfy the modular identity", "[exactcore]")
{
  Rng rng(20240006);
  for (int t = 0; t < 10; ++t) {
    std::vector<Mat> ga, gb;
    for (int k = 0; k < 4; ++k) ga.push_back(random_mat(rng, 3, 3));
    for (int k = 0; k < 4; ++k) gb.push_back(random_mat(rng, 3, 3));
    const auto a = make_span(3, ga), b = make_span(3, gb);
    REQUIRE(dim_sum(a, b) + dim_intersection(a, b) == a.dim() + b.dim());

    for (const auto& g : ga) REQUIRE(span_contains(a, g));
    const auto coords = coordinates_in(a, ga.front());
    REQUIRE(coords.has_value());
    Mat rebuilt(3, 3);
    for (std::size_t i = 0; i < a.dim(); ++i) rebuilt += a.basis[i] * (*coords)[i];
    REQUIRE(rebuilt == ga.front());
  }
}

TEST_CASE("operators on spans respect rank-nullity", "[exactcore]")
{
  const auto sl2 = make_span(2, sl_basis(2));
  const Mat h = Mat::from_rows({{1, 0}, {0, -1}});
  const auto adh = [&h](const Mat& x) { return bracket(h, x); };
  REQUIRE(kernel_of_operator(adh, sl2).dim() == 1);
  REQUIRE(image_of_operator(adh, sl2).dim() == 2);

  Rng rng(20240007);
  const auto sl3 = make_span(3, sl_basis(3));
  for (int t = 0; t < 5; ++t) {
    const Mat x = rng.random_sl(3);
    const auto adx = [&x](const Mat& m) { return bracket(x, m); };
    REQUIRE(kernel_of_operator(adx, sl3).dim() + image_of_operator(adx, sl3).dim() == 8);
  }
}

TEST_CASE("flatten and stack_rows guard shapes", "[exactcore]")
{
  Rng rng(20240008);
  const Mat m = random_mat(rng, 3, 3);
  REQUIRE(unflatten(3, flatten(m)) == m);
  REQUIRE_THROWS_AS(stack_rows(2, {Mat(2, 2), Mat(3, 3)}), std::invalid_argument);
}

TEST_CASE("jordan_type is a conjugation invariant", "[exactcore]")
{
  Rng rng(20240009);
  for (int n = 2; n <= 6; ++n) {
    for (const auto& la : partitions_of(n)) {
      const Mat e = jordan_triple(la).e;
      REQUIRE(jordan_type(e) == la);
      const Mat g = random_unitriangular(rng, static_cast<std::size_t>(n));
      const auto gi = inverse(g);
      REQUIRE(gi.has_value());
      REQUIRE(jordan_type(g * e * *gi) == la);
    }
  }
  REQUIRE_THROWS_AS(jordan_type(Mat::identity(3)), std::invalid_argument);
}

TEST_CASE("json round-trips for rationals, matrices and partitions", "[exactcore]")
{
  Rng rng(20240010);
  const Rational r(-22, 7);
  REQUIRE(rational_from_json(rational_to_json(r)) == r);
  const Mat m = random_mat(rng, 2, 3);
  REQUIRE(mat_from_json(mat_to_json(m)) == m);
  const Partition la({4, 2, 1});
  REQUIRE(partition_from_json(partition_to_json(la)) == la);
}
