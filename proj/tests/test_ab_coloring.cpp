#include <doctest.h>

#include <algorithm>

#include "abr/ab_coloring.hpp"
#include "abr/combinatorics.hpp"
#include "abr/constructions.hpp"
#include "abr/error.hpp"
#include "abr/ordered_colorings.hpp"
#include "oracles.hpp"

using namespace abr;

namespace {

std::vector<PlanarPoint> pts(std::initializer_list<std::pair<Rational, Rational>> list) {
  std::vector<PlanarPoint> out;
  for (const auto& [t, h] : list) out.push_back({t, h});
  return out;
}

std::vector<LiftedPoint> lift(const std::vector<PlanarPoint>& p, int d) {
  const LiftedSequence s = moment_lift(PlanarSequence(p), d);
  return {s.points().begin(), s.points().end()};
}

std::vector<LiftedPoint> square(long h0, long h1, long h2, long h3) {
  return {{{0, 0}, h0}, {{1, 0}, h1}, {{1, 1}, h2}, {{0, 1}, h3}};
}

oracle::Grid affine_grid(const std::vector<LiftedPoint>& x) {
  const std::size_t d = x.size() - 1;
  oracle::Grid g(d + 1, std::vector<Rational>(x.size()));
  for (std::size_t j = 0; j < x.size(); ++j) {
    g[0][j] = 1;
    for (std::size_t k = 0; k + 1 < d; ++k) g[k + 1][j] = x[j].z[k];
    g[d][j] = x[j].h;
  }
  return g;
}

}  // namespace

TEST_CASE("Radon certificate of the square") {
  std::vector<std::vector<Rational>> z{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  const RadonCertificate c = radon_certificate(z);
  CHECK(c.lambda == std::vector<Rational>(4, Rational(1, 2)));
  CHECK(c.radon_point == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
  CHECK(c.even_part == std::vector<int>{0, 2});
  CHECK(c.odd_part == std::vector<int>{1, 3});
}

TEST_CASE("Radon certificate on a line") {
  std::vector<std::vector<Rational>> z{{0}, {1}, {3}};
  const RadonCertificate c = radon_certificate(z);
  CHECK(c.lambda == std::vector<Rational>{Rational(2, 3), 1, Rational(1, 3)});
  CHECK(c.radon_point == std::vector<Rational>{1});
}

TEST_CASE("Radon certificate invariants on the moment curve") {
  oracle::Random rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 2 + trial % 4;
    const auto x = lift(rng.planar(static_cast<std::size_t>(d + 1)), d);
    std::vector<std::vector<Rational>> z;
    for (const auto& p : x) z.push_back(p.z);
    const RadonCertificate c = radon_certificate(z);
    Rational even = 0, odd = 0;
    std::vector<Rational> signed_sum(static_cast<std::size_t>(d - 1), 0);
    for (std::size_t j = 0; j < c.lambda.size(); ++j) {
      CHECK(c.lambda[j] > 0);
      (j % 2 ? odd : even) += c.lambda[j];
      for (std::size_t k = 0; k + 1 < static_cast<std::size_t>(d); ++k)
        signed_sum[k] += (j % 2 ? -1 : 1) * c.lambda[j] * z[j][k];
    }
    CHECK(even == 1);
    CHECK(odd == 1);
    for (const auto& v : signed_sum) CHECK(v == 0);
  }
}

TEST_CASE("Radon certificate errors") {
  std::vector<std::vector<Rational>> collinear{{0, 0}, {1, 0}, {2, 0}, {0, 1}};
  CHECK_THROWS_AS(radon_certificate(collinear), DegenerateError);
  std::vector<std::vector<Rational>> reversed{{0}, {-1}, {-3}};
  CHECK_THROWS_AS(radon_certificate(reversed), WrongOrientation);
}

TEST_CASE("height colors") {
  const auto cubic = lift(pts({{0, 0}, {1, 1}, {2, 8}, {3, 27}}), 3);
  CHECK(color_by_heights(cubic).color == Color::Positive);
  CHECK(color_by_determinant(cubic) == Color::Positive);

  const auto flat = lift(pts({{0, 4}, {1, 4}, {2, 4}, {3, 4}}), 3);
  CHECK_THROWS_AS(color_by_heights(flat), DegenerateError);
  CHECK_THROWS_AS(color_by_determinant(flat), DegenerateError);

  const auto cap = lift(pts({{0, 0}, {1, 1}, {2, 0}}), 2);
  CHECK(divided_difference(PlanarSequence(pts({{0, 0}, {1, 1}, {2, 0}})).points()) == -1);
  const HeightColoring hc = color_by_heights(cap);
  CHECK(hc.color == Color::Negative);
  CHECK(hc.heights.h_even == 0);
  CHECK(hc.heights.h_odd == 1);
}

TEST_CASE("determinant colors") {
  const auto cubic = lift(pts({{0, 0}, {1, 1}, {2, 8}, {3, 27}}), 3);
  CHECK(det(affine_matrix(cubic)) == 12);
  std::vector<LiftedPoint> negated = cubic;
  for (auto& p : negated) p.h = -p.h;
  CHECK(color_by_determinant(negated) == Color::Negative);

  const auto cap = lift(pts({{0, 0}, {1, 1}, {2, 0}}), 2);
  CHECK(det(affine_matrix(cap)) == -2);
  CHECK(color_by_determinant(cap) == Color::Negative);
}

TEST_CASE("crossing colors") {
  const DiagonalCrossing c = diagonal_crossing(square(0, 0, 1, 0));
  CHECK(c.point == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
  CHECK(c.even_height == Rational(1, 2));
  CHECK(c.odd_height == 0);
  CHECK(c.even_above());
  CHECK_FALSE(diagonal_crossing(square(0, 1, 0, 0)).even_above());

  CHECK(calibrate_crossing_convention() == kEvenAboveIsPositive);
  CHECK(color_by_crossing(square(0, 0, 1, 0)) == color_by_heights(square(0, 0, 1, 0)).color);
  CHECK(color_by_crossing(square(0, 0, 1, 0)) != color_by_crossing(square(0, 1, 0, 0)));

  const auto cubic = lift(pts({{0, 0}, {1, 1}, {2, 8}, {3, 27}}), 3);
  CHECK(color_by_crossing(cubic) == Color::Positive);

  CHECK_THROWS_AS(diagonal_crossing(square(0, 0, 0, 0)), DegenerateError);
  const std::vector<LiftedPoint> nonconvex{{{0, 0}, 0}, {{1, 0}, 0}, {{2, 0}, 1}, {{0, 1}, 0}};
  CHECK_THROWS_AS(diagonal_crossing(nonconvex), DegenerateError);
}

TEST_CASE("production colors agree with the elimination oracle") {
  oracle::Random rng(32);
  for (int trial = 0; trial < 300; ++trial) {
    const int d = 2 + trial % 3;
    const auto x = lift(rng.planar(static_cast<std::size_t>(d + 1)), d);
    const int expected = oracle::height_color(x);
    if (expected == 0) continue;
    const Color want = expected > 0 ? Color::Positive : Color::Negative;
    CHECK(color_by_heights(x).color == want);
    CHECK(color_by_determinant(x) == want);
    CHECK(sgn(oracle::cofactor_det(affine_grid(x))) == expected);
    if (d == 3) CHECK(color_by_crossing(x) == want);
  }
}

TEST_CASE("divided differences") {
  CHECK(divided_difference(pts({{0, 0}, {2, 6}})) == 3);
  for (const auto& nodes : {pts({{0, 0}, {1, 1}, {2, 4}}), pts({{-3, 9}, {Rational(1, 2), Rational(1, 4)}, {5, 25}})})
    CHECK(divided_difference(nodes) == 1);
  CHECK(divided_difference(pts({{0, 0}, {1, 1}, {2, 4}, {3, 27}})) == 3);
  CHECK(divided_difference(pts({{4, 7}})) == 7);
  CHECK_THROWS_AS(divided_difference_recursive(pts({{1, 0}, {1, 1}})), InvariantError);
  CHECK_THROWS_AS(divided_difference_closed_form(pts({{1, 0}, {1, 1}})), InvariantError);
}

TEST_CASE("divided difference forms agree with the interpolation oracle") {
  oracle::Random rng(33);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t q = static_cast<std::size_t>(trial % 7);
    const auto p = rng.planar(q + 1);
    const Rational expected = oracle::leading_coefficient(p);
    CHECK(divided_difference_recursive(p) == expected);
    CHECK(divided_difference_closed_form(p) == expected);
    CHECK(divided_difference(p) == expected);
  }
}

TEST_CASE("closed-form divided difference is symmetric") {
  oracle::Random rng(34);
  for (int trial = 0; trial < 100; ++trial) {
    auto p = rng.planar(static_cast<std::size_t>(2 + trial % 5));
    const Rational value = divided_difference_closed_form(p);
    std::shuffle(p.begin(), p.end(), rng.engine());
    CHECK(divided_difference_closed_form(p) == value);
  }
}

TEST_CASE("Vandermonde identity") {
  CHECK(vandermonde_divdiff_residual(pts({{0, 0}, {1, 1}, {2, 8}, {3, 27}})) == 0);
  CHECK(vandermonde_divdiff_residual(pts({{0, 5}, {1, 5}, {3, 5}})) == 0);
  oracle::Random rng(35);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = 2 + trial % 4;
    const auto p = rng.planar(static_cast<std::size_t>(d + 1));
    CHECK(vandermonde_divdiff_residual(p) == 0);
    const Color lifted = color_by_determinant(lift(p, d));
    const int s = sgn(divided_difference(p));
    if (s != 0) CHECK(lifted == (s > 0 ? Color::Positive : Color::Negative));
  }
}

TEST_CASE("one-switch certificate examples") {
  const auto quartic = lift(pts({{0, 0}, {1, 1}, {2, 16}, {3, 81}, {4, 256}}), 3);
  const OneSwitchCertificate a = one_switch_certificate(quartic);
  CHECK(a.verified());
  CHECK(a.switch_count == 0);
  for (const auto& v : a.d_sequence) CHECK(v > 0);

  const OneSwitchCertificate cups = one_switch_certificate(lift(pts({{0, 0}, {1, 0}, {2, 1}, {3, 3}}), 2));
  CHECK(cups.verified());
  CHECK(cups.switch_count == 0);

  const OneSwitchCertificate one = one_switch_certificate(
      lift(pts({{0, 0}, {1, 1}, {2, Rational(3, 2)}, {3, 4}}), 2));
  CHECK(one.verified());
  CHECK(one.switch_count == 1);
  CHECK(one.lex_switch_count == 1);
  REQUIRE(one.rho_sequence.size() == 2);
  CHECK(one.rho_sequence[0] > one.rho_sequence[1]);

  // Delta_2(0, 1, 3) = 0 here: the triple is collinear.
  const OneSwitchCertificate flat = one_switch_certificate(
      lift(pts({{0, 0}, {1, 1}, {2, Rational(3, 2)}, {3, 3}}), 2));
  CHECK(flat.status == CertificateStatus::Degenerate);
}

TEST_CASE("one-switch certificates on random cyclic tuples") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int d = 2 + static_cast<int>(seed % 3);
    RandomInstanceOptions options;
    options.off_curve_bits = seed % 2 ? 6 : 0;
    const LiftedSequence s = random_cyclic_instance(d, d + 2, seed, options);
    const OneSwitchCertificate c = one_switch_certificate(s.points());
    CHECK_MESSAGE(c.verified(), c.failure);
    CHECK(c.switch_count <= 1);
    for (std::size_t j = 1; j < c.rho_sequence.size(); ++j)
      CHECK(c.rho_sequence[j - 1] > c.rho_sequence[j]);
  }
}

TEST_CASE("color tables") {
  const LiftedSequence single = moment_lift(PlanarSequence(pts({{0, 0}, {1, 1}, {2, 8}, {3, 27}})), 3);
  const ColoringTable one = color_table(single);
  CHECK(one.size() == 1);
  CHECK(one.color_at(0) == Color::Positive);

  std::vector<PlanarPoint> quartic;
  for (long t = 0; t < 7; ++t) quartic.push_back({t, t * t * t * t});
  const ColoringTable all = color_table(moment_lift(PlanarSequence(quartic), 4));
  for (std::uint64_t k = 0; k < all.size(); ++k) CHECK(all.color_at(k) == Color::Positive);

  const EmConstruction em = build_em(2, 2);
  const ColoringTable em_table = color_table(moment_lift(em.points, 3));
  CHECK(em_table.size() == 1);
  CHECK(em_table.color_at(0) == Color::Positive);

  CHECK_THROWS_AS(color_table(single.reversed()), WrongOrientation);
  const std::vector<PlanarPoint> line{{0, 0}, {1, 1}, {2, 2}, {3, 7}};
  try {
    color_table(moment_lift(PlanarSequence(line), 2));
    FAIL("expected a degenerate tuple");
  } catch (const DegenerateError& e) {
    CHECK(e.witness() == std::vector<int>{0, 1, 2});
  }
}

TEST_CASE("lifted tables equal divided difference tables") {
  oracle::Random rng(36);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = 2 + trial % 3;
    const PlanarSequence p(rng.planar(static_cast<std::size_t>(d + 5), 1000));
    ColoringTable lifted(d + 1, 2);
    try {
      lifted = color_table(moment_lift(p, d));
    } catch (const DegenerateError&) {
      continue;
    }
    const ColoringTable planar = divided_difference_table(p, d);
    CHECK(lifted == planar);
    CHECK(longest_monochromatic(lifted).size == longest_monochromatic(planar).size);
  }
}
