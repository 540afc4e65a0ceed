#include <doctest.h>

#include "abr/ab_coloring.hpp"
#include "abr/constructions.hpp"
#include "abr/error.hpp"
#include "abr/io.hpp"
#include "abr/validate.hpp"
#include "oracles.hpp"

using namespace abr;

namespace {

bool is_power_of(const Rational& q, const Integer& base) {
  Integer num = q.get_num(), den = q.get_den();
  if (num != 1) std::swap(num, den);
  if (num != 1) return false;
  while (den > 1) {
    if (den % base != 0) return false;
    den /= base;
  }
  return true;
}

}  // namespace

TEST_CASE("EM sizes and general position") {
  const std::size_t sizes[] = {2, 4, 16, 256};
  for (int m = 1; m <= 4; ++m) {
    const EmConstruction c = build_em(m, 2);
    CHECK(c.points.size() == sizes[m - 1]);
    CHECK(c.params.levels.size() == static_cast<std::size_t>(m - 1));
    if (m >= 2 && m <= 3) CHECK(validate_d_general_position(c.points, 3).valid());
  }
  CHECK_THROWS_AS(build_em(0, 2), InvariantError);
  CHECK_THROWS_AS(build_em(2, 1), InvariantError);
}

TEST_CASE("EM parameters are powers of the base") {
  for (long b : {2L, 4L, 16L}) {
    const EmConstruction c = build_em(3, b);
    CHECK(c.params.base == b);
    CHECK(c.params.levels[0].bend == -1);
    CHECK(c.params.levels[1].bend == 1);
    for (const auto& l : c.params.levels) {
      CHECK(is_power_of(l.epsilon, b));
      CHECK(is_power_of(l.delta, b));
      CHECK(is_power_of(l.steepness, b));
      CHECK(l.epsilon < 1);
      CHECK(l.delta < 1);
    }
  }
}

TEST_CASE("EM verification") {
  for (int m = 1; m <= 3; ++m) {
    const EmConstruction c = em_construction(m);
    const EmReport r = em_verify(c.points, m);
    CHECK(r.exhaustive);
    CHECK(r.holds);
    CHECK(r.max_monotone <= 2 * m);
    CHECK(r.n == c.points.size());
  }
  // The level-3 build is tight: six is reached.
  const EmReport r3 = em_verify(build_em(3, 2).points, 3);
  CHECK(r3.max_monotone == 6);
  for (long b : {4L, 16L}) CHECK(em_verify(build_em(3, b).points, 3).max_monotone <= 6);

  CHECK_THROWS_AS(em_verify(build_em(2, 2).points, 3), InvariantError);
}

TEST_CASE("random 16-point sequences are a weaker contrast") {
  // Diagnostic only: random sequences usually do contain long monotone runs.
  int longer = 0;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const PlanarSequence p = random_planar(16, seed);
    const EmReport r = em_verify(p, 3);
    longer += r.max_monotone > 6;
  }
  MESSAGE("random sequences with a 7-term third-order monotone run: " << longer << "/5");
}

TEST_CASE("EM search failure carries a witness") {
  EmSearchOptions options;
  options.budget = 3;  // every verification is cut short
  options.base_limit = 8;
  try {
    em_construction(3, options);
    FAIL("expected ParameterSearchFailed");
  } catch (const ParameterSearchFailed& e) {
    CHECK_FALSE(e.witness().empty());
  }
}

TEST_CASE("EM report JSON") {
  const EmConstruction c = em_construction(2);
  const std::string json = em_report_to_json(em_verify(c.points, 2), c.params);
  CHECK(json.find("\"max_monotone\":4") != std::string::npos);
  CHECK(json.find("\"exhaustive\":true") != std::string::npos);
  CHECK(json.find("\"base\":\"2\"") != std::string::npos);
  CHECK(json.find("\"epsilon\":\"1/256\"") != std::string::npos);
}

TEST_CASE("cup-cap sets") {
  CHECK(cupcap_extremal(3).size() == 2);
  CHECK(cupcap_extremal(4).size() == 6);
  CHECK(cupcap_extremal(5).size() == 20);
  CHECK(cupcap_set(4, 5).size() == 10);
  CHECK(cupcap_set(5, 3).size() == 4);
  for (int k = 4; k <= 5; ++k) {
    const PlanarSequence p = cupcap_extremal(k);
    CHECK(validate_d_general_position(p, 2).valid());
    const SearchResult r = longest_monochromatic(divided_difference_table(p, 2));
    CHECK(r.exhaustive);
    CHECK(r.size == k - 1);
  }
  // Separate cup and cap bounds.
  for (auto [k, l] : {std::pair{4, 5}, std::pair{5, 4}, std::pair{4, 6}}) {
    const PlanarSequence p = cupcap_set(k, l);
    const ColoringTable t = divided_difference_table(p, 2);
    int cup = 2, cap = 2;
    for (std::uint32_t mask = 0; mask < (1u << p.size()); ++mask) {
      const auto set = oracle::bits_to_indices(mask);
      if (set.size() < 3) continue;
      bool all_plus = true, all_minus = true;
      for (const auto& s : oracle::subsets_lex(set, 3)) {
        (t.color(s) == Color::Positive ? all_minus : all_plus) = false;
      }
      if (all_plus) cup = std::max(cup, static_cast<int>(set.size()));
      if (all_minus) cap = std::max(cap, static_cast<int>(set.size()));
    }
    CHECK(cup == k - 1);
    CHECK(cap == l - 1);
  }
  CHECK_THROWS_AS(cupcap_extremal(2), InvariantError);
}

TEST_CASE("random cyclic instances") {
  for (int d = 2; d <= 4; ++d) {
    const LiftedSequence s = random_cyclic_instance(d, d == 4 ? 10 : d + 1, 3);
    CHECK(validate_cyclic_projections(s).valid());
    CHECK(validate_general_position(s).valid());
  }
  CHECK(random_cyclic_instance(4, 10, 7) == random_cyclic_instance(4, 10, 7));
  CHECK_FALSE(random_cyclic_instance(4, 10, 7) == random_cyclic_instance(4, 10, 8));
  CHECK(serialize_sequence(random_cyclic_instance(3, 6, 99)) ==
        serialize_sequence(random_cyclic_instance(3, 6, 99)));

  RandomInstanceOptions off;
  off.off_curve_bits = 4;
  const LiftedSequence s = random_cyclic_instance(3, 8, 5, off);
  CHECK(validate_cyclic_projections(s).valid());
  bool moved = false;
  for (const auto& p : s.points()) moved = moved || p.z[1] != p.z[0] * p.z[0];
  CHECK(moved);

  RandomInstanceOptions tiny;
  tiny.bits = 1;
  tiny.max_attempts = 2;
  CHECK_THROWS_AS(random_cyclic_instance(3, 30, 1, tiny), GenerationFailed);
  CHECK_THROWS_AS(random_cyclic_instance(3, 3, 1), TooFewPoints);
}

TEST_CASE("random planar sequences") {
  const PlanarSequence p = random_planar(12, 4);
  CHECK(p.size() == 12);
  CHECK(p == random_planar(12, 4));
}
