#include <doctest.h>

#include "abr/ab_coloring.hpp"
#include "abr/constructions.hpp"
#include "abr/error.hpp"
#include "abr/io.hpp"
#include "abr/validate.hpp"
#include "oracles.hpp"

using namespace abr;

namespace {

PlanarSequence planar(std::initializer_list<std::pair<long, long>> pts) {
  std::vector<PlanarPoint> out;
  for (auto [t, h] : pts) out.push_back({t, h});
  return PlanarSequence(std::move(out));
}

LiftedSequence lifted3(std::initializer_list<std::array<long, 3>> pts) {
  std::vector<LiftedPoint> out;
  for (const auto& p : pts) out.push_back({{p[0], p[1]}, p[2]});
  return LiftedSequence(3, std::move(out));
}

}  // namespace

TEST_CASE("sequence invariants") {
  CHECK_THROWS_AS(PlanarSequence({}), InvariantError);
  CHECK_THROWS_AS(planar({{0, 0}, {0, 1}}), InvariantError);
  CHECK_THROWS_AS(planar({{1, 0}, {0, 1}}), InvariantError);
  CHECK_THROWS_AS(LiftedSequence(1, {{{}, 0}}), InvariantError);
  CHECK_THROWS_AS(LiftedSequence(3, {{{1}, 0}}), InvariantError);
  CHECK_THROWS_AS(LiftedSequence(3, {}), InvariantError);
  const LiftedSequence s = lifted3({{0, 0, 1}, {1, 0, 2}});
  CHECK(s.reversed()[0].h == 2);
  CHECK(s.negated_heights()[1].h == -2);
}

TEST_CASE("moment lift") {
  const LiftedSequence one = moment_lift(planar({{0, 5}}), 3);
  CHECK(one.size() == 1);
  CHECK(one[0].z == std::vector<Rational>{0, 0});
  CHECK(one[0].h == 5);

  const LiftedSequence three = moment_lift(planar({{1, 0}, {2, 0}, {3, 0}}), 3);
  CHECK(three[0].z == std::vector<Rational>{1, 1});
  CHECK(three[1].z == std::vector<Rational>{2, 4});
  CHECK(three[2].z == std::vector<Rational>{3, 9});

  const LiftedSequence cubic = moment_lift(planar({{0, 7}, {1, -1}, {2, 3}, {3, 0}}), 4);
  CHECK(cubic[3].z == std::vector<Rational>{3, 9, 27});
  CHECK(validate_cyclic_projections(cubic).valid());
  CHECK_THROWS_AS(moment_lift(planar({{0, 0}}), 1), InvariantError);
}

TEST_CASE("moment lifts of random planar sequences have cyclic projections") {
  oracle::Random rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const int d = 2 + trial % 4;
    const PlanarSequence p(rng.planar(static_cast<std::size_t>(d + 3)));
    CHECK(validate_cyclic_projections(moment_lift(p, d)).valid());
  }
}

TEST_CASE("cyclic projection validation") {
  const LiftedSequence square = lifted3({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}});
  const ValidationReport ok = validate_cyclic_projections(square);
  CHECK(ok.valid());
  CHECK(ok.failures.empty());
  CHECK(ok.tuples_checked == 4);

  const ValidationReport collinear =
      validate_cyclic_projections(lifted3({{0, 0, 0}, {1, 0, 0}, {2, 0, 0}}));
  CHECK(collinear.status == ValidationStatus::Invalid);
  REQUIRE(collinear.failures.size() == 1);
  CHECK(collinear.failures[0].witness == std::vector<int>{0, 1, 2});
  CHECK(collinear.failures[0].reason == FailureReason::ZeroDeterminant);

  CHECK_THROWS_AS(validate_cyclic_projections(lifted3({{0, 0, 0}, {1, 0, 0}})), TooFewPoints);
}

TEST_CASE("orientation under reversal") {
  // Reversing the order of d columns of the projection matrix multiplies
  // each minor by (-1)^(d(d-1)/2): reversal flips the orientation for
  // d = 2, 3 and keeps it for d = 4, 5.
  oracle::Random rng(22);
  for (int d = 2; d <= 5; ++d) {
    const PlanarSequence p(rng.planar(static_cast<std::size_t>(d + 2)));
    const LiftedSequence s = moment_lift(p, d);
    const ValidationReport r = validate_cyclic_projections(s.reversed());
    if ((d * (d - 1) / 2) % 2 == 1) {
      CHECK(r.status == ValidationStatus::Invalid);
      REQUIRE_FALSE(r.failures.empty());
      CHECK(r.failures[0].reason == FailureReason::WrongOrientation);
    } else {
      CHECK(r.valid());
    }
  }
}

TEST_CASE("mixed signs are not reported as a wrong orientation") {
  // 1D projections 0, 2, 1 give the minors +, +, -.
  const LiftedSequence s(2, {{{0}, 0}, {{2}, 0}, {{1}, 0}});
  const ValidationReport r = validate_cyclic_projections(s);
  CHECK(r.status == ValidationStatus::Invalid);
  REQUIRE(r.failures.size() == 1);
  CHECK(r.failures[0].reason == FailureReason::NegativeDeterminant);
  CHECK(r.failures[0].witness == std::vector<int>{1, 2});
}

TEST_CASE("validation cutoff and failure cap") {
  const PlanarSequence p = planar({{0, 0}, {1, 1}, {2, 2}, {3, 3}, {4, 4}, {5, 5}});
  ValidationOptions cap;
  cap.max_failures = 3;
  const ValidationReport line = validate_d_general_position(p, 2, cap);
  CHECK(line.status == ValidationStatus::Invalid);
  CHECK(line.failures.size() == 3);
  CHECK(line.tuples_checked == 20);
  // Failures come in colex order.
  CHECK(line.failures[0].witness == std::vector<int>{0, 1, 2});
  CHECK(line.failures[1].witness == std::vector<int>{0, 1, 3});
  CHECK(line.failures[2].witness == std::vector<int>{0, 2, 3});

  const PlanarSequence parabola = planar({{0, 0}, {1, 1}, {2, 4}, {3, 9}, {4, 16}});
  ValidationOptions cutoff;
  cutoff.max_tuples = 4;
  const ValidationReport partial = validate_d_general_position(parabola, 2, cutoff);
  CHECK(partial.status == ValidationStatus::Unverified);
  CHECK_FALSE(partial.valid());
  CHECK(partial.failures.empty());
  CHECK(partial.tuples_checked == 4);
  CHECK(partial.tuples_total == 10);
  CHECK(validate_d_general_position(parabola, 2).valid());
}

TEST_CASE("general position") {
  const LiftedSequence cubic = moment_lift(planar({{0, 0}, {1, 1}, {2, 8}, {3, 27}}), 3);
  CHECK(validate_general_position(cubic).valid());

  const LiftedSequence flat = moment_lift(planar({{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}}), 3);
  const ValidationReport r = validate_general_position(flat);
  CHECK(r.status == ValidationStatus::Invalid);
  CHECK(r.failures.size() == 5);
  for (const auto& f : r.failures) CHECK(f.reason == FailureReason::ZeroDeterminant);

  oracle::Random rng(23);
  int valid = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const LiftedSequence s = moment_lift(PlanarSequence(rng.planar(7, 1000)), 3);
    valid += validate_general_position(s).valid();
  }
  CHECK(valid >= 38);
  CHECK_THROWS_AS(validate_general_position(moment_lift(planar({{0, 0}, {1, 0}, {2, 0}}), 3)),
                  TooFewPoints);
}

TEST_CASE("d-general position") {
  CHECK(validate_d_general_position(planar({{0, 0}, {1, 1}, {2, 4}, {3, 9}}), 2).valid());
  const ValidationReport line = validate_d_general_position(planar({{0, 0}, {1, 1}, {2, 2}, {3, 3}}), 2);
  CHECK(line.failures.size() == 4);
  for (const auto& f : line.failures) CHECK(f.reason == FailureReason::ZeroDividedDifference);
  CHECK(validate_d_general_position(planar({{0, 0}, {1, 1}, {2, 4}, {3, 27}}), 3).valid());
  CHECK_THROWS_AS(validate_d_general_position(planar({{0, 0}, {1, 1}}), 2), TooFewPoints);
}

TEST_CASE("sequence JSON") {
  const AnySequence one = parse_sequence(R"({"kind":"planar","points":[["0/1","5/1"]]})");
  const auto& p = std::get<PlanarSequence>(one);
  CHECK(p.size() == 1);
  CHECK(p[0].h == 5);

  const AnySequence any_order =
      parse_sequence(R"({"points":[["1","2","-3/6"]], "dimension": 3, "kind":"lifted"})");
  const auto& l = std::get<LiftedSequence>(any_order);
  CHECK(l.dimension() == 3);
  CHECK(l[0].h == Rational(-1, 2));

  CHECK_THROWS_AS(parse_sequence(R"({"kind":"planar","points":[["0","1"],["0","2"]]})"),
                  InvariantError);
  CHECK_THROWS_AS(parse_sequence(R"({"kind":"lifted","dimension":3,"points":[["0","1"]]})"),
                  InvariantError);
  CHECK_THROWS_AS(parse_sequence(R"({"kind":"planar","points":[["0","1"]],"extra":1})"),
                  ParseError);
  CHECK_THROWS_AS(parse_sequence(R"({"kind":"planar","points":[[0,1]]})"), ParseError);
  CHECK_THROWS_AS(parse_sequence(R"({"kind":"planar","points":[["0","1/0"]]})"), ParseError);
  CHECK_THROWS_AS(parse_sequence(R"({"kind":"spherical","points":[]})"), ParseError);

  try {
    parse_sequence("{\n  \"kind\": \"planar\",\n  \"points\": [[\"0\", \"1\"],]\n}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() > 1);
  }
  try {
    parse_sequence("{\"kind\": \"planar\",\n\"points\": [],\n \"bogus\": 2}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 2);
  }
}

TEST_CASE("sequence JSON round trip") {
  const EmConstruction em = build_em(3, 2);
  const std::string text = serialize_sequence(em.points);
  const AnySequence back = parse_sequence(text);
  CHECK(std::get<PlanarSequence>(back) == em.points);
  CHECK(serialize_sequence(back) == text);

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const LiftedSequence s = random_cyclic_instance(2 + static_cast<int>(seed % 3), 7, seed);
    const AnySequence again = parse_sequence(serialize_sequence(s));
    CHECK(std::get<LiftedSequence>(again) == s);
  }
}
