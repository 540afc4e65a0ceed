#pragma once

#include <cstdint>
#include <vector>

#include "abr/ordered_colorings.hpp"
#include "abr/rational.hpp"
#include "abr/sequence.hpp"

namespace abr {

/// Parameters of one refinement step of the cluster-plus-parabola
/// construction: every point (T, H) of the previous level is replaced by
/// (T + epsilon u, H + delta g(u)) over the normalized previous level, with
/// g(u) = h + bend * steepness * (u - 2)^2.
struct EmLevel {
  Rational epsilon;
  Rational delta;
  Rational steepness;
  int bend = 1;
};

struct EmParams {
  int m = 1;
  Integer base = 2;
  std::vector<EmLevel> levels;
};

struct EmConstruction {
  PlanarSequence points;
  EmParams params;
};

/// One build at a fixed base B >= 2. epsilon, delta and steepness are
/// powers of B sized from the previous level's minimum gap, maximum slope,
/// maximum |Delta_2| and minimum |Delta_3|. The first step bends downward
/// so the seed quadruple has positive Delta_3; later steps bend upward.
/// Produces 2^(2^(m-1)) points with strictly increasing t.
EmConstruction build_em(int m, const Integer& base);

struct EmReport {
  int m = 0;
  std::size_t n = 0;
  int max_monotone = 0;
  bool exhaustive = false;
  /// max_monotone <= 2m.
  bool holds = false;
  SearchResult search;
};

/// Longest third-order monotone subsequence of p, by exhaustive search on
/// the Delta_3 sign table. Throws InvariantError when |p| != 2^(2^(m-1)),
/// DegenerateError when p is not in 3-general position.
EmReport em_verify(const PlanarSequence& p, int m, std::uint64_t budget = 0);

struct EmSearchOptions {
  Integer base_start = 2;
  /// Inclusive upper end of the doubling search over B.
  Integer base_limit = Integer(1) << 64;
  std::uint64_t budget = 0;
};

/// Builds at B = base_start, 2 base_start, ... until em_verify confirms
/// max_monotone <= 2m exhaustively. Throws ParameterSearchFailed when the
/// range is exhausted.
EmConstruction em_construction(int m, const EmSearchOptions& options = {});

/// Classical set of C(2k-4, k-2) points in 2-general position with no
/// k-cup and no k-cap. Integer coordinates.
PlanarSequence cupcap_extremal(int k);

/// The same recursive family with no k-cup and no l-cap, C(k+l-4, k-2)
/// points.
PlanarSequence cupcap_set(int k, int l);

struct RandomInstanceOptions {
  /// Bit width of random numerators and denominators.
  int bits = 16;
  /// When nonzero, projections are moved off the moment curve by noise of
  /// relative size 2^-off_curve_bits and re-drawn until still cyclic.
  int off_curve_bits = 0;
  int max_attempts = 1000;
};

/// Random increasing t on the moment curve with random heights, re-drawn
/// until both validators pass. Deterministic in the seed on every
/// platform. Throws GenerationFailed after max_attempts draws.
LiftedSequence random_cyclic_instance(int d, int n, std::uint64_t seed,
                                      const RandomInstanceOptions& options = {});

/// Random planar sequence (increasing t, random h) of n points. No
/// general-position guarantee.
PlanarSequence random_planar(int n, std::uint64_t seed, int bits = 16);

}  // namespace abr
