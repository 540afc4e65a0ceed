#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "abr/coloring_table.hpp"
#include "abr/matrix.hpp"
#include "abr/rational.hpp"
#include "abr/sequence.hpp"

namespace abr {

// Above-below colors of lifted tuples.
//
// For a tuple x_0, ..., x_d of R^d whose projections z_j have cyclic order
// type, the projections split into the even and the odd positions, and
// both parts share a common convex-combination point rho. The color is
// Positive when (-1)^d (H_even - H_odd) > 0, where H_even and H_odd are the
// heights over rho interpolated from each part. Equivalently the color is
// the sign of det(1; x_0 ... x_d), which is what production code evaluates.

/// (d+1) x m matrix whose column j is (1, z_j, h_j).
Matrix affine_matrix(std::span<const LiftedPoint> x);
/// d x m matrix whose column j is (1, z_j).
Matrix projection_matrix(std::span<const LiftedPoint> x);
Matrix projection_matrix(std::span<const std::vector<Rational>> z);

struct RadonCertificate {
  /// All positive. Even positions sum to 1, odd positions sum to 1.
  std::vector<Rational> lambda;
  std::vector<Rational> radon_point;
  std::vector<int> even_part;
  std::vector<int> odd_part;
};

/// Affine dependence of d+1 points of R^{d-1} with cyclic order type.
/// Throws DegenerateError when a minor of (1; z) vanishes and
/// WrongOrientation when one is negative.
RadonCertificate radon_certificate(std::span<const std::vector<Rational>> z);

struct HeightPair {
  Rational h_even;
  Rational h_odd;
};

struct HeightColoring {
  RadonCertificate radon;
  HeightPair heights;
  Color color;
};

/// Colors through the Radon point. Throws DegenerateError on a height tie.
HeightColoring color_by_heights(std::span<const LiftedPoint> x);

/// Sign of det(1; x_0 ... x_d). Throws DegenerateError when it vanishes.
Color color_by_determinant(std::span<const LiftedPoint> x);

/// The two lifted diagonals x0x2 and x1x3 of a lifted quadrilateral in R^3,
/// evaluated over the crossing point of their projections.
struct DiagonalCrossing {
  Rational s;  // crossing = z0 + s (z2 - z0)
  Rational u;  // crossing = z1 + u (z3 - z1)
  std::vector<Rational> point;
  Rational even_height;  // on x0x2
  Rational odd_height;   // on x1x3
  bool even_above() const { return even_height > odd_height; }
};

/// Throws DegenerateError unless d = 3, the projected diagonals cross
/// strictly inside both segments, and the heights differ there.
DiagonalCrossing diagonal_crossing(std::span<const LiftedPoint> x);

/// Frozen mapping from "even diagonal x0x2 is above x1x3" to Positive.
/// calibrate_crossing_convention() recomputes it on a reference instance.
inline constexpr bool kEvenAboveIsPositive = false;

/// Recomputes the crossing convention by comparing diagonal_crossing with
/// color_by_heights on a fixed nondegenerate quadruple.
bool calibrate_crossing_convention();

Color color_by_crossing(std::span<const LiftedPoint> x);

// Divided differences of planar points with distinct t.

/// Recursive quotient of lower-order differences, O(q^2).
Rational divided_difference_recursive(std::span<const PlanarPoint> p);
/// sum_j h_j / prod_{r != j} (t_j - t_r). Valid in any point order.
Rational divided_difference_closed_form(std::span<const PlanarPoint> p);
/// Evaluates both forms and throws IdentityViolation if they disagree.
Rational divided_difference(std::span<const PlanarPoint> p);

/// det(1; t; ...; t^{d-1}; h) - prod_{i<j} (t_j - t_i) * Delta_d for the
/// d+1 given points. Zero for every input.
Rational vandermonde_divdiff_residual(std::span<const PlanarPoint> p);

enum class CertificateStatus { Verified, Degenerate, IdentityViolation };

/// Monotonicity data for one (d+2)-tuple.
struct OneSwitchCertificate {
  CertificateStatus status = CertificateStatus::Verified;
  std::string failure;
  /// D_j = det of the affine matrix with column j deleted, j = 0..d+1.
  std::vector<Rational> d_sequence;
  /// delta(a, b) of the projection matrix.
  std::optional<MinorTable> delta;
  /// rho_j = delta(j, d+1) / delta(0, j), j = 1..d (index j-1).
  std::vector<Rational> rho_sequence;
  /// Sign changes of (D_0, ..., D_{d+1}) in deletion order, zeros skipped.
  int switch_count = 0;
  /// Sign changes of the subtuple colors in lexicographic order.
  int lex_switch_count = 0;

  bool verified() const { return status == CertificateStatus::Verified; }
};

OneSwitchCertificate one_switch_certificate(std::span<const LiftedPoint> x);

struct ColorTableOptions {
  /// Run validate_cyclic_projections first and throw on failure.
  bool check_projections = true;
};

/// Colors every increasing (d+1)-tuple by determinant sign. Throws
/// DegenerateError (with the tuple) on a vanishing determinant and
/// WrongOrientation / DegenerateError when the projections are not cyclic.
ColoringTable color_table(const LiftedSequence& s, const ColorTableOptions& options = {});

/// Colors every (d+1)-tuple of a planar sequence by the sign of Delta_d.
/// Throws DegenerateError when some Delta_d vanishes.
ColoringTable divided_difference_table(const PlanarSequence& p, int d);

}  // namespace abr
