#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "abr/sequence.hpp"

namespace abr {

enum class ValidationStatus { Valid, Invalid, Unverified };

enum class FailureReason {
  ZeroDeterminant,
  NegativeDeterminant,
  /// Every projected minor is negative; the reversed sequence may pass.
  WrongOrientation,
  ZeroDividedDifference,
};

std::string_view to_string(ValidationStatus s);
std::string_view to_string(FailureReason r);

struct ValidationFailure {
  std::vector<int> witness;
  FailureReason reason;
};

struct ValidationReport {
  ValidationStatus status = ValidationStatus::Valid;
  /// The first failures in colexicographic tuple order, capped by
  /// ValidationOptions::max_failures.
  std::vector<ValidationFailure> failures;
  std::uint64_t tuples_checked = 0;
  std::uint64_t tuples_total = 0;

  bool valid() const { return status == ValidationStatus::Valid; }
};

struct ValidationOptions {
  /// Only the first max_tuples tuples in colex order are examined (so a
  /// cutoff covers every tuple of some prefix of the sequence). When the
  /// examined ones all pass but some were skipped, the status is
  /// Unverified. 0 means unlimited.
  std::uint64_t max_tuples = 0;
  std::size_t max_failures = 16;
};

/// det(1; z_{i_1} ... z_{i_d}) > 0 for every increasing d-tuple. Throws
/// TooFewPoints when |s| < d.
ValidationReport validate_cyclic_projections(const LiftedSequence& s,
                                             const ValidationOptions& options = {});

/// det(1; x_{i_0} ... x_{i_d}) != 0 for every increasing (d+1)-tuple.
/// Throws TooFewPoints when |s| < d + 1.
ValidationReport validate_general_position(const LiftedSequence& s,
                                           const ValidationOptions& options = {});

/// Delta_d != 0 on every increasing (d+1)-tuple. Throws TooFewPoints when
/// |p| < d + 1.
ValidationReport validate_d_general_position(const PlanarSequence& p, int d,
                                             const ValidationOptions& options = {});

}  // namespace abr
