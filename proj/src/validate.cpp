#include "abr/validate.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "abr/ab_coloring.hpp"
#include "abr/combinatorics.hpp"
#include "abr/error.hpp"
#include "abr/matrix.hpp"
#include "abr/parallel.hpp"

namespace abr {

std::string_view to_string(ValidationStatus s) {
  switch (s) {
    case ValidationStatus::Valid: return "Valid";
    case ValidationStatus::Invalid: return "Invalid";
    case ValidationStatus::Unverified: return "Unverified";
  }
  return "?";
}

std::string_view to_string(FailureReason r) {
  switch (r) {
    case FailureReason::ZeroDeterminant: return "ZeroDeterminant";
    case FailureReason::NegativeDeterminant: return "NegativeDeterminant";
    case FailureReason::WrongOrientation: return "WrongOrientation";
    case FailureReason::ZeroDividedDifference: return "ZeroDividedDifference";
  }
  return "?";
}

namespace {

struct ChunkResult {
  std::vector<ValidationFailure> failures;
  std::uint64_t negatives = 0;
  std::uint64_t checked = 0;
};

// Runs check(tuple) over the first `limit` k-tuples of [0, n) in colex order.
template <typename Check>
ValidationReport run_tuples(int n, int k, const ValidationOptions& options, Check&& check) {
  ValidationReport report;
  report.tuples_total = binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k));
  const std::uint64_t limit = options.max_tuples == 0
                                  ? report.tuples_total
                                  : std::min(report.tuples_total, options.max_tuples);

  std::vector<ChunkResult> chunks(std::max<unsigned>(worker_count(), 1));
  const std::size_t used = parallel_chunks(limit, 1, [&](std::size_t c, std::uint64_t begin,
                                                        std::uint64_t end) {
    ChunkResult& out = chunks[c];
    if (begin >= end) return;
    auto tuple = colex_unrank(begin, k);
    for (std::uint64_t rank = begin; rank < end; ++rank) {
      const std::optional<FailureReason> failure = check(std::span<const int>(tuple));
      ++out.checked;
      if (failure) {
        if (*failure == FailureReason::NegativeDeterminant) ++out.negatives;
        if (out.failures.size() < options.max_failures)
          out.failures.push_back({tuple, *failure});
      }
      next_colex(tuple);
    }
  });

  std::uint64_t negatives = 0;
  for (std::size_t c = 0; c < used; ++c) {
    report.tuples_checked += chunks[c].checked;
    negatives += chunks[c].negatives;
    for (auto& f : chunks[c].failures)
      if (report.failures.size() < options.max_failures) report.failures.push_back(std::move(f));
  }
  if (negatives > 0 && negatives == report.tuples_checked)
    for (auto& f : report.failures) f.reason = FailureReason::WrongOrientation;

  if (!report.failures.empty())
    report.status = ValidationStatus::Invalid;
  else if (report.tuples_checked < report.tuples_total)
    report.status = ValidationStatus::Unverified;
  return report;
}

}  // namespace

ValidationReport validate_cyclic_projections(const LiftedSequence& s,
                                             const ValidationOptions& options) {
  const int d = s.dimension();
  if (s.size() < static_cast<std::size_t>(d))
    throw TooFewPoints("cyclic projection check needs at least " + std::to_string(d) +
                       " points, got " + std::to_string(s.size()));
  return run_tuples(static_cast<int>(s.size()), d, options,
                    [&](std::span<const int> tuple) -> std::optional<FailureReason> {
                      const auto pts = s.select(tuple);
                      switch (det_sign(projection_matrix(pts))) {
                        case Sign::Positive: return std::nullopt;
                        case Sign::Zero: return FailureReason::ZeroDeterminant;
                        case Sign::Negative: return FailureReason::NegativeDeterminant;
                      }
                      return std::nullopt;
                    });
}

ValidationReport validate_general_position(const LiftedSequence& s,
                                           const ValidationOptions& options) {
  const int d = s.dimension();
  if (s.size() < static_cast<std::size_t>(d + 1))
    throw TooFewPoints("general position check needs at least " + std::to_string(d + 1) +
                       " points, got " + std::to_string(s.size()));
  return run_tuples(static_cast<int>(s.size()), d + 1, options,
                    [&](std::span<const int> tuple) -> std::optional<FailureReason> {
                      const auto pts = s.select(tuple);
                      if (det_sign(affine_matrix(pts)) == Sign::Zero)
                        return FailureReason::ZeroDeterminant;
                      return std::nullopt;
                    });
}

ValidationReport validate_d_general_position(const PlanarSequence& p, int d,
                                             const ValidationOptions& options) {
  if (d < 1) throw InvariantError("d-general position needs d >= 1");
  if (p.size() < static_cast<std::size_t>(d + 1))
    throw TooFewPoints("d-general position check needs at least " + std::to_string(d + 1) +
                       " points, got " + std::to_string(p.size()));
  return run_tuples(static_cast<int>(p.size()), d + 1, options,
                    [&](std::span<const int> tuple) -> std::optional<FailureReason> {
                      const auto pts = p.select(tuple);
                      if (sgn(divided_difference(pts)) == 0)
                        return FailureReason::ZeroDividedDifference;
                      return std::nullopt;
                    });
}

}  // namespace abr
