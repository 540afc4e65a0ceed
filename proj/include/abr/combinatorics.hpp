#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace abr {

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Rank of an increasing tuple in colexicographic order:
/// sum over positions i of C(tuple[i], i + 1).
std::uint64_t colex_rank(std::span<const int> tuple);

/// Inverse of colex_rank for tuples of size k.
std::vector<int> colex_unrank(std::uint64_t rank, int k);

/// Advances an increasing tuple over [0, n) to its lexicographic successor.
/// Returns false after the last tuple.
bool next_combination(std::vector<int>& tuple, int n);

/// Advances an increasing tuple to its colexicographic successor. Unbounded:
/// the caller stops after the wanted number of ranks.
void next_colex(std::vector<int>& tuple);

/// First increasing tuple of size k: (0, 1, ..., k-1).
std::vector<int> first_combination(int k);

/// Calls f(tuple) for every increasing k-subset of [0, n), in lex order.
template <typename F>
void for_each_combination(int n, int k, F&& f) {
  if (k > n || k < 0) return;
  auto t = first_combination(k);
  do {
    f(std::span<const int>(t));
  } while (next_combination(t, n));
}

}  // namespace abr
