#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "abr/coloring_table.hpp"

namespace abr {

struct RecognizerResult {
  bool holds = true;
  /// A violating (r+1)-tuple when holds is false.
  std::optional<std::vector<int>> witness;
};

/// Whenever the two consecutive r-tuples of an (r+1)-tuple agree, every
/// r-subset of it has that color.
RecognizerResult is_transitive(const ColoringTable& c);

/// On every (r+1)-tuple the colors of its r-subsets, in lex order, change
/// at most once.
RecognizerResult is_monotone(const ColoringTable& c);

/// Checks is_monotone(c) => is_transitive(c). The implication is a theorem,
/// so false means a recognizer bug. Returns true when c is not monotone.
bool monotone_implies_transitive_check(const ColoringTable& c);

/// Runs is_transitive / is_monotone and records the strongest structure
/// that holds in the table's tag.
Structure detect_structure(ColoringTable& c);

struct SearchResult {
  int size = 0;
  std::vector<int> witness;
  Color color = Color::Positive;
  /// True when the search tree was fully explored, so size is optimal (or,
  /// with a target, the answer to "is there a k-set" is settled).
  bool exhaustive = false;
  std::uint64_t nodes_visited = 0;
};

struct SearchOptions {
  /// Node limit; 0 means unlimited.
  std::uint64_t budget = 0;
  /// Stop as soon as a monochromatic set of this size is found; 0 searches
  /// for the maximum.
  int target = 0;
  /// Use the table's structure tag. When the tag is Unknown the search runs
  /// detect_structure on a copy first.
  bool use_structure = true;
};

/// Longest increasing index set all of whose r-subsets share a color.
/// Branch and bound over increasing subsets, trying Positive first. Among
/// sets of maximum size the lexicographically least witness is reported
/// (Positive wins an exact tie). A budget overrun leaves exhaustive false
/// and reports the best set found so far.
SearchResult longest_monochromatic(const ColoringTable& c, const SearchOptions& options = {});

enum class ColoringClass { Monotone, Transitive };

struct RamseyOptions {
  /// Refuse n with C(n, r) above this many tuples.
  std::uint64_t max_tuples = 64;
};

struct RamseyResult {
  /// Least n <= n_max such that every class coloring of [n] has a
  /// monochromatic k-set; empty when no n up to n_max forces one.
  std::optional<int> n;
  /// For each n examined (from max(k, r)), whether an avoiding coloring exists.
  std::vector<std::pair<int, bool>> avoiders;
  std::uint64_t nodes_visited = 0;
};

/// Exhaustive small ordered Ramsey numbers for monotone or transitive
/// two-colorings of r-tuples. Colorings are assigned in colex order with
/// class and k-set constraints checked as soon as their tuples are all
/// assigned; the color swap symmetry fixes the first tuple. Throws TooLarge
/// when some n needs more than options.max_tuples tuples.
RamseyResult ramsey_search_tiny(int r, int k, int n_max, ColoringClass cls,
                                const RamseyOptions& options = {});

}  // namespace abr
