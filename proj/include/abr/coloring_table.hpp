#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace abr {

enum class Color : std::uint8_t { Negative = 0, Positive = 1 };

inline Color opposite(Color c) {
  return c == Color::Positive ? Color::Negative : Color::Positive;
}
inline char to_char(Color c) { return c == Color::Positive ? '+' : '-'; }

/// What is known about a table's structure. Search uses it to check only
/// the newest consecutive r-tuple when extending a candidate set.
enum class Structure : std::uint8_t { Unknown, Transitive, Monotone };

/// Two-coloring of all increasing r-subsets of [0, n), one bit per tuple,
/// indexed by colexicographic rank.
class ColoringTable {
 public:
  /// Largest number of tuples a table may hold.
  static constexpr std::uint64_t kMaxEntries = std::uint64_t{1} << 32;

  /// All tuples start Negative. Throws InvariantError unless n >= r >= 2,
  /// TooLarge when C(n, r) exceeds kMaxEntries.
  ColoringTable(int n, int r);

  int n() const noexcept { return n_; }
  int r() const noexcept { return r_; }
  std::uint64_t size() const noexcept { return size_; }

  std::uint64_t rank(std::span<const int> tuple) const {
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < tuple.size(); ++i)
      k += binom_[static_cast<std::size_t>(tuple[i]) * stride_ + i + 1];
    return k;
  }

  Color color_at(std::uint64_t rank) const {
    return (bits_[rank >> 6] >> (rank & 63)) & 1 ? Color::Positive : Color::Negative;
  }
  Color color(std::span<const int> tuple) const { return color_at(rank(tuple)); }

  void set_at(std::uint64_t rank, Color c) {
    const std::uint64_t mask = std::uint64_t{1} << (rank & 63);
    if (c == Color::Positive)
      bits_[rank >> 6] |= mask;
    else
      bits_[rank >> 6] &= ~mask;
  }
  void set(std::span<const int> tuple, Color c) { set_at(rank(tuple), c); }

  /// Sets every tuple to c.
  void fill(Color c);

  Structure structure() const noexcept { return structure_; }
  void set_structure(Structure s) noexcept { structure_ = s; }

  /// Equality compares contents only, not the structure tag.
  friend bool operator==(const ColoringTable& a, const ColoringTable& b) {
    return a.n_ == b.n_ && a.r_ == b.r_ && a.bits_ == b.bits_;
  }

 private:
  int n_;
  int r_;
  std::uint64_t size_;
  std::size_t stride_;
  std::vector<std::uint64_t> binom_;  // binom_[m * stride_ + k] = C(m, k)
  std::vector<std::uint64_t> bits_;
  Structure structure_ = Structure::Unknown;
};

}  // namespace abr
