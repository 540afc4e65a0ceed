#include "abr/coloring_table.hpp"

#include <algorithm>
#include <string>

#include "abr/combinatorics.hpp"
#include "abr/error.hpp"

namespace abr {

ColoringTable::ColoringTable(int n, int r) : n_(n), r_(r) {
  if (r < 2 || n < r)
    throw InvariantError("coloring table needs n >= r >= 2, got n=" + std::to_string(n) +
                         " r=" + std::to_string(r));
  size_ = binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(r));
  if (size_ > kMaxEntries)
    throw TooLarge("coloring table C(" + std::to_string(n) + "," + std::to_string(r) +
                   ") exceeds the table size guard");
  stride_ = static_cast<std::size_t>(r) + 1;
  binom_.resize(static_cast<std::size_t>(n + 1) * stride_);
  for (int m = 0; m <= n; ++m)
    for (int k = 0; k <= r; ++k)
      binom_[static_cast<std::size_t>(m) * stride_ + static_cast<std::size_t>(k)] =
          binomial(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(k));
  bits_.assign((size_ + 63) / 64, 0);
}

void ColoringTable::fill(Color c) {
  std::fill(bits_.begin(), bits_.end(), c == Color::Positive ? ~std::uint64_t{0} : 0);
  if (c == Color::Positive && (size_ & 63)) bits_.back() &= (std::uint64_t{1} << (size_ & 63)) - 1;
}

}  // namespace abr
