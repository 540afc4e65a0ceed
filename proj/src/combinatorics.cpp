#include "abr/combinatorics.hpp"

#include <limits>
#include <numeric>

namespace abr {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) / i, exact at every step; divide by the gcd first
    // so the product fits whenever the result does.
    std::uint64_t num = n - k + i;
    std::uint64_t den = i;
    const std::uint64_t g1 = std::gcd(r, den);
    r /= g1;
    den /= g1;
    const std::uint64_t g2 = std::gcd(num, den);
    num /= g2;
    den /= g2;
    if (r > kMax / num) return kMax;
    r = r * num / den;
  }
  return r;
}

std::uint64_t colex_rank(std::span<const int> tuple) {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < tuple.size(); ++i)
    r += binomial(static_cast<std::uint64_t>(tuple[i]), i + 1);
  return r;
}

std::vector<int> colex_unrank(std::uint64_t rank, int k) {
  std::vector<int> t(static_cast<std::size_t>(k));
  for (int i = k; i >= 1; --i) {
    // Largest c with C(c, i) <= rank.
    int c = i - 1;
    while (binomial(static_cast<std::uint64_t>(c + 1), static_cast<std::uint64_t>(i)) <= rank)
      ++c;
    t[static_cast<std::size_t>(i - 1)] = c;
    rank -= binomial(static_cast<std::uint64_t>(c), static_cast<std::uint64_t>(i));
  }
  return t;
}

bool next_combination(std::vector<int>& tuple, int n) {
  const int k = static_cast<int>(tuple.size());
  int i = k - 1;
  while (i >= 0 && tuple[static_cast<std::size_t>(i)] == n - k + i) --i;
  if (i < 0) return false;
  ++tuple[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < k; ++j)
    tuple[static_cast<std::size_t>(j)] = tuple[static_cast<std::size_t>(j - 1)] + 1;
  return true;
}

void next_colex(std::vector<int>& tuple) {
  const std::size_t k = tuple.size();
  std::size_t i = 0;
  while (i + 1 < k && tuple[i] + 1 == tuple[i + 1]) ++i;
  ++tuple[i];
  for (std::size_t j = 0; j < i; ++j) tuple[j] = static_cast<int>(j);
}

std::vector<int> first_combination(int k) {
  std::vector<int> t(static_cast<std::size_t>(k));
  std::iota(t.begin(), t.end(), 0);
  return t;
}

}  // namespace abr
