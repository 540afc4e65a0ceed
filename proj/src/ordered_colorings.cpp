#include "abr/ordered_colorings.hpp"

#include <algorithm>
#include <string>

#include "abr/combinatorics.hpp"
#include "abr/error.hpp"

namespace abr {

namespace {

// Colors of the r-subsets of an (r+1)-tuple, in lex order: the subset
// without the last element comes first, the one without the first last.
void lex_subset_colors(const ColoringTable& c, std::span<const int> big, std::vector<int>& sub,
                       std::vector<Color>& out) {
  const std::size_t r = big.size() - 1;
  out.clear();
  for (std::size_t skip = r + 1; skip-- > 0;) {
    sub.clear();
    for (std::size_t i = 0; i <= r; ++i)
      if (i != skip) sub.push_back(big[i]);
    out.push_back(c.color(sub));
  }
}

template <typename Violates>
RecognizerResult scan_packets(const ColoringTable& c, Violates&& violates) {
  RecognizerResult result;
  if (c.n() < c.r() + 1) return result;
  std::vector<int> sub;
  std::vector<Color> colors;
  auto big = first_combination(c.r() + 1);
  do {
    lex_subset_colors(c, big, sub, colors);
    if (violates(colors)) {
      result.holds = false;
      result.witness = big;
      return result;
    }
  } while (next_combination(big, c.n()));
  return result;
}

}  // namespace

RecognizerResult is_transitive(const ColoringTable& c) {
  return scan_packets(c, [](const std::vector<Color>& colors) {
    // colors.front() is the first consecutive r-tuple, colors.back() the second.
    if (colors.front() != colors.back()) return false;
    return std::any_of(colors.begin(), colors.end(),
                       [&](Color x) { return x != colors.front(); });
  });
}

RecognizerResult is_monotone(const ColoringTable& c) {
  return scan_packets(c, [](const std::vector<Color>& colors) {
    int changes = 0;
    for (std::size_t i = 1; i < colors.size(); ++i) changes += colors[i] != colors[i - 1];
    return changes > 1;
  });
}

bool monotone_implies_transitive_check(const ColoringTable& c) {
  if (!is_monotone(c).holds) return true;
  return is_transitive(c).holds;
}

Structure detect_structure(ColoringTable& c) {
  Structure s = Structure::Unknown;
  if (is_monotone(c).holds)
    s = Structure::Monotone;
  else if (is_transitive(c).holds)
    s = Structure::Transitive;
  c.set_structure(s);
  return s;
}

namespace {

class MonochromaticSearch {
 public:
  MonochromaticSearch(const ColoringTable& table, const SearchOptions& options, bool windows)
      : table_(table), options_(options), windows_(windows), r_(table.r()) {}

  // Returns false when the budget ran out.
  bool run(Color color) {
    color_ = color;
    std::vector<int> all(static_cast<std::size_t>(table_.n()));
    for (int i = 0; i < table_.n(); ++i) all[static_cast<std::size_t>(i)] = i;
    set_.clear();
    return dfs(all);
  }

  SearchResult& best() { return best_; }
  std::uint64_t nodes() const { return nodes_; }
  bool target_reached() const { return options_.target > 0 && best_.size >= options_.target; }

 private:
  bool dfs(const std::vector<int>& candidates) {
    if (options_.budget && nodes_ >= options_.budget) return false;
    ++nodes_;
    const int size = static_cast<int>(set_.size());
    if (better(size)) {
      best_.size = size;
      best_.witness = set_;
      best_.color = color_;
      if (target_reached()) return true;
    }
    std::vector<int> next;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const int remaining = static_cast<int>(candidates.size() - i);
      if (size + remaining < best_.size) break;
      if (size + remaining == best_.size && !can_tie()) break;
      const int v = candidates[i];
      next.clear();
      for (std::size_t j = i + 1; j < candidates.size(); ++j)
        if (compatible(v, candidates[j])) next.push_back(candidates[j]);
      set_.push_back(v);
      const bool ok = dfs(next);
      set_.pop_back();
      if (!ok) return false;
      if (target_reached()) return true;
    }
    return true;
  }

  bool better(int size) const {
    if (size > best_.size) return true;
    // Equal size: only a later color can improve, through a smaller witness.
    return size == best_.size && size > 0 && best_.color != color_ && set_ < best_.witness;
  }

  bool can_tie() const { return best_.size > 0 && best_.color != color_; }

  // Would set_ + {v, w} stay monochromatic, given set_ + {v} and set_ + {w} are?
  bool compatible(int v, int w) {
    const int size = static_cast<int>(set_.size());
    if (size + 2 < r_) return true;
    sub_.assign(static_cast<std::size_t>(r_), 0);
    if (windows_) {
      for (int i = 0; i < r_ - 2; ++i)
        sub_[static_cast<std::size_t>(i)] = set_[static_cast<std::size_t>(size - (r_ - 2) + i)];
      sub_[static_cast<std::size_t>(r_ - 2)] = v;
      sub_[static_cast<std::size_t>(r_ - 1)] = w;
      return table_.color(sub_) == color_;
    }
    // Every r-subset containing v and w plus r-2 members of set_.
    const int pick = r_ - 2;
    if (pick == 0) {
      sub_[0] = v;
      sub_[1] = w;
      return table_.color(sub_) == color_;
    }
    auto choice = first_combination(pick);
    do {
      for (int i = 0; i < pick; ++i)
        sub_[static_cast<std::size_t>(i)] = set_[static_cast<std::size_t>(choice[static_cast<std::size_t>(i)])];
      sub_[static_cast<std::size_t>(pick)] = v;
      sub_[static_cast<std::size_t>(pick + 1)] = w;
      if (table_.color(sub_) != color_) return false;
    } while (next_combination(choice, size));
    return true;
  }

  const ColoringTable& table_;
  const SearchOptions& options_;
  bool windows_;
  int r_;
  Color color_ = Color::Positive;
  std::vector<int> set_;
  std::vector<int> sub_;
  SearchResult best_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

SearchResult longest_monochromatic(const ColoringTable& c, const SearchOptions& options) {
  Structure structure = c.structure();
  if (options.use_structure && structure == Structure::Unknown) {
    ColoringTable copy = c;
    structure = detect_structure(copy);
  }
  const bool windows = options.use_structure && structure != Structure::Unknown;

  MonochromaticSearch search(c, options, windows);
  bool complete = search.run(Color::Positive);
  if (complete && !search.target_reached()) complete = search.run(Color::Negative);

  SearchResult result = search.best();
  result.exhaustive = complete;
  result.nodes_visited = search.nodes();
  return result;
}

namespace {

class RamseySearch {
 public:
  RamseySearch(int n, int r, int k, ColoringClass cls) : r_(r), cls_(cls) {
    const std::uint64_t count = binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(r));
    tuples_ = static_cast<std::size_t>(count);
    class_checks_.resize(tuples_);
    kset_checks_.resize(tuples_);
    colors_.assign(tuples_, 0);

    // A constraint is attached to the colex-largest tuple it mentions, which
    // is assigned last.
    std::vector<int> sub;
    for_each_combination(n, r + 1, [&](std::span<const int> big) {
      std::vector<std::size_t> ranks;
      for (std::size_t skip = big.size(); skip-- > 0;) {
        sub.clear();
        for (std::size_t i = 0; i < big.size(); ++i)
          if (i != skip) sub.push_back(big[i]);
        ranks.push_back(static_cast<std::size_t>(colex_rank(sub)));
      }
      const std::size_t owner = *std::max_element(ranks.begin(), ranks.end());
      class_checks_[owner].push_back(std::move(ranks));
    });
    for_each_combination(n, k, [&](std::span<const int> kset) {
      std::vector<std::size_t> ranks;
      for_each_combination(k, r, [&](std::span<const int> pick) {
        sub.clear();
        for (int i : pick) sub.push_back(kset[static_cast<std::size_t>(i)]);
        ranks.push_back(static_cast<std::size_t>(colex_rank(sub)));
      });
      const std::size_t owner = *std::max_element(ranks.begin(), ranks.end());
      kset_checks_[owner].push_back(std::move(ranks));
    });
  }

  /// True when some class coloring avoids every monochromatic k-set.
  bool avoider_exists() {
    if (tuples_ == 0) return true;
    return assign(0);
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  bool assign(std::size_t i) {
    if (i == tuples_) return true;
    // The first tuple is fixed by the color swap symmetry.
    const int options = i == 0 ? 1 : 2;
    for (int c = 0; c < options; ++c) {
      ++nodes_;
      colors_[i] = static_cast<std::uint8_t>(c);
      if (consistent(i) && assign(i + 1)) return true;
    }
    return false;
  }

  bool consistent(std::size_t i) const {
    for (const auto& kset : kset_checks_[i]) {
      const auto first = colors_[kset.front()];
      if (std::all_of(kset.begin(), kset.end(), [&](std::size_t t) { return colors_[t] == first; }))
        return false;
    }
    for (const auto& packet : class_checks_[i]) {
      if (cls_ == ColoringClass::Monotone) {
        int changes = 0;
        for (std::size_t j = 1; j < packet.size(); ++j)
          changes += colors_[packet[j]] != colors_[packet[j - 1]];
        if (changes > 1) return false;
      } else {
        const auto first = colors_[packet.front()];
        if (first == colors_[packet.back()] &&
            std::any_of(packet.begin(), packet.end(),
                        [&](std::size_t t) { return colors_[t] != first; }))
          return false;
      }
    }
    return true;
  }

  int r_;
  ColoringClass cls_;
  std::size_t tuples_ = 0;
  std::vector<std::vector<std::vector<std::size_t>>> class_checks_;
  std::vector<std::vector<std::vector<std::size_t>>> kset_checks_;
  std::vector<std::uint8_t> colors_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

RamseyResult ramsey_search_tiny(int r, int k, int n_max, ColoringClass cls,
                                const RamseyOptions& options) {
  if (r < 2) throw InvariantError("ramsey_search_tiny needs r >= 2");
  if (k < r) throw InvariantError("ramsey_search_tiny needs k >= r");
  RamseyResult result;
  for (int n = k; n <= n_max; ++n) {
    const std::uint64_t tuples = binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(r));
    if (tuples > options.max_tuples)
      throw TooLarge("C(" + std::to_string(n) + "," + std::to_string(r) + ") = " +
                     std::to_string(tuples) + " tuples exceeds the enumeration guard");
    RamseySearch search(n, r, k, cls);
    const bool avoids = search.avoider_exists();
    result.nodes_visited += search.nodes();
    result.avoiders.emplace_back(n, avoids);
    if (!avoids) {
      result.n = n;
      break;
    }
  }
  return result;
}

}  // namespace abr
