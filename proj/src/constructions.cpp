#include "abr/constructions.hpp"

#include <algorithm>
#include <string>

#include "abr/ab_coloring.hpp"
#include "abr/combinatorics.hpp"
#include "abr/error.hpp"
#include "abr/random.hpp"
#include "abr/validate.hpp"

namespace abr {

namespace {

// Largest B^-e <= x for x < 1, smallest B^e >= x otherwise.
Rational power_of_base_near(const Rational& x, const Integer& base) {
  Rational p = 1;
  if (x >= 1) {
    while (p < x) p *= base;
  } else {
    while (p > x) p /= base;
  }
  return p;
}

struct LevelStats {
  Rational gap;
  Rational span;
  Rational max_slope;
  Rational max_second;
  Rational min_third;
};

Rational abs_of(const Rational& q) { return sgn(q) < 0 ? Rational(-q) : q; }

LevelStats measure(const std::vector<PlanarPoint>& pts) {
  LevelStats s;
  const int n = static_cast<int>(pts.size());
  s.span = pts.back().t - pts.front().t;
  s.gap = s.span;
  for (int i = 1; i < n; ++i) s.gap = std::min<Rational>(s.gap, pts[i].t - pts[i - 1].t);
  auto max_abs = [&](int k) {
    Rational best = 0;
    for_each_combination(n, k, [&](std::span<const int> c) {
      std::vector<PlanarPoint> sub;
      for (int i : c) sub.push_back(pts[static_cast<std::size_t>(i)]);
      best = std::max<Rational>(best, abs_of(divided_difference_recursive(sub)));
    });
    return best;
  };
  s.max_slope = max_abs(2);
  s.max_second = max_abs(3);
  s.min_third = 1;
  bool first = true;
  for_each_combination(n, 4, [&](std::span<const int> c) {
    std::vector<PlanarPoint> sub;
    for (int i : c) sub.push_back(pts[static_cast<std::size_t>(i)]);
    const Rational v = abs_of(divided_difference_recursive(sub));
    if (first || v < s.min_third) s.min_third = v;
    first = false;
  });
  return s;
}

std::size_t em_size(int m) {
  if (m < 1 || m > 6) throw InvariantError("EM depth must be in [1, 6]");
  return std::size_t{1} << (std::size_t{1} << (m - 1));
}

}  // namespace

EmConstruction build_em(int m, const Integer& base) {
  em_size(m);
  if (base < 2) throw InvariantError("EM base must be at least 2");
  EmParams params;
  params.m = m;
  params.base = base;

  std::vector<PlanarPoint> pts = {{0, 0}, {1, 0}};
  for (int level = 2; level <= m; ++level) {
    const LevelStats s = measure(pts);
    EmLevel step;
    step.bend = level == 2 ? -1 : 1;

    // In normalized coordinates u = (t - t_0) / span the previous level has
    // slopes up to max_slope * span and second differences up to
    // max_second * span^2; the bend must dominate both.
    step.steepness = power_of_base_near(
        base * (1 + s.max_slope * s.span + s.max_second * s.span * s.span), base);

    std::vector<Rational> u, g;
    Rational g_max = 0;
    for (const auto& p : pts) {
      u.push_back((p.t - pts.front().t) / s.span);
      const Rational shift = u.back() - 2;
      g.push_back(p.h + step.bend * step.steepness * shift * shift);
      g_max = std::max<Rational>(g_max, abs_of(g.back()));
    }
    // Vertical size small enough to keep every cross-cluster Delta_3 sign,
    // horizontal size small enough that the copies' own slopes dominate.
    step.delta = power_of_base_near(
        s.min_third * s.gap * s.gap * s.gap / (16 * base * g_max), base);
    step.epsilon = power_of_base_near(
        std::min<Rational>(s.gap / base, step.delta * step.steepness /
                                             (base * (s.max_slope + s.max_second * s.span + 1))),
        base);

    std::vector<PlanarPoint> next;
    next.reserve(pts.size() * pts.size());
    for (const auto& outer : pts)
      for (std::size_t j = 0; j < pts.size(); ++j)
        next.push_back({outer.t + step.epsilon * u[j], outer.h + step.delta * g[j]});
    pts = std::move(next);
    params.levels.push_back(step);
  }
  return {PlanarSequence(std::move(pts)), std::move(params)};
}

EmReport em_verify(const PlanarSequence& p, int m, std::uint64_t budget) {
  if (p.size() != em_size(m))
    throw InvariantError("em_verify expects " + std::to_string(em_size(m)) + " points for m=" +
                         std::to_string(m) + ", got " + std::to_string(p.size()));
  EmReport report;
  report.m = m;
  report.n = p.size();
  if (p.size() < 4) {
    // No quadruple: the whole sequence is trivially monotone.
    report.max_monotone = static_cast<int>(p.size());
    report.exhaustive = true;
    report.search.size = report.max_monotone;
    report.search.exhaustive = true;
    for (int i = 0; i < static_cast<int>(p.size()); ++i) report.search.witness.push_back(i);
  } else {
    const ColoringTable table = divided_difference_table(p, 3);
    SearchOptions options;
    options.budget = budget;
    report.search = longest_monochromatic(table, options);
    report.max_monotone = report.search.size;
    report.exhaustive = report.search.exhaustive;
  }
  report.holds = report.exhaustive && report.max_monotone <= 2 * m;
  return report;
}

EmConstruction em_construction(int m, const EmSearchOptions& options) {
  std::vector<int> last_witness;
  for (Integer base = options.base_start; base <= options.base_limit; base *= 2) {
    EmConstruction c = build_em(m, base);
    if (c.points.size() >= 4) {
      const ValidationReport position = validate_d_general_position(c.points, 3);
      if (!position.valid()) {
        last_witness = position.failures.front().witness;
        continue;
      }
    }
    const EmReport report = em_verify(c.points, m, options.budget);
    if (report.holds) return c;
    last_witness = report.search.witness;
  }
  throw ParameterSearchFailed("no base in range yields a depth-" + std::to_string(m) +
                                  " construction without a " + std::to_string(2 * m + 1) +
                                  "-term third-order monotone subsequence",
                              last_witness);
}

PlanarSequence cupcap_set(int k, int l) {
  if (k < 3 || l < 3) throw InvariantError("cup-cap sets need k, l >= 3");
  std::vector<PlanarPoint> pts;
  if (k == 3) {
    // l-1 points on a concave parabola: all caps, no 3-cup.
    for (int i = 0; i < l - 1; ++i) pts.push_back({i, -i * i});
    return PlanarSequence(std::move(pts));
  }
  if (l == 3) {
    for (int i = 0; i < k - 1; ++i) pts.push_back({i, i * i});
    return PlanarSequence(std::move(pts));
  }
  const PlanarSequence left = cupcap_set(k - 1, l);
  const PlanarSequence right = cupcap_set(k, l - 1);

  // Put the right block far enough right and high that every connecting
  // segment is steeper than any segment inside either block. A cup then
  // takes at most one right point and a cap at most one left point.
  auto max_abs_slope = [](const PlanarSequence& s) {
    Rational best = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j)
        best = std::max<Rational>(best, abs_of((s[j].h - s[i].h) / (s[j].t - s[i].t)));
    return best;
  };
  auto h_range = [](const PlanarSequence& s) {
    Rational lo = s[0].h, hi = s[0].h;
    for (const auto& q : s.points()) {
      lo = std::min<Rational>(lo, q.h);
      hi = std::max<Rational>(hi, q.h);
    }
    return std::pair{lo, hi};
  };
  const Rational shift_t = left[left.size() - 1].t - right[0].t + 1;
  const Rational width = right[right.size() - 1].t + shift_t - left[0].t;
  const Rational slope = std::max(max_abs_slope(left), max_abs_slope(right));
  const Rational shift_h = slope * width + (h_range(left).second - h_range(right).first) + 1;

  pts.assign(left.points().begin(), left.points().end());
  for (const auto& q : right.points()) pts.push_back({q.t + shift_t, q.h + shift_h});
  return PlanarSequence(std::move(pts));
}

PlanarSequence cupcap_extremal(int k) { return cupcap_set(k, k); }

namespace {

std::vector<Rational> increasing_ts(Rng& rng, int n, int bits) {
  std::vector<Rational> t;
  t.reserve(static_cast<std::size_t>(n));
  t.push_back(rng.rational(bits));
  for (int i = 1; i < n; ++i) t.push_back(t.back() + rng.positive_rational(bits));
  return t;
}

}  // namespace

LiftedSequence random_cyclic_instance(int d, int n, std::uint64_t seed,
                                      const RandomInstanceOptions& options) {
  if (d < 2) throw InvariantError("random_cyclic_instance needs d >= 2");
  if (n < d + 1) throw TooFewPoints("random_cyclic_instance needs n >= d+1");
  Rng rng(seed);
  for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
    const auto t = increasing_ts(rng, n, options.bits);
    std::vector<LiftedPoint> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (const auto& ti : t) {
      LiftedPoint x;
      Rational power = ti;
      for (int e = 1; e < d; ++e) {
        x.z.push_back(power);
        power *= ti;
      }
      x.h = rng.rational(options.bits);
      pts.push_back(std::move(x));
    }
    if (options.off_curve_bits > 0) {
      // Noise relative to each coordinate's own magnitude.
      const Integer scale = Integer(1) << (options.bits + options.off_curve_bits);
      for (auto& x : pts)
        for (auto& c : x.z) c += abs_of(c) * rng.rational(options.bits) / scale;
    }
    LiftedSequence s(d, std::move(pts));
    if (validate_cyclic_projections(s).valid() && validate_general_position(s).valid()) return s;
  }
  throw GenerationFailed("no nondegenerate cyclic instance after " +
                         std::to_string(options.max_attempts) + " draws");
}

PlanarSequence random_planar(int n, std::uint64_t seed, int bits) {
  if (n < 1) throw InvariantError("random_planar needs n >= 1");
  Rng rng(seed);
  const auto t = increasing_ts(rng, n, bits);
  std::vector<PlanarPoint> pts;
  pts.reserve(t.size());
  for (const auto& ti : t) pts.push_back({ti, rng.rational(bits)});
  return PlanarSequence(std::move(pts));
}

}  // namespace abr
