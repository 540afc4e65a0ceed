#include "abr/ab_coloring.hpp"

#include <algorithm>
#include <string>

#include "abr/combinatorics.hpp"
#include "abr/error.hpp"
#include "abr/parallel.hpp"
#include "abr/validate.hpp"

namespace abr {

namespace {

std::vector<int> positions(std::size_t count) {
  std::vector<int> v(count);
  for (std::size_t i = 0; i < count; ++i) v[i] = static_cast<int>(i);
  return v;
}

std::size_t tuple_dimension(std::span<const LiftedPoint> x) {
  if (x.empty()) throw ShapeError("empty tuple");
  return x.front().z.size() + 1;
}

}  // namespace

Matrix affine_matrix(std::span<const LiftedPoint> x) {
  const std::size_t d = tuple_dimension(x);
  Matrix m(d + 1, x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j].z.size() + 1 != d) throw ShapeError("ragged lifted tuple");
    m(0, j) = 1;
    for (std::size_t i = 0; i + 1 < d; ++i) m(i + 1, j) = x[j].z[i];
    m(d, j) = x[j].h;
  }
  return m;
}

Matrix projection_matrix(std::span<const std::vector<Rational>> z) {
  if (z.empty()) throw ShapeError("empty tuple");
  const std::size_t dim = z.front().size();
  Matrix m(dim + 1, z.size());
  for (std::size_t j = 0; j < z.size(); ++j) {
    if (z[j].size() != dim) throw ShapeError("ragged projected tuple");
    m(0, j) = 1;
    for (std::size_t i = 0; i < dim; ++i) m(i + 1, j) = z[j][i];
  }
  return m;
}

Matrix projection_matrix(std::span<const LiftedPoint> x) {
  std::vector<std::vector<Rational>> z;
  z.reserve(x.size());
  for (const auto& p : x) z.push_back(p.z);
  return projection_matrix(z);
}

RadonCertificate radon_certificate(std::span<const std::vector<Rational>> z) {
  if (z.empty() || z.size() != z.front().size() + 2)
    throw ShapeError("radon_certificate needs d+1 points of R^{d-1}");
  const Matrix q = projection_matrix(z);
  const std::size_t m = z.size();

  // Kernel vector (m_0, -m_1, m_2, ...) of (1; z); cyclic order type means
  // every m_j > 0, so the even and odd parts carry opposite signs.
  std::vector<Rational> minors(m);
  for (std::size_t j = 0; j < m; ++j) {
    minors[j] = det(q.without_column(j));
    if (sgn(minors[j]) == 0)
      throw DegenerateError("projected minor " + std::to_string(j) + " vanishes", positions(m));
    if (sgn(minors[j]) < 0)
      throw WrongOrientation("projected minor " + std::to_string(j) + " is negative",
                             positions(m));
  }

  RadonCertificate cert;
  Rational even_sum = 0;
  for (std::size_t j = 0; j < m; j += 2) even_sum += minors[j];
  cert.lambda.resize(m);
  for (std::size_t j = 0; j < m; ++j) cert.lambda[j] = minors[j] / even_sum;

  const std::size_t dim = z.front().size();
  std::vector<Rational> even_point(dim), odd_point(dim);
  Rational odd_sum = 0;
  for (std::size_t j = 0; j < m; ++j) {
    auto& target = j % 2 ? odd_point : even_point;
    for (std::size_t i = 0; i < dim; ++i) target[i] += cert.lambda[j] * z[j][i];
    if (j % 2) {
      odd_sum += cert.lambda[j];
      cert.odd_part.push_back(static_cast<int>(j));
    } else {
      cert.even_part.push_back(static_cast<int>(j));
    }
  }
  if (odd_sum != 1 || even_point != odd_point)
    throw IdentityViolation("Radon combinations disagree");
  cert.radon_point = std::move(even_point);
  return cert;
}

HeightColoring color_by_heights(std::span<const LiftedPoint> x) {
  std::vector<std::vector<Rational>> z;
  z.reserve(x.size());
  for (const auto& p : x) z.push_back(p.z);

  HeightColoring out{radon_certificate(z), {}, Color::Negative};
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (j % 2)
      out.heights.h_odd += out.radon.lambda[j] * x[j].h;
    else
      out.heights.h_even += out.radon.lambda[j] * x[j].h;
  }
  const std::size_t d = x.size() - 1;
  Rational oriented = out.heights.h_even - out.heights.h_odd;
  if (d % 2) oriented = -oriented;
  if (sgn(oriented) == 0)
    throw DegenerateError("lifted heights over the Radon point tie", positions(x.size()));
  out.color = sgn(oriented) > 0 ? Color::Positive : Color::Negative;
  return out;
}

Color color_by_determinant(std::span<const LiftedPoint> x) {
  if (x.size() != tuple_dimension(x) + 1)
    throw ShapeError("color_by_determinant needs d+1 points of R^d");
  switch (det_sign(affine_matrix(x))) {
    case Sign::Positive: return Color::Positive;
    case Sign::Negative: return Color::Negative;
    case Sign::Zero: break;
  }
  throw DegenerateError("lifted determinant vanishes", positions(x.size()));
}

DiagonalCrossing diagonal_crossing(std::span<const LiftedPoint> x) {
  if (x.size() != 4 || tuple_dimension(x) != 3)
    throw ShapeError("diagonal_crossing needs four points of R^3");
  const auto& z0 = x[0].z;
  const auto& z1 = x[1].z;
  const auto& z2 = x[2].z;
  const auto& z3 = x[3].z;
  // z0 + s (z2 - z0) = z1 + u (z3 - z1)
  const Rational ax = z2[0] - z0[0], ay = z2[1] - z0[1];
  const Rational bx = z3[0] - z1[0], by = z3[1] - z1[1];
  const Rational cx = z1[0] - z0[0], cy = z1[1] - z0[1];
  const Rational den = bx * ay - ax * by;
  if (sgn(den) == 0) throw DegenerateError("projected diagonals are parallel", positions(4));

  DiagonalCrossing c;
  c.s = (bx * cy - cx * by) / den;
  c.u = (ax * cy - cx * ay) / den;
  if (!(sgn(c.s) > 0 && c.s < 1 && sgn(c.u) > 0 && c.u < 1))
    throw DegenerateError("projected diagonals do not cross", positions(4));
  c.point = {z0[0] + c.s * ax, z0[1] + c.s * ay};
  c.even_height = x[0].h + c.s * (x[2].h - x[0].h);
  c.odd_height = x[1].h + c.u * (x[3].h - x[1].h);
  if (c.even_height == c.odd_height)
    throw DegenerateError("lifted diagonals meet over the crossing", positions(4));
  return c;
}

bool calibrate_crossing_convention() {
  // Unit square, counterclockwise, with the third corner lifted.
  const std::vector<LiftedPoint> reference = {
      {{0, 0}, 0}, {{1, 0}, 0}, {{1, 1}, 1}, {{0, 1}, 0}};
  const bool even_above = diagonal_crossing(reference).even_above();
  const bool positive = color_by_heights(reference).color == Color::Positive;
  return even_above == positive;
}

Color color_by_crossing(std::span<const LiftedPoint> x) {
  const bool even_above = diagonal_crossing(x).even_above();
  return even_above == kEvenAboveIsPositive ? Color::Positive : Color::Negative;
}

Rational divided_difference_recursive(std::span<const PlanarPoint> p) {
  if (p.empty()) throw InvariantError("divided difference of no points");
  std::vector<Rational> level;
  level.reserve(p.size());
  for (const auto& q : p) level.push_back(q.h);
  for (std::size_t order = 1; order < p.size(); ++order) {
    for (std::size_t i = 0; i + order < p.size(); ++i) {
      const Rational span = p[i + order].t - p[i].t;
      if (sgn(span) == 0) throw InvariantError("divided difference with repeated t");
      level[i] = (level[i + 1] - level[i]) / span;
    }
    level.pop_back();
  }
  return level.front();
}

Rational divided_difference_closed_form(std::span<const PlanarPoint> p) {
  if (p.empty()) throw InvariantError("divided difference of no points");
  Rational sum = 0;
  for (std::size_t j = 0; j < p.size(); ++j) {
    Rational den = 1;
    for (std::size_t r = 0; r < p.size(); ++r)
      if (r != j) den *= p[j].t - p[r].t;
    if (sgn(den) == 0) throw InvariantError("divided difference with repeated t");
    sum += p[j].h / den;
  }
  return sum;
}

Rational divided_difference(std::span<const PlanarPoint> p) {
  Rational recursive = divided_difference_recursive(p);
  if (recursive != divided_difference_closed_form(p))
    throw IdentityViolation("recursive and closed-form divided differences disagree");
  return recursive;
}

Rational vandermonde_divdiff_residual(std::span<const PlanarPoint> p) {
  if (p.size() < 2) throw InvariantError("Vandermonde residual needs at least two points");
  const std::size_t n = p.size();
  Matrix m(n, n);
  Rational vandermonde = 1;
  for (std::size_t j = 0; j < n; ++j) {
    Rational power = 1;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      m(i, j) = power;
      power *= p[j].t;
    }
    m(n - 1, j) = p[j].h;
    for (std::size_t i = 0; i < j; ++i) vandermonde *= p[j].t - p[i].t;
  }
  return det(m) - vandermonde * divided_difference(p);
}

namespace {

int sign_changes(std::span<const Rational> values) {
  int changes = 0;
  int last = 0;
  for (const auto& v : values) {
    const int s = sgn(v);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

OneSwitchCertificate one_switch_certificate(std::span<const LiftedPoint> x) {
  const std::size_t d = tuple_dimension(x);
  if (d < 2 || x.size() != d + 2)
    throw ShapeError("one_switch_certificate needs d+2 points of R^d with d >= 2");
  OneSwitchCertificate cert;
  const Matrix p = affine_matrix(x);
  const Matrix q = p.without_row(d);
  const std::size_t last = d + 1;

  cert.d_sequence.reserve(d + 2);
  for (std::size_t j = 0; j <= last; ++j) cert.d_sequence.push_back(det(p.without_column(j)));
  cert.delta.emplace(complementary_minors(q));
  const MinorTable& delta = *cert.delta;

  cert.switch_count = sign_changes(cert.d_sequence);
  std::vector<Rational> lex(cert.d_sequence.rbegin(), cert.d_sequence.rend());
  cert.lex_switch_count = sign_changes(lex);

  for (std::size_t a = 0; a <= last; ++a)
    for (std::size_t b = a + 1; b <= last; ++b)
      if (sgn(delta(a, b)) <= 0) {
        cert.status = CertificateStatus::Degenerate;
        cert.failure = "projected minor delta(" + std::to_string(a) + "," + std::to_string(b) +
                       ") is not positive";
        return cert;
      }

  for (std::size_t j = 1; j <= d; ++j)
    cert.rho_sequence.push_back(delta(j, last) / delta(0, j));

  auto violation = [&](std::string why) {
    cert.status = CertificateStatus::IdentityViolation;
    cert.failure = std::move(why);
    return cert;
  };

  const Rational& d0 = cert.d_sequence.front();
  const Rational& dl = cert.d_sequence.back();
  for (std::size_t j = 1; j <= d; ++j)
    if (cert.d_sequence[j] * delta(0, last) != d0 * delta(j, last) + dl * delta(0, j))
      return violation("D_" + std::to_string(j) + " is not the kernel combination of D_0 and D_" +
                       std::to_string(last));
  for (std::size_t j = 1; j < d; ++j) {
    if (sgn(plucker_residual(delta, 0, j, j + 1, last)) != 0)
      return violation("Plucker relation fails at (0," + std::to_string(j) + "," +
                       std::to_string(j + 1) + "," + std::to_string(last) + ")");
    if (!(cert.rho_sequence[j - 1] > cert.rho_sequence[j]))
      return violation("rho is not strictly decreasing at " + std::to_string(j));
  }
  if (cert.switch_count > 1 || cert.lex_switch_count != cert.switch_count)
    return violation("colors switch " + std::to_string(cert.switch_count) + " times");

  for (std::size_t j = 0; j <= last; ++j)
    if (sgn(cert.d_sequence[j]) == 0) {
      cert.status = CertificateStatus::Degenerate;
      cert.failure = "D_" + std::to_string(j) + " vanishes";
      return cert;
    }
  return cert;
}

ColoringTable color_table(const LiftedSequence& s, const ColorTableOptions& options) {
  const int d = s.dimension();
  const int n = static_cast<int>(s.size());
  if (n < d + 1)
    throw TooFewPoints("color_table needs at least " + std::to_string(d + 1) + " points");

  if (options.check_projections) {
    const ValidationReport report = validate_cyclic_projections(s);
    if (!report.valid()) {
      const auto& f = report.failures.front();
      if (f.reason == FailureReason::WrongOrientation)
        throw WrongOrientation("projections have reversed cyclic orientation", f.witness);
      throw DegenerateError(
          "projections are not cyclic (" + std::string(to_string(f.reason)) + ")", f.witness);
    }
  }

  ColoringTable table(n, d + 1);
  parallel_chunks(table.size(), 64, [&](std::size_t, std::uint64_t begin, std::uint64_t end) {
    if (begin >= end) return;
    auto tuple = colex_unrank(begin, d + 1);
    for (std::uint64_t rank = begin; rank < end; ++rank) {
      const Sign sign = det_sign(affine_matrix(s.select(tuple)));
      if (sign == Sign::Zero) throw DegenerateError("lifted determinant vanishes", tuple);
      table.set_at(rank, sign == Sign::Positive ? Color::Positive : Color::Negative);
      next_colex(tuple);
    }
  });
  return table;
}

ColoringTable divided_difference_table(const PlanarSequence& p, int d) {
  const int n = static_cast<int>(p.size());
  if (d < 1 || n < d + 1)
    throw TooFewPoints("divided_difference_table needs at least d+1 points");
  if (d + 1 < 2) throw InvariantError("table uniformity must be at least 2");
  ColoringTable table(n, d + 1);
  parallel_chunks(table.size(), 64, [&](std::size_t, std::uint64_t begin, std::uint64_t end) {
    if (begin >= end) return;
    auto tuple = colex_unrank(begin, d + 1);
    for (std::uint64_t rank = begin; rank < end; ++rank) {
      const int s = sgn(divided_difference_recursive(p.select(tuple)));
      if (s == 0) throw DegenerateError("divided difference vanishes", tuple);
      table.set_at(rank, s > 0 ? Color::Positive : Color::Negative);
      next_colex(tuple);
    }
  });
  return table;
}

}  // namespace abr
