#pragma once

#include <random>
#include <string>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "rational.hpp"
#include "weyl.hpp"

namespace isobgg {

// coordinates on the big cell of iGr(2, 2n); vectors are indexed by j = 3..n
struct BigCellPoint {
  int n = 3;
  std::vector<Rational> a1, a2, c1, c2;
  Rational b1 = 0, b2 = 0, c12 = 0;

  static BigCellPoint zero(int n) {
    check_rank(n);
    if (n < 3) throw InvalidArgument("big cell coordinates need n >= 3");
    BigCellPoint p;
    p.n = n;
    auto m = static_cast<std::size_t>(n - 2);
    p.a1.assign(m, 0);
    p.a2.assign(m, 0);
    p.c1.assign(m, 0);
    p.c2.assign(m, 0);
    return p;
  }

  int size() const { return static_cast<int>(a1.size() + a2.size() + c1.size() + c2.size()) + 3; }

  bool valid() const {
    auto m = static_cast<std::size_t>(n - 2);
    return n >= 3 && a1.size() == m && a2.size() == m && c1.size() == m && c2.size() == m;
  }

  Rational &a(int i, int j) { return (i == 1 ? a1 : a2).at(static_cast<std::size_t>(j - 3)); }
  Rational &c(int i, int j) { return (i == 1 ? c1 : c2).at(static_cast<std::size_t>(j - 3)); }
  const Rational &a(int i, int j) const { return (i == 1 ? a1 : a2).at(static_cast<std::size_t>(j - 3)); }
  const Rational &c(int i, int j) const { return (i == 1 ? c1 : c2).at(static_cast<std::size_t>(j - 3)); }

  friend bool operator==(const BigCellPoint &, const BigCellPoint &) = default;
};

inline Rational random_rational(std::mt19937_64 &rng, int bound = 50, int max_den = 20) {
  std::uniform_int_distribution<int> num(-bound, bound), den(1, max_den);
  int p = num(rng), q = den(rng);
  return fraction(p, q);
}

inline BigCellPoint random_big_cell_point(int n, std::mt19937_64 &rng) {
  BigCellPoint p = BigCellPoint::zero(n);
  for (auto *v : {&p.a1, &p.a2, &p.c1, &p.c2})
    for (auto &x : *v) x = random_rational(rng);
  p.b1 = random_rational(rng);
  p.b2 = random_rational(rng);
  p.c12 = random_rational(rng);
  return p;
}

// 2n x 2 matrix with columns C_1, C_2
inline RationalMatrix big_cell_matrix(const BigCellPoint &pt) {
  if (!pt.valid()) throw InvalidArgument("big cell point has the wrong number of parameters");
  int n = pt.n;
  RationalMatrix m(static_cast<std::size_t>(2 * n), std::vector<Rational>(2, 0));
  auto at = [&](int row, int col) -> Rational & { return m[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col - 1)]; };
  at(1, 1) = 1;
  at(2, 2) = 1;
  Rational s = 0; // sum a_{1j} c_{2j} - a_{2j} c_{1j}
  for (int j = 3; j <= n; ++j) {
    at(j, 1) = pt.a(1, j);
    at(j, 2) = pt.a(2, j);
    at(n + j, 1) = pt.c(1, j);
    at(n + j, 2) = pt.c(2, j);
    s += pt.a(1, j) * pt.c(2, j) - pt.a(2, j) * pt.c(1, j);
  }
  at(n + 1, 1) = pt.b1;
  at(n + 1, 2) = pt.c12 - s / 2;
  at(n + 2, 1) = pt.c12 + s / 2;
  at(n + 2, 2) = pt.b2;
  return m;
}

// omega(x, y) = x^T J y with J = (0, I; -I, 0)
inline Rational symplectic_pairing(const std::vector<Rational> &x, const std::vector<Rational> &y) {
  if (x.size() != y.size() || x.size() % 2 != 0) throw DimensionError("symplectic pairing needs equal even lengths");
  std::size_t n = x.size() / 2;
  Rational s = 0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * y[n + i] - x[n + i] * y[i];
  return s;
}

inline std::vector<Rational> column(const RationalMatrix &m, int c) {
  std::vector<Rational> v;
  for (auto &row : m) v.push_back(row.at(static_cast<std::size_t>(c)));
  return v;
}

// M^T J M = 0 for a rank-2 matrix with 2 columns
inline bool isotropy_check(const RationalMatrix &m) {
  if (m.empty() || m.size() % 2 != 0) throw DimensionError("isotropy check needs 2n rows");
  for (auto &row : m)
    if (row.size() != 2) throw DimensionError("isotropy check needs 2 columns");
  RationalMatrix t(2, std::vector<Rational>(m.size()));
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < 2; ++c) t[c][r] = m[r][c];
  if (rank(t, static_cast<int>(m.size())) != 2) throw InvalidArgument("isotropy check needs a rank 2 matrix");
  auto x = column(m, 0), y = column(m, 1);
  return symplectic_pairing(x, x) == 0 && symplectic_pairing(x, y) == 0 && symplectic_pairing(y, y) == 0;
}

// alpha C_1 + beta C_2
inline std::vector<Rational> cover_combination(const BigCellPoint &pt, const Rational &alpha, const Rational &beta) {
  auto m = big_cell_matrix(pt);
  std::vector<Rational> v;
  for (auto &row : m) v.push_back(alpha * row[0] + beta * row[1]);
  return v;
}

// chart gamma_1 = 1: C_1 + gamma_2 C_2 = gamma
inline BigCellPoint twistor_cover_solve(const std::vector<Rational> &gamma) {
  if (gamma.size() % 2 != 0 || gamma.size() < 6) throw DimensionError("gamma must have length 2n with n >= 3");
  int n = static_cast<int>(gamma.size() / 2);
  auto g = [&](int i) { return gamma[static_cast<std::size_t>(i - 1)]; };
  if (g(1) != 1) throw InvalidArgument("twistor chart needs gamma_1 = 1, got " + g(1).get_str());
  BigCellPoint p = BigCellPoint::zero(n);
  for (int j = 3; j <= n; ++j) {
    p.a(1, j) = g(j);
    p.c(1, j) = g(n + j);
  }
  p.b1 = g(n + 1) - g(2) * g(n + 2);
  p.c12 = g(n + 2);
  p.b2 = 0;
  return p;
}

// chart delta_2 = 1, the same construction with the columns swapped: delta_1 C_1 + C_2 = delta
inline BigCellPoint twistor_cover_solve_delta(const std::vector<Rational> &delta) {
  if (delta.size() % 2 != 0 || delta.size() < 6) throw DimensionError("delta must have length 2n with n >= 3");
  int n = static_cast<int>(delta.size() / 2);
  auto d = [&](int i) { return delta[static_cast<std::size_t>(i - 1)]; };
  if (d(2) != 1) throw InvalidArgument("twistor chart needs delta_2 = 1, got " + d(2).get_str());
  BigCellPoint p = BigCellPoint::zero(n);
  for (int j = 3; j <= n; ++j) {
    p.a(2, j) = d(j);
    p.c(2, j) = d(n + j);
  }
  p.b2 = d(n + 2) - d(1) * d(n + 1);
  p.c12 = d(n + 1);
  p.b1 = 0;
  return p;
}

struct GeometryReport {
  int n = 3;
  int samples = 0;
  int isotropy_failures = 0;
  int gamma_failures = 0;
  int delta_failures = 0;

  bool pass() const { return isotropy_failures == 0 && gamma_failures == 0 && delta_failures == 0; }
};

inline GeometryReport geometry_check(int n, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  GeometryReport r;
  r.n = n;
  r.samples = samples;
  for (int s = 0; s < samples; ++s) {
    if (!isotropy_check(big_cell_matrix(random_big_cell_point(n, rng)))) ++r.isotropy_failures;
    std::vector<Rational> g(static_cast<std::size_t>(2 * n));
    for (auto &x : g) x = random_rational(rng);
    g[0] = 1;
    if (cover_combination(twistor_cover_solve(g), 1, g[1]) != g) ++r.gamma_failures;
    std::vector<Rational> d(static_cast<std::size_t>(2 * n));
    for (auto &x : d) x = random_rational(rng);
    d[1] = 1;
    if (cover_combination(twistor_cover_solve_delta(d), d[0], 1) != d) ++r.delta_failures;
  }
  return r;
}

} // namespace isobgg
