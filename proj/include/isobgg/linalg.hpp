#pragma once

#include <utility>
#include <vector>

#include "rational.hpp"

namespace isobgg {

using RationalMatrix = std::vector<std::vector<Rational>>;

// reduced row echelon form in place; returns pivot columns
inline std::vector<int> rref(RationalMatrix &a, int cols) {
  std::vector<int> pivots;
  std::size_t row = 0;
  for (int c = 0; c < cols && row < a.size(); ++c) {
    std::size_t p = row;
    while (p < a.size() && a[p][static_cast<std::size_t>(c)] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    Rational inv = 1 / a[row][static_cast<std::size_t>(c)];
    for (auto &x : a[row]) x *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][static_cast<std::size_t>(c)] == 0) continue;
      Rational f = a[r][static_cast<std::size_t>(c)];
      for (int t = 0; t < cols; ++t) a[r][static_cast<std::size_t>(t)] -= f * a[row][static_cast<std::size_t>(t)];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

inline int rank(RationalMatrix a, int cols) { return static_cast<int>(rref(a, cols).size()); }

// basis of {x : a x = 0}
inline std::vector<std::vector<Rational>> nullspace(RationalMatrix a, int cols) {
  auto pivots = rref(a, cols);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<std::vector<Rational>> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::vector<Rational> x(static_cast<std::size_t>(cols), 0);
    x[static_cast<std::size_t>(f)] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[static_cast<std::size_t>(pivots[r])] = -a[r][static_cast<std::size_t>(f)];
    basis.push_back(std::move(x));
  }
  return basis;
}

} // namespace isobgg
