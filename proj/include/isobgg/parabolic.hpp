#pragma once

#include <map>
#include <string>
#include <vector>

#include "rational.hpp"
#include "weyl.hpp"

namespace isobgg {

inline bool in_nilradical(const Root &r, const Parabolic &p) {
  auto c = simple_coefficients(r, p.n);
  for (int x : p.crossed)
    if (c[static_cast<std::size_t>(x - 1)] != 0) return true;
  return false;
}

inline std::vector<Root> nilradical_roots(const Parabolic &p) {
  std::vector<Root> r;
  for (const Root &a : positive_roots(p.n))
    if (in_nilradical(a, p)) r.push_back(a);
  return r;
}

inline std::vector<Root> levi_roots(const Parabolic &p) {
  std::vector<Root> r;
  for (const Root &a : positive_roots(p.n))
    if (!in_nilradical(a, p)) r.push_back(a);
  return r;
}

// E with alpha_i(E) = 1 on crossed nodes; half-integral when node n is crossed
inline std::vector<Rational> grading_element(const Parabolic &p) {
  int n = p.n;
  std::vector<Rational> e(static_cast<std::size_t>(n));
  e[static_cast<std::size_t>(n - 1)] = p.is_crossed(n) ? Rational(1, 2) : Rational(0);
  for (int i = n - 1; i >= 1; --i)
    e[static_cast<std::size_t>(i - 1)] = e[static_cast<std::size_t>(i)] + (p.is_crossed(i) ? 1 : 0);
  return e;
}

inline Rational conformal_weight(const Weight &l, const Parabolic &p) {
  if (l.rank() != p.n) throw DimensionError("weight rank differs from parabolic rank");
  auto e = grading_element(p);
  Rational s = 0;
  for (int i = 0; i < p.n; ++i) s += e[static_cast<std::size_t>(i)] * l[i];
  return s;
}

inline long long levi_weyl_order(const Parabolic &p) {
  long long r = 1;
  int start = 1;
  auto fact = [](int m) {
    long long f = 1;
    for (int i = 2; i <= m; ++i) f *= i;
    return f;
  };
  for (int c : p.crossed) {
    r *= fact(c - start + 1);
    start = c + 1;
  }
  int tail = p.n - start + 1;
  if (tail > 0) r *= fact(tail) << tail;
  return r;
}

struct HasseNode {
  WeylElement element;
  Weight weight;
  int length = 0;

  friend bool operator==(const HasseNode &, const HasseNode &) = default;
};

struct HasseEdge {
  int source = 0;
  int target = 0;
  Root label;
  int order_bound = 1;

  friend bool operator==(const HasseEdge &, const HasseEdge &) = default;
};

struct HasseDiagram {
  Parabolic parabolic;
  Weight base_weight;
  std::vector<HasseNode> nodes;
  std::vector<HasseEdge> edges;

  friend bool operator==(const HasseDiagram &, const HasseDiagram &) = default;
};

inline int order_bound(const Weight &source, const Weight &target, const Parabolic &p) {
  Rational d = conformal_weight(source, p) - conformal_weight(target, p);
  if (d <= 0 || d.get_den() != 1)
    throw InternalError("conformal weight drop " + d.get_str() + " is not a positive integer");
  return static_cast<int>(d.get_num().get_si());
}

inline int order_bound(const HasseDiagram &d, const HasseEdge &e) {
  return order_bound(d.nodes[static_cast<std::size_t>(e.source)].weight,
                     d.nodes[static_cast<std::size_t>(e.target)].weight, d.parabolic);
}

namespace detail {

// all strictly l-dominant signed arrangements of the values of x (positive, distinct)
inline void dominant_arrangements(const Parabolic &p, const std::vector<int> &values, std::vector<int> &cur,
                                  std::vector<bool> &used, std::vector<std::vector<int>> &out) {
  int n = p.n;
  int pos = static_cast<int>(cur.size());
  if (pos == n) {
    out.push_back(cur);
    return;
  }
  bool continues_group = pos > 0 && !p.is_crossed(pos);
  bool in_last_group = true;
  for (int c : p.crossed)
    if (c > pos) in_last_group = false;
  if (p.is_crossed(n)) in_last_group = false;
  for (std::size_t idx = 0; idx < values.size(); ++idx) {
    if (used[idx]) continue;
    for (int s : {1, -1}) {
      int v = s * values[idx];
      if (continues_group && cur.back() <= v) continue;
      if (in_last_group && v <= 0) continue;
      used[idx] = true;
      cur.push_back(v);
      dominant_arrangements(p, values, cur, used, out);
      cur.pop_back();
      used[idx] = false;
    }
  }
}

} // namespace detail

// the element w with w(base) = x, for base strictly decreasing and positive
inline WeylElement element_mapping(const Weight &base, const Weight &x) {
  int n = base.rank();
  std::vector<int> perm(static_cast<std::size_t>(n)), signs(static_cast<std::size_t>(n));
  for (int t = 0; t < n; ++t) {
    int j = -1;
    for (int q = 0; q < n; ++q)
      if (base[q] == std::abs(x[t])) j = q;
    if (j < 0) throw InvalidArgument("weight " + to_string(x) + " is not in the orbit of " + to_string(base));
    perm[static_cast<std::size_t>(j)] = t;
    signs[static_cast<std::size_t>(t)] = x[t] > 0 ? 1 : -1;
  }
  return {perm, signs};
}

inline bool is_regular_dominant(const Weight &l) {
  for (int i = 0; i + 1 < l.rank(); ++i)
    if (l[i] <= l[i + 1]) return false;
  return l.rank() > 0 && l[l.rank() - 1] > 0;
}

inline HasseDiagram hasse_diagram(const Parabolic &p, const Weight &base) {
  if (base.rank() != p.n) throw DimensionError("base weight rank differs from parabolic rank");
  if (!is_regular_dominant(base))
    throw InvalidArgument("base weight " + to_string(base) +
                          " is not regular dominant; singular orbits are built by the orbits module");
  int n = p.n;
  Weight r = rho(n);
  std::vector<std::vector<int>> arr;
  std::vector<int> cur;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  detail::dominant_arrangements(p, r.coords, cur, used, arr);

  HasseDiagram d;
  d.parabolic = p;
  d.base_weight = base;
  for (auto &x : arr) {
    WeylElement w = element_mapping(r, Weight(x));
    d.nodes.push_back({w, w.act(base), w.length()});
  }
  std::sort(d.nodes.begin(), d.nodes.end(), [](const HasseNode &a, const HasseNode &b) {
    if (a.length != b.length) return a.length < b.length;
    return a.element < b.element;
  });

  std::map<Weight, int> index;
  for (std::size_t i = 0; i < d.nodes.size(); ++i) index[d.nodes[i].element.act(r)] = static_cast<int>(i);
  auto roots = positive_roots(n);
  for (std::size_t i = 0; i < d.nodes.size(); ++i) {
    Weight x = d.nodes[i].element.act(r);
    for (const Root &a : roots) {
      auto it = index.find(reflection(a, n).act(x));
      if (it == index.end()) continue;
      const HasseNode &t = d.nodes[static_cast<std::size_t>(it->second)];
      if (t.length != d.nodes[i].length + 1) continue;
      HasseEdge e{static_cast<int>(i), it->second, a, 0};
      e.order_bound = order_bound(d, e);
      d.edges.push_back(e);
    }
  }
  std::sort(d.edges.begin(), d.edges.end(),
            [](const HasseEdge &a, const HasseEdge &b) { return std::pair(a.source, a.target) < std::pair(b.source, b.target); });
  return d;
}

inline HasseDiagram hasse_diagram(const Parabolic &p) { return hasse_diagram(p, rho(p.n)); }

} // namespace isobgg
