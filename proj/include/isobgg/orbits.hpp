#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "parabolic.hpp"
#include "weyl.hpp"

namespace isobgg {

inline void check_k(int n, int k) {
  check_rank(n);
  if (k < 0 || k > n - 1)
    throw InvalidArgument("k must lie in 0.." + std::to_string(n - 1) + ", got " + std::to_string(k));
}

// rho-shifted: (n-1, ..., k+1, k, k, k-1, ..., 1), or (n-1, ..., 1, 0) for k = 0
inline Weight lambda_k(int n, int k) {
  check_k(n, k);
  Weight w;
  for (int v = n; v >= 1; --v) w.coords.push_back(v > k ? v - 1 : v);
  return w;
}

enum class Sign { Plus, Minus };

inline int sign_value(Sign s) { return s == Sign::Plus ? 1 : -1; }
inline std::string to_string(Sign s) { return s == Sign::Plus ? "+" : "-"; }

inline Sign parse_sign(const std::string &s) {
  if (s == "+" || s == "plus" || s == "positive") return Sign::Plus;
  if (s == "-" || s == "minus" || s == "negative") return Sign::Minus;
  throw InvalidArgument("sign must be + or -, got " + s);
}

// (+-k | n-1, ..., 1)
inline Weight tilde_lambda(int n, int k, Sign s) {
  check_k(n, k);
  if (k == 0 && s == Sign::Minus) throw InvalidArgument("k = 0 has a single conjugate; use sign +");
  Weight w{sign_value(s) * k};
  for (int v = n - 1; v >= 1; --v) w.coords.push_back(v);
  return w;
}

struct IgrChain {
  std::vector<Weight> terms;
  std::vector<int> order_bounds; // order_bounds[i] bounds the map terms[i] -> terms[i+1]
};

// regular BGG resolution over the isotropic 1-Grassmannian, 2n terms
inline IgrChain igr1_bgg(int n) {
  check_rank(n);
  IgrChain c;
  Parabolic p(n, {1});
  std::vector<int> firsts;
  for (int v = n; v >= 1; --v) firsts.push_back(v);
  for (int v = 1; v <= n; ++v) firsts.push_back(-v);
  for (int f : firsts) {
    Weight w{f};
    for (int v = n; v >= 1; --v)
      if (v != std::abs(f)) w.coords.push_back(v);
    c.terms.push_back(w);
  }
  for (std::size_t i = 0; i + 1 < c.terms.size(); ++i) c.order_bounds.push_back(order_bound(c.terms[i], c.terms[i + 1], p));
  return c;
}

// coordinatewise x - sign(x) when |x| > k
inline std::pair<int, int> placement_to_weight(std::pair<int, int> x, int k) {
  auto f = [k](int v) { return std::abs(v) > k ? v - (v > 0 ? 1 : -1) : v; };
  return {f(x.first), f(x.second)};
}

// all strictly p-dominant vectors in the Weyl orbit of nu, sorted
inline std::vector<Weight> dominant_conjugates(const Weight &nu, const Parabolic &p) {
  if (nu.rank() != p.n) throw DimensionError("weight rank differs from parabolic rank");
  std::vector<int> values;
  for (int x : nu.coords) values.push_back(std::abs(x));
  std::set<Weight> out;
  std::vector<int> cur;
  std::vector<bool> used(values.size(), false);
  auto rec = [&](auto &&self) -> void {
    int pos = static_cast<int>(cur.size());
    if (pos == p.n) {
      Weight w(cur);
      if (is_dominant(w, p, Dominance::StrictlyForLevi)) out.insert(w);
      return;
    }
    bool continues_group = pos > 0 && !p.is_crossed(pos);
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (used[i]) continue;
      for (int s : {1, -1}) {
        if (s == -1 && values[i] == 0) continue;
        int v = s * values[i];
        if (continues_group && cur.back() <= v) continue;
        used[i] = true;
        cur.push_back(v);
        self(self);
        cur.pop_back();
        used[i] = false;
      }
    }
  };
  rec(rec);
  return {out.begin(), out.end()};
}

enum class ArrowKind { Standard, Identity, SuppressedTrivial, NonStandard };

inline std::string to_string(ArrowKind k) {
  switch (k) {
  case ArrowKind::Standard: return "standard";
  case ArrowKind::Identity: return "identity";
  case ArrowKind::SuppressedTrivial: return "suppressed-trivial";
  case ArrowKind::NonStandard: return "non-standard";
  }
  return "";
}

inline ArrowKind parse_arrow_kind(const std::string &s) {
  for (auto k : {ArrowKind::Standard, ArrowKind::Identity, ArrowKind::SuppressedTrivial, ArrowKind::NonStandard})
    if (to_string(k) == s) return k;
  throw ParseError("unknown arrow kind " + s);
}

using Placement = std::pair<int, int>;

struct OrbitNode {
  Placement placement;
  Weight weight;
  std::vector<int> full_tail; // weight coordinates 3..n

  friend bool operator==(const OrbitNode &, const OrbitNode &) = default;
};

struct OrbitArrow {
  int source = 0;
  int target = 0;
  ArrowKind kind = ArrowKind::Standard;
  std::optional<Root> label;
  std::optional<int> order_bound;

  friend bool operator==(const OrbitArrow &, const OrbitArrow &) = default;
};

struct OrbitDiagram {
  int n = 3;
  std::optional<int> k; // absent for the regular orbit
  Weight base;          // g-dominant, rho-shifted
  std::vector<OrbitNode> nodes;
  std::vector<OrbitArrow> arrows;
  std::vector<std::pair<int, int>> coincidences;
  std::vector<Placement> excluded; // regular placements whose weight is not strictly l-dominant
  bool conjectural_complex = false;

  int find(Placement x) const {
    for (std::size_t i = 0; i < nodes.size(); ++i)
      if (nodes[i].placement == x) return static_cast<int>(i);
    return -1;
  }

  friend bool operator==(const OrbitDiagram &, const OrbitDiagram &) = default;
};

namespace detail {

inline bool suppressed_trivial(int k, const Weight &s, const Weight &t) {
  if (k == 1) {
    if (s[0] == t[0] && s[1] == 1 && t[1] == -1) return true;
    if (s[1] == t[1] && s[0] == 1 && t[0] == -1) return true;
  }
  if (k == 0) return s[0] == 1 && s[1] == 0 && t[0] == 0 && t[1] == -1;
  return false;
}

} // namespace detail

// orbit of any g-dominant nu projected on the crossed={2} grid; nu = rho gives the regular picture
inline OrbitDiagram orbit_diagram(const Weight &nu) {
  int n = nu.rank();
  check_rank(n);
  Parabolic p(n, {2});
  if (!is_dominant(nu, p, Dominance::ForG)) throw InvalidArgument("base weight " + to_string(nu) + " is not dominant");
  OrbitDiagram d;
  d.n = n;
  d.base = nu;
  for (int k = 0; k < n; ++k)
    if (lambda_k(n, k) == nu) d.k = k;
  d.conjectural_complex = d.k == 0;

  HasseDiagram h = hasse_diagram(p);
  Weight r = rho(n);
  auto f = [&](int v) { return (v > 0 ? 1 : -1) * nu[n - std::abs(v)]; };
  std::vector<int> node_of(h.nodes.size(), -1);
  for (std::size_t i = 0; i < h.nodes.size(); ++i) {
    Weight x = h.nodes[i].weight;
    Weight mu;
    for (int v : x.coords) mu.coords.push_back(f(v));
    Placement pl{x[0], x[1]};
    if (!is_dominant(mu, p, Dominance::StrictlyForLevi)) {
      d.excluded.push_back(pl);
      continue;
    }
    node_of[i] = static_cast<int>(d.nodes.size());
    d.nodes.push_back({pl, mu, std::vector<int>(mu.coords.begin() + 2, mu.coords.end())});
  }
  for (const HasseEdge &e : h.edges) {
    int s = node_of[static_cast<std::size_t>(e.source)], t = node_of[static_cast<std::size_t>(e.target)];
    if (s < 0 || t < 0) continue;
    const Weight &ws = d.nodes[static_cast<std::size_t>(s)].weight, &wt = d.nodes[static_cast<std::size_t>(t)].weight;
    OrbitArrow a{s, t, ArrowKind::Standard, e.label, std::nullopt};
    if (ws == wt) {
      a.kind = ArrowKind::Identity;
    } else {
      a.order_bound = order_bound(ws, wt, p);
      if (d.k && detail::suppressed_trivial(*d.k, ws, wt)) a.kind = ArrowKind::SuppressedTrivial;
    }
    d.arrows.push_back(a);
  }
  for (std::size_t i = 0; i < d.nodes.size(); ++i)
    for (std::size_t j = i + 1; j < d.nodes.size(); ++j)
      if (d.nodes[i].weight == d.nodes[j].weight) d.coincidences.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return d;
}

inline OrbitDiagram singular_orbit(int n, int k) {
  check_k(n, k);
  return orbit_diagram(lambda_k(n, k));
}

inline OrbitDiagram regular_orbit_projection(int n) {
  if (n < 3) throw InvalidArgument("regular orbit projection needs n >= 3");
  return orbit_diagram(rho(n));
}

// per weight, the placement that is upper or to the right
inline std::vector<int> representatives(const OrbitDiagram &d) {
  std::map<Weight, int> best;
  for (std::size_t i = 0; i < d.nodes.size(); ++i) {
    auto [it, fresh] = best.emplace(d.nodes[i].weight, static_cast<int>(i));
    if (fresh) continue;
    const Placement &a = d.nodes[i].placement, &b = d.nodes[static_cast<std::size_t>(it->second)].placement;
    if (std::pair(a.first + a.second, a.first) > std::pair(b.first + b.second, b.first)) it->second = static_cast<int>(i);
  }
  std::vector<int> r;
  for (auto &[w, i] : best) r.push_back(i);
  std::sort(r.begin(), r.end());
  return r;
}

inline int representative_of(const OrbitDiagram &d, const Weight &w) {
  for (int i : representatives(d))
    if (d.nodes[static_cast<std::size_t>(i)].weight == w) return i;
  return -1;
}

} // namespace isobgg
