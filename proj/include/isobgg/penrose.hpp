#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbits.hpp"

namespace isobgg {

inline void check_penrose_range(int n, int k) {
  if (n < 3) throw InvalidArgument("the 2-Grassmannian complexes need n >= 3");
  if (k < 1 || k > n - 1) throw InvalidArgument("k must lie in 1.." + std::to_string(n - 1) + ", got " + std::to_string(k));
}

// (first | middle | tail) in rho-shifted coordinates
struct RelativeBggTerm {
  int p = 0;
  int first = 0;
  int middle = 0;
  std::vector<int> tail;

  Weight weight() const {
    Weight w{first, middle};
    w.coords.insert(w.coords.end(), tail.begin(), tail.end());
    return w;
  }

  friend bool operator==(const RelativeBggTerm &, const RelativeBggTerm &) = default;
};

// the iGr(1) resolution in rank n-1 with the first coordinate frozen at k_signed
inline std::vector<RelativeBggTerm> relative_bgg(int n, int k_signed) {
  if (n < 3) throw InvalidArgument("relative resolution needs n >= 3");
  if (k_signed == 0 || std::abs(k_signed) > n - 1)
    throw InvalidArgument("k must be nonzero with |k| <= " + std::to_string(n - 1));
  auto chain = igr1_bgg(n - 1);
  std::vector<RelativeBggTerm> r;
  for (std::size_t p = 0; p < chain.terms.size(); ++p) {
    const Weight &w = chain.terms[p];
    r.push_back({static_cast<int>(p), k_signed, w[0], std::vector<int>(w.coords.begin() + 1, w.coords.end())});
  }
  return r;
}

struct DirectImage {
  Weight weight;
  int degree = 0;

  friend bool operator==(const DirectImage &, const DirectImage &) = default;
};

inline std::optional<DirectImage> bbw_direct_image(const RelativeBggTerm &t) {
  if (t.middle == t.first) return std::nullopt;
  int degree = t.middle > t.first ? 1 : 0;
  Weight w;
  w.coords.reserve(t.tail.size() + 2);
  w.coords.push_back(degree ? t.middle : t.first);
  w.coords.push_back(degree ? t.first : t.middle);
  for (int x : t.tail) w.coords.push_back(x);
  return DirectImage{w, degree};
}

using Bidegree = std::pair<int, int>; // (p, q)

enum class CellMark { Term, Zero, Kernel, Cokernel, Bullet, Whole };

inline std::string to_string(CellMark m) {
  switch (m) {
  case CellMark::Term: return "term";
  case CellMark::Zero: return "zero";
  case CellMark::Kernel: return "ker";
  case CellMark::Cokernel: return "coker";
  case CellMark::Bullet: return "bullet";
  case CellMark::Whole: return "whole";
  }
  return "";
}

inline CellMark parse_cell_mark(const std::string &s) {
  for (auto m : {CellMark::Term, CellMark::Zero, CellMark::Kernel, CellMark::Cokernel, CellMark::Bullet, CellMark::Whole})
    if (to_string(m) == s) return m;
  throw ParseError("unknown cell mark " + s);
}

struct PageCell {
  std::optional<Weight> weight;
  CellMark mark = CellMark::Zero;

  friend bool operator==(const PageCell &, const PageCell &) = default;
};

enum class DifferentialKind { Standard, NonStandard, Induced };

inline std::string to_string(DifferentialKind k) {
  switch (k) {
  case DifferentialKind::Standard: return "standard";
  case DifferentialKind::NonStandard: return "non-standard";
  case DifferentialKind::Induced: return "induced";
  }
  return "";
}

inline DifferentialKind parse_differential_kind(const std::string &s) {
  for (auto k : {DifferentialKind::Standard, DifferentialKind::NonStandard, DifferentialKind::Induced})
    if (to_string(k) == s) return k;
  throw ParseError("unknown differential kind " + s);
}

struct Differential {
  Bidegree from;
  Bidegree to;
  DifferentialKind kind = DifferentialKind::Standard;
  int order_bound = 0;

  friend bool operator==(const Differential &, const Differential &) = default;
};

struct SpectralPage {
  int page = 1;
  int n = 3;
  int k = 1;
  Sign sign = Sign::Plus;
  std::map<Bidegree, PageCell> grid;
  std::vector<Differential> differentials;
  bool must_vanish_bullets = false; // bullets vanish over the big affine cell

  std::vector<int> row(int q) const {
    std::vector<int> ps;
    for (auto &[pq, c] : grid)
      if (pq.second == q && c.weight) ps.push_back(pq.first);
    return ps;
  }

  int count(CellMark m) const {
    int c = 0;
    for (auto &[pq, cell] : grid) c += cell.mark == m;
    return c;
  }

  int nonzero() const {
    int c = 0;
    for (auto &[pq, cell] : grid) c += cell.weight.has_value();
    return c;
  }

  friend bool operator==(const SpectralPage &, const SpectralPage &) = default;
};

inline int two_grassmannian_order(const Weight &s, const Weight &t) { return order_bound(s, t, Parabolic(s.rank(), {2})); }

inline SpectralPage e1_page(int n, int k, Sign sign) {
  check_penrose_range(n, k);
  SpectralPage pg;
  pg.page = 1;
  pg.n = n;
  pg.k = k;
  pg.sign = sign;
  for (const RelativeBggTerm &t : relative_bgg(n, sign_value(sign) * k)) {
    pg.grid[{t.p, 0}] = {};
    pg.grid[{t.p, 1}] = {};
    if (auto img = bbw_direct_image(t)) pg.grid[{t.p, img->degree}] = {img->weight, CellMark::Term};
  }
  for (int q = 0; q <= 1; ++q) {
    auto ps = pg.row(q);
    for (std::size_t i = 0; i + 1 < ps.size(); ++i) {
      if (ps[i + 1] != ps[i] + 1) throw InternalError("gap inside an E1 row");
      const Weight &s = *pg.grid[{ps[i], q}].weight, &t = *pg.grid[{ps[i + 1], q}].weight;
      pg.differentials.push_back({{ps[i], q}, {ps[i + 1], q}, DifferentialKind::Standard, two_grassmannian_order(s, t)});
    }
  }
  return pg;
}

struct NonStandardDescriptor {
  Weight source;
  Weight target;
  int order_bound = 0;
  std::string provenance = "Cech splice";

  friend bool operator==(const NonStandardDescriptor &, const NonStandardDescriptor &) = default;
};

namespace detail {

inline std::optional<std::pair<Bidegree, Bidegree>> bridge_position(const SpectralPage &e1) {
  auto top = e1.row(1), bottom = e1.row(0);
  if (top.empty() || bottom.empty()) return std::nullopt;
  return std::pair(Bidegree{top.back(), 1}, Bidegree{bottom.front(), 0});
}

} // namespace detail

// the operator joining the two E1 rows; none when one row is empty
inline std::optional<NonStandardDescriptor> nonstandard_descriptor(int n, int k, Sign sign) {
  SpectralPage e1 = e1_page(n, k, sign);
  auto pos = detail::bridge_position(e1);
  if (!pos) return std::nullopt;
  const Weight &s = *e1.grid.at(pos->first).weight, &t = *e1.grid.at(pos->second).weight;
  return NonStandardDescriptor{s, t, two_grassmannian_order(s, t)};
}

inline SpectralPage e2_page(const SpectralPage &e1, const std::optional<NonStandardDescriptor> &bridge) {
  if (e1.page != 1) throw InvalidArgument("e2_page expects an E1 page");
  SpectralPage pg = e1;
  pg.page = 2;
  pg.differentials.clear();
  pg.must_vanish_bullets = true;
  auto pos = detail::bridge_position(e1);
  for (int q = 0; q <= 1; ++q) {
    auto ps = pg.row(q);
    for (std::size_t i = 0; i < ps.size(); ++i) pg.grid[{ps[i], q}].mark = i == 0 ? CellMark::Kernel : CellMark::Bullet;
  }
  if (pos) {
    if (!bridge) throw InvalidArgument("E1 page has two rows but no bridge was given");
    auto &src = pg.grid[pos->first];
    if (*src.weight != bridge->source || *pg.grid[pos->second].weight != bridge->target)
      throw InvalidArgument("bridge does not match the E1 page");
    src.mark = src.mark == CellMark::Kernel ? CellMark::Whole : CellMark::Cokernel;
    Bidegree to{pos->first.first + 2, pos->first.second - 1};
    if (to != pos->second) throw InternalError("bridge is not a page-2 differential");
    pg.differentials.push_back({pos->first, pos->second, DifferentialKind::Induced, bridge->order_bound});
  } else if (bridge) {
    throw InvalidArgument("bridge given for a single-row page");
  }
  return pg;
}

// nonzero differentials d_r for r >= 3 would need cells r-1 rows apart
inline bool degenerates_after_e2(const SpectralPage &pg) {
  for (auto &[a, ca] : pg.grid)
    for (auto &[b, cb] : pg.grid) {
      if (!ca.weight || !cb.weight) continue;
      int r = b.first - a.first;
      if (r >= 3 && b.second == a.second - r + 1) return false;
    }
  return true;
}

struct ComplexMap {
  int source = 0;
  int target = 0;
  ArrowKind kind = ArrowKind::Standard;
  int order_bound = 0;

  friend bool operator==(const ComplexMap &, const ComplexMap &) = default;
};

struct BggComplex {
  int n = 3;
  int k = 1;
  Sign sign = Sign::Plus;
  std::vector<Weight> terms;
  std::vector<int> degrees;
  std::vector<Bidegree> positions; // E1 position of each term
  std::vector<ComplexMap> maps;
  std::string resolved_object;
  std::string exactness;
  bool conjectural = false;

  int column_span() const {
    if (positions.empty()) return 0;
    int lo = positions.front().first, hi = lo;
    for (auto &p : positions) {
      lo = std::min(lo, p.first);
      hi = std::max(hi, p.first);
    }
    return hi - lo + 1;
  }

  friend bool operator==(const BggComplex &, const BggComplex &) = default;
};

inline BggComplex assemble_singular_bgg(int n, int k, Sign sign) {
  if (k == 0) throw InvalidArgument("the k = 0 complex is conjectural; use assemble_conjectural_bgg");
  check_penrose_range(n, k);
  SpectralPage e1 = e1_page(n, k, sign);
  auto bridge = nonstandard_descriptor(n, k, sign);
  BggComplex c;
  c.n = n;
  c.k = k;
  c.sign = sign;
  for (int q : {1, 0})
    for (int p : e1.row(q)) {
      c.degrees.push_back(static_cast<int>(c.terms.size()));
      c.terms.push_back(*e1.grid.at({p, q}).weight);
      c.positions.push_back({p, q});
    }
  for (std::size_t i = 0; i + 1 < c.terms.size(); ++i) {
    bool cross = c.positions[i].second != c.positions[i + 1].second;
    if (cross && (!bridge || bridge->source != c.terms[i] || bridge->target != c.terms[i + 1]))
      throw InternalError("rows do not splice along the bridge");
    c.maps.push_back({static_cast<int>(i), static_cast<int>(i) + 1, cross ? ArrowKind::NonStandard : ArrowKind::Standard,
                      two_grassmannian_order(c.terms[i], c.terms[i + 1])});
  }
  c.resolved_object = "Ker d1 ≅ H^1(Z, O_r(λ̃_" + std::to_string(k) + "^" + to_string(sign) + "))";
  c.exactness = "exact in positive degrees over the big affine cell";
  return c;
}

// branched k = 0 shape; maps between the two components of the orbit are non-standard
inline BggComplex assemble_conjectural_bgg(int n) {
  if (n < 3) throw InvalidArgument("the 2-Grassmannian complexes need n >= 3");
  OrbitDiagram d = singular_orbit(n, 0);
  auto full = [&](int a, int b) {
    for (auto &nd : d.nodes)
      if (nd.weight[0] == a && nd.weight[1] == b) return nd.weight;
    throw InternalError("weight missing from the k = 0 orbit");
  };
  BggComplex c;
  c.n = n;
  c.k = 0;
  c.conjectural = true;
  for (int m = n - 1; m >= 1; --m) {
    c.terms.push_back(full(m, 0));
    c.degrees.push_back(n - 1 - m);
  }
  for (int m = 1; m <= n - 1; ++m) {
    c.terms.push_back(full(0, -m));
    c.degrees.push_back(n - 3 + m);
  }
  auto idx = [&](int a, int b) {
    for (std::size_t i = 0; i < c.terms.size(); ++i)
      if (c.terms[i][0] == a && c.terms[i][1] == b) return static_cast<int>(i);
    return -1;
  };
  auto standard = [&](const Weight &s, const Weight &t) {
    for (auto &a : d.arrows)
      if (a.kind == ArrowKind::Standard && d.nodes[static_cast<std::size_t>(a.source)].weight == s &&
          d.nodes[static_cast<std::size_t>(a.target)].weight == t)
        return true;
    return false;
  };
  auto add = [&](int s, int t) {
    const Weight &ws = c.terms[static_cast<std::size_t>(s)], &wt = c.terms[static_cast<std::size_t>(t)];
    c.maps.push_back({s, t, standard(ws, wt) ? ArrowKind::Standard : ArrowKind::NonStandard, two_grassmannian_order(ws, wt)});
  };
  for (int m = n - 1; m >= 2; --m) add(idx(m, 0), idx(m - 1, 0));
  add(idx(2, 0), idx(0, -1));
  add(idx(1, 0), idx(0, -2));
  for (int m = 1; m <= n - 2; ++m) add(idx(0, -m), idx(0, -m - 1));
  std::sort(c.maps.begin(), c.maps.end(), [](const ComplexMap &a, const ComplexMap &b) {
    return std::pair(a.source, a.target) < std::pair(b.source, b.target);
  });
  c.resolved_object = "conjectural";
  c.exactness = "conjectural branched shape";
  return c;
}

} // namespace isobgg
