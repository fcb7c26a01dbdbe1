#pragma once

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "isobgg/orbits.hpp"

struct FigureFixture {
  int n = 0, k = 0, skip_a = 0, skip_b = 0;
  using Seg = std::tuple<int, int, int, int>;
  std::vector<Seg> arrows, skipped, equal;
  std::vector<std::pair<int, int>> nodes, trivial;
  std::vector<std::pair<Seg, std::string>> labels;
};

inline FigureFixture load_fixture(const std::string &name) {
  std::ifstream in(std::string(FIXTURE_DIR) + "/" + name + ".txt");
  if (!in) throw std::runtime_error("missing fixture " + name);
  FigureFixture f;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream s(line);
    std::string tag;
    s >> tag;
    if (tag == "params") {
      s >> f.n >> f.k >> f.skip_a >> f.skip_b;
    } else if (tag == "node" || tag == "trivial") {
      int x, y;
      s >> x >> y;
      (tag == "node" ? f.nodes : f.trivial).emplace_back(x, y);
    } else {
      int a, b, c, d;
      s >> a >> b >> c >> d;
      FigureFixture::Seg g{a, b, c, d};
      if (tag == "arrow") f.arrows.push_back(g);
      else if (tag == "skipped") f.skipped.push_back(g);
      else if (tag == "equal") f.equal.push_back(g);
      else if (tag == "label") {
        std::string l;
        s >> l;
        f.labels.emplace_back(g, l);
      }
    }
  }
  return f;
}

// visible part of an orbit diagram once the skipped columns are dropped
struct VisibleMarks {
  std::multiset<FigureFixture::Seg> arrows, suppressed;
  std::set<std::pair<isobgg::Placement, isobgg::Placement>> equal;
  std::set<isobgg::Placement> nodes, trivial;
};

inline bool hidden_in_figure(const isobgg::Placement &p, const std::set<int> &skips) {
  return skips.count(std::abs(p.first)) || skips.count(std::abs(p.second));
}

inline std::pair<isobgg::Placement, isobgg::Placement> unordered_pair(isobgg::Placement a, isobgg::Placement b) {
  return a < b ? std::pair(a, b) : std::pair(b, a);
}

inline VisibleMarks visible_marks(const isobgg::OrbitDiagram &d, const std::set<int> &skips) {
  using isobgg::ArrowKind;
  VisibleMarks v;
  auto at = [&](int i) { return d.nodes[static_cast<std::size_t>(i)].placement; };
  for (auto &nd : d.nodes)
    if (!hidden_in_figure(nd.placement, skips)) v.nodes.insert(nd.placement);
  for (auto &a : d.arrows) {
    auto s = at(a.source), t = at(a.target);
    if (hidden_in_figure(s, skips) || hidden_in_figure(t, skips)) continue;
    FigureFixture::Seg g{s.first, s.second, t.first, t.second};
    if (a.kind == ArrowKind::Standard || a.kind == ArrowKind::NonStandard) v.arrows.insert(g);
    if (a.kind == ArrowKind::SuppressedTrivial) v.suppressed.insert(g);
  }
  for (auto [i, j] : d.coincidences)
    if (!hidden_in_figure(at(i), skips) && !hidden_in_figure(at(j), skips)) v.equal.insert(unordered_pair(at(i), at(j)));
  for (auto &p : d.excluded)
    if (!hidden_in_figure(p, skips)) v.trivial.insert(p);
  return v;
}

inline isobgg::OrbitDiagram fixture_diagram(const FigureFixture &f) {
  return f.k < 0 ? isobgg::regular_orbit_projection(f.n) : isobgg::singular_orbit(f.n, f.k);
}

// names of the mark families that disagree with the fixture; empty when everything matches
inline std::vector<std::string> figure_mismatches(const FigureFixture &f) {
  VisibleMarks v = visible_marks(fixture_diagram(f), {f.skip_a, f.skip_b});
  std::vector<std::string> bad;
  if (v.arrows != std::multiset<FigureFixture::Seg>(f.arrows.begin(), f.arrows.end())) bad.push_back("arrows");
  std::set<std::pair<isobgg::Placement, isobgg::Placement>> eq;
  for (auto [a, b, c, e] : f.equal) eq.insert(unordered_pair({a, b}, {c, e}));
  if (v.equal != eq) bad.push_back("coincidences");
  if (v.nodes != std::set<isobgg::Placement>(f.nodes.begin(), f.nodes.end())) bad.push_back("nodes");
  if (v.trivial != std::set<isobgg::Placement>(f.trivial.begin(), f.trivial.end())) bad.push_back("trivial");
  return bad;
}

// boundary labels of the regular orbit; returns the labels that are missing or wrong
inline std::vector<std::string> label_mismatches(const FigureFixture &f, const isobgg::OrbitDiagram &d) {
  std::vector<std::string> bad;
  for (auto &[seg, name] : f.labels) {
    auto [a, b, c, e] = seg;
    int s = d.find({a, b}), t = d.find({c, e});
    bool ok = false;
    for (auto &ar : d.arrows)
      if (s >= 0 && ar.source == s && ar.target == t) ok = ar.label && *ar.label == isobgg::parse_root(name);
    if (!ok) bad.push_back(name);
  }
  return bad;
}
