#pragma once

#include <json.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "orbits.hpp"
#include "parabolic.hpp"
#include "penrose.hpp"
#include "rational.hpp"
#include "weyl.hpp"

namespace isobgg {

using Json = nlohmann::ordered_json;

enum class Format { Tikz, Dot, Json };

inline std::string to_string(Format f) {
  switch (f) {
  case Format::Tikz: return "tikz";
  case Format::Dot: return "dot";
  case Format::Json: return "json";
  }
  return "";
}

inline Format parse_format(const std::string &s) {
  for (auto f : {Format::Tikz, Format::Dot, Format::Json})
    if (to_string(f) == s) return f;
  throw InvalidArgument("unknown format " + s + " (expected tikz, dot or json)");
}

struct RenderConfig {
  Format format = Format::Tikz;
  std::vector<int> skip_columns; // display only; json keeps everything
  Rational scale = 1;
  bool show_labels = false;
};

// ---- figure marks ----------------------------------------------------------

using Segment = std::tuple<int, int, int, int>;

struct FigureMarks {
  std::vector<Placement> nodes;   // \ldominant
  std::vector<Placement> trivial; // \trivial
  std::vector<Segment> arrows;    // \arrow
  std::vector<Segment> equal;     // \equal
  std::vector<Segment> skipped;   // \skipped
  std::vector<std::pair<Segment, std::string>> labels;
};

inline bool hidden_placement(const Placement &p, const std::vector<int> &skips) {
  for (int s : skips)
    if (std::abs(p.first) == s || std::abs(p.second) == s) return true;
  return false;
}

// dotted bridges over an elided row/column pair: for t = +-s, (t-1, y) -> (t+1, y) with y <= t-2
// and (x, t-1) -> (x, t+1) with x >= t+2, dropping the axis and the elided values
inline std::vector<Segment> skipped_segments(int n, const std::vector<int> &skips) {
  std::set<int> banned{0};
  for (int s : skips) {
    banned.insert(s);
    banned.insert(-s);
  }
  std::vector<Segment> out;
  for (int s : skips) {
    if (s < 1 || s > n) continue;
    for (int t : {s, -s}) {
      for (int y = -n; y <= t - 2; ++y)
        if (!banned.count(y)) out.emplace_back(t - 1, y, t + 1, y);
      for (int x = t + 2; x <= n; ++x)
        if (!banned.count(x)) out.emplace_back(x, t - 1, x, t + 1);
    }
  }
  return out;
}

inline FigureMarks figure_marks(const OrbitDiagram &d, const std::vector<int> &skips) {
  FigureMarks m;
  auto pl = [&](int i) { return d.nodes[static_cast<std::size_t>(i)].placement; };
  for (auto &nd : d.nodes)
    if (!hidden_placement(nd.placement, skips)) m.nodes.push_back(nd.placement);
  for (auto &p : d.excluded)
    if (!hidden_placement(p, skips)) m.trivial.push_back(p);
  for (auto &a : d.arrows) {
    Placement s = pl(a.source), t = pl(a.target);
    if (hidden_placement(s, skips) || hidden_placement(t, skips)) continue;
    if (a.kind != ArrowKind::Standard && a.kind != ArrowKind::NonStandard) continue;
    Segment g{s.first, s.second, t.first, t.second};
    m.arrows.push_back(g);
    if (a.label) m.labels.emplace_back(g, a.label->name());
  }
  for (auto [i, j] : d.coincidences) {
    Placement s = pl(i), t = pl(j);
    if (!hidden_placement(s, skips) && !hidden_placement(t, skips)) m.equal.emplace_back(s.first, s.second, t.first, t.second);
  }
  m.skipped = skipped_segments(d.n, skips);
  return m;
}

// ---- tikz --------------------------------------------------------------------

namespace detail {

inline const char *tikz_macros() {
  return R"(\providecommand{\ldominant}[2]{\draw[fill] (#1,#2) circle [radius=1pt];}
\providecommand{\arrow}[4]{\draw [->] (.75*#1+.25*#3,.75*#2+.25*#4) -- (.25*#1+.75*#3,.25*#2+.75*#4);}
\providecommand{\skipped}[4]{\draw [dotted,-] (.75*#1+.25*#3,.75*#2+.25*#4) -- (.25*#1+.75*#3,.25*#2+.75*#4);}
\providecommand{\trivial}[2]{\draw[black!50] (#1-.1,#2-.1)--(#1+.1,#2+.1); \draw[black!50] (#1-.1,#2+.1)--(#1+.1,#2-.1);}
\providecommand{\equal}[4]{
  \draw (.75*#1+.25*#3+.07*#2-.07*#4,.75*#2+.25*#4+.07*#3-.07*#1) -- (.25*#1+.75*#3+.07*#2-.07*#4,.25*#2+.75*#4+.07*#3-.07*#1);
  \draw (.75*#1+.25*#3-.07*#2+.07*#4,.75*#2+.25*#4-.07*#3+.07*#1) -- (.25*#1+.75*#3-.07*#2+.07*#4,.25*#2+.75*#4-.07*#3+.07*#1);
}
\providecommand{\arrowlabel}[5]{\node[font=\tiny,fill=white,inner sep=1pt] at (.5*#1+.5*#3,.5*#2+.5*#4) {$#5$};}
)";
}

inline std::string tex_root(const std::string &name) {
  // a23 -> a_{23}
  return name.substr(0, 1) + "_{" + name.substr(1) + "}";
}

inline std::string seg4(const Segment &s) {
  auto [a, b, c, d] = s;
  return "{" + std::to_string(a) + "}{" + std::to_string(b) + "}{" + std::to_string(c) + "}{" + std::to_string(d) + "}";
}

inline std::string open_tikz(const RenderConfig &cfg) {
  std::string s = "\\begin{tikzpicture}[scale=" + cfg.scale.get_str() + "]\n";
  return s + tikz_macros();
}

inline std::string weight_text(const Weight &w) {
  std::string s = "(";
  for (int i = 0; i < w.rank(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

} // namespace detail

inline std::string render_tikz(const OrbitDiagram &d, const RenderConfig &cfg) {
  FigureMarks m = figure_marks(d, cfg.skip_columns);
  std::string s = detail::open_tikz(cfg);
  for (auto &p : m.trivial) s += "\\trivial{" + std::to_string(p.first) + "}{" + std::to_string(p.second) + "};\n";
  for (auto &p : m.nodes) s += "\\ldominant{" + std::to_string(p.first) + "}{" + std::to_string(p.second) + "};\n";
  for (auto &g : m.arrows) s += "\\arrow" + detail::seg4(g) + ";\n";
  for (auto &g : m.skipped) s += "\\skipped" + detail::seg4(g) + ";\n";
  for (auto &g : m.equal) s += "\\equal" + detail::seg4(g) + ";\n";
  if (cfg.show_labels)
    for (auto &[g, l] : m.labels) s += "\\arrowlabel" + detail::seg4(g) + "{" + detail::tex_root(l) + "};\n";
  return s + "\\end{tikzpicture}\n";
}

namespace detail {

// crossed = {2} diagrams sit on the same grid as the orbit figures; others are laid out by length
inline std::vector<std::pair<int, int>> hasse_positions(const HasseDiagram &d) {
  std::vector<std::pair<int, int>> pos;
  bool grid = d.parabolic.crossed == std::vector<int>{2};
  std::map<int, int> level_count;
  for (auto &nd : d.nodes) {
    if (grid) pos.emplace_back(nd.weight[0], nd.weight[1]);
    else pos.emplace_back(nd.length, level_count[nd.length]++);
  }
  return pos;
}

} // namespace detail

inline std::string render_tikz(const HasseDiagram &d, const RenderConfig &cfg) {
  auto pos = detail::hasse_positions(d);
  auto hidden = [&](std::size_t i) {
    return d.parabolic.crossed == std::vector<int>{2} && hidden_placement(pos[i], cfg.skip_columns);
  };
  std::string s = detail::open_tikz(cfg);
  for (std::size_t i = 0; i < pos.size(); ++i)
    if (!hidden(i)) s += "\\ldominant{" + std::to_string(pos[i].first) + "}{" + std::to_string(pos[i].second) + "};\n";
  for (auto &e : d.edges) {
    auto a = static_cast<std::size_t>(e.source), b = static_cast<std::size_t>(e.target);
    if (hidden(a) || hidden(b)) continue;
    Segment g{pos[a].first, pos[a].second, pos[b].first, pos[b].second};
    s += "\\arrow" + detail::seg4(g) + ";\n";
    if (cfg.show_labels) s += "\\arrowlabel" + detail::seg4(g) + "{" + detail::tex_root(e.label.name()) + "};\n";
  }
  return s + "\\end{tikzpicture}\n";
}

inline std::string render_tikz(const SpectralPage &pg, const RenderConfig &cfg) {
  std::string s = detail::open_tikz(cfg);
  for (auto &[pq, cell] : pg.grid) {
    std::string text = cell.mark == CellMark::Zero ? "0"
                       : cell.mark == CellMark::Bullet ? "\\bullet"
                       : cell.mark == CellMark::Kernel ? "\\mathrm{Ker}"
                       : cell.mark == CellMark::Cokernel ? "\\mathrm{Coker}"
                       : cell.weight ? detail::weight_text(*cell.weight) : "";
    s += "\\node[font=\\tiny] at (" + std::to_string(2 * pq.first) + "," + std::to_string(pq.second) + ") {$" + text + "$};\n";
  }
  for (auto &df : pg.differentials) {
    Segment g{2 * df.from.first, df.from.second, 2 * df.to.first, df.to.second};
    s += "\\arrow" + detail::seg4(g) + ";\n";
    if (cfg.show_labels) s += "\\arrowlabel" + detail::seg4(g) + "{" + to_string(df.kind) + "};\n";
  }
  return s + "\\end{tikzpicture}\n";
}

inline std::string render_tikz(const BggComplex &c, const RenderConfig &cfg) {
  std::string s = detail::open_tikz(cfg);
  for (std::size_t i = 0; i < c.terms.size(); ++i)
    s += "\\node[font=\\tiny] at (" + std::to_string(3 * static_cast<int>(i)) + ",0) {$" + detail::weight_text(c.terms[i]) + "$};\n";
  for (auto &m : c.maps) {
    Segment g{3 * m.source, 0, 3 * m.target, 0};
    s += "\\arrow" + detail::seg4(g) + ";\n";
    if (cfg.show_labels) s += "\\arrowlabel" + detail::seg4(g) + "{" + std::to_string(m.order_bound) + "};\n";
  }
  return s + "\\end{tikzpicture}\n";
}

// ---- dot -------------------------------------------------------------------------

namespace detail {

inline std::string dot_escape(const std::string &s) {
  std::string r;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') r += '\\';
    r += ch;
  }
  return r;
}

inline std::string dot_node(std::size_t i, const std::string &label) {
  return "  n" + std::to_string(i) + " [label=\"" + dot_escape(label) + "\"];\n";
}

inline std::string dot_edge(int a, int b, const std::string &label, const std::string &style = "") {
  std::string s = "  n" + std::to_string(a) + " -> n" + std::to_string(b) + " [label=\"" + dot_escape(label) + "\"";
  if (!style.empty()) s += ", style=" + style;
  return s + "];\n";
}

} // namespace detail

inline std::string render_dot(const HasseDiagram &d, const RenderConfig &) {
  std::string s = "digraph hasse {\n";
  for (std::size_t i = 0; i < d.nodes.size(); ++i)
    s += detail::dot_node(i, to_string(d.nodes[i].weight) + " l=" + std::to_string(d.nodes[i].length));
  for (auto &e : d.edges) s += detail::dot_edge(e.source, e.target, e.label.name() + " ord<=" + std::to_string(e.order_bound));
  return s + "}\n";
}

inline std::string render_dot(const OrbitDiagram &d, const RenderConfig &) {
  std::string s = "digraph orbit {\n";
  for (std::size_t i = 0; i < d.nodes.size(); ++i) {
    auto &nd = d.nodes[i];
    s += detail::dot_node(i, "(" + std::to_string(nd.placement.first) + "," + std::to_string(nd.placement.second) + ") " + to_string(nd.weight));
  }
  for (auto &a : d.arrows) {
    std::string l = to_string(a.kind);
    if (a.label) l += " " + a.label->name();
    if (a.order_bound) l += " ord<=" + std::to_string(*a.order_bound);
    s += detail::dot_edge(a.source, a.target, l, a.kind == ArrowKind::Standard ? "" : "dashed");
  }
  for (auto [i, j] : d.coincidences) s += "  n" + std::to_string(i) + " -> n" + std::to_string(j) + " [dir=none, style=bold, label=\"=\"];\n";
  return s + "}\n";
}

inline std::string render_dot(const SpectralPage &pg, const RenderConfig &) {
  std::string s = "digraph page {\n";
  std::map<Bidegree, std::size_t> id;
  for (auto &[pq, cell] : pg.grid) {
    std::size_t i = id.size();
    id[pq] = i;
    std::string l = "E" + std::to_string(pg.page) + "[" + std::to_string(pq.first) + "," + std::to_string(pq.second) + "] " + to_string(cell.mark);
    if (cell.weight) l += " " + to_string(*cell.weight);
    s += detail::dot_node(i, l);
  }
  for (auto &df : pg.differentials) {
    if (!id.count(df.from) || !id.count(df.to)) continue;
    s += detail::dot_edge(static_cast<int>(id[df.from]), static_cast<int>(id[df.to]), to_string(df.kind) + " ord<=" + std::to_string(df.order_bound));
  }
  return s + "}\n";
}

inline std::string render_dot(const BggComplex &c, const RenderConfig &) {
  std::string s = "digraph complex {\n  rankdir=LR;\n";
  for (std::size_t i = 0; i < c.terms.size(); ++i) s += detail::dot_node(i, to_string(c.terms[i]));
  for (auto &m : c.maps)
    s += detail::dot_edge(m.source, m.target, to_string(m.kind) + " ord<=" + std::to_string(m.order_bound), m.kind == ArrowKind::Standard ? "" : "dashed");
  return s + "}\n";
}

// ---- json ----------------------------------------------------------------------

namespace detail {

inline Json weight_json(const Weight &w) { return Json(w.coords); }

inline Weight weight_from(const Json &j) { return Weight(j.get<std::vector<int>>()); }

inline Json pair_json(int a, int b) { return Json::array({a, b}); }

template <class F> auto parse_guard(F f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception &e) {
    throw ParseError(std::string("malformed json: ") + e.what());
  }
}

inline void expect_kind(const Json &j, const std::string &kind) {
  if (!j.is_object() || !j.contains("kind") || j.at("kind") != kind) throw ParseError("expected a json document of kind " + kind);
}

} // namespace detail

inline Json to_json(const HasseDiagram &d) {
  Json j;
  j["kind"] = "hasse";
  j["n"] = d.parabolic.n;
  j["k"] = nullptr;
  j["crossed"] = d.parabolic.crossed;
  j["base"] = detail::weight_json(d.base_weight);
  j["nodes"] = Json::array();
  for (auto &nd : d.nodes)
    j["nodes"].push_back(Json{{"perm", nd.element.perm()}, {"signs", nd.element.signs()}, {"weight", detail::weight_json(nd.weight)}, {"length", nd.length}});
  j["arrows"] = Json::array();
  for (auto &e : d.edges) j["arrows"].push_back(Json{{"source", e.source}, {"target", e.target}, {"label", e.label.name()}, {"order_bound", e.order_bound}});
  j["coincidences"] = Json::array();
  return j;
}

inline HasseDiagram hasse_from_json(const Json &j) {
  return detail::parse_guard([&] {
    detail::expect_kind(j, "hasse");
    HasseDiagram d;
    d.parabolic = Parabolic(j.at("n").get<int>(), j.at("crossed").get<std::vector<int>>());
    d.base_weight = detail::weight_from(j.at("base"));
    for (auto &x : j.at("nodes"))
      d.nodes.push_back({WeylElement(x.at("perm").get<std::vector<int>>(), x.at("signs").get<std::vector<int>>()), detail::weight_from(x.at("weight")),
                         x.at("length").get<int>()});
    for (auto &x : j.at("arrows"))
      d.edges.push_back({x.at("source").get<int>(), x.at("target").get<int>(), parse_root(x.at("label").get<std::string>()), x.at("order_bound").get<int>()});
    return d;
  });
}

inline Json to_json(const OrbitDiagram &d) {
  Json j;
  j["kind"] = "orbit";
  j["n"] = d.n;
  j["k"] = d.k ? Json(*d.k) : Json(nullptr);
  j["base"] = detail::weight_json(d.base);
  j["nodes"] = Json::array();
  for (auto &nd : d.nodes)
    j["nodes"].push_back(Json{{"placement", detail::pair_json(nd.placement.first, nd.placement.second)}, {"weight", detail::weight_json(nd.weight)}, {"full_tail", nd.full_tail}});
  j["arrows"] = Json::array();
  for (auto &a : d.arrows)
    j["arrows"].push_back(Json{{"source", a.source},
                               {"target", a.target},
                               {"kind", to_string(a.kind)},
                               {"label", a.label ? Json(a.label->name()) : Json(nullptr)},
                               {"order_bound", a.order_bound ? Json(*a.order_bound) : Json(nullptr)}});
  j["coincidences"] = Json::array();
  for (auto [a, b] : d.coincidences) j["coincidences"].push_back(detail::pair_json(a, b));
  j["excluded"] = Json::array();
  for (auto &p : d.excluded) j["excluded"].push_back(detail::pair_json(p.first, p.second));
  j["conjectural_complex"] = d.conjectural_complex;
  return j;
}

inline OrbitDiagram orbit_from_json(const Json &j) {
  return detail::parse_guard([&] {
    detail::expect_kind(j, "orbit");
    OrbitDiagram d;
    d.n = j.at("n").get<int>();
    if (!j.at("k").is_null()) d.k = j.at("k").get<int>();
    d.base = detail::weight_from(j.at("base"));
    for (auto &x : j.at("nodes")) {
      auto p = x.at("placement").get<std::pair<int, int>>();
      d.nodes.push_back({p, detail::weight_from(x.at("weight")), x.at("full_tail").get<std::vector<int>>()});
    }
    for (auto &x : j.at("arrows")) {
      OrbitArrow a;
      a.source = x.at("source").get<int>();
      a.target = x.at("target").get<int>();
      a.kind = parse_arrow_kind(x.at("kind").get<std::string>());
      if (!x.at("label").is_null()) a.label = parse_root(x.at("label").get<std::string>());
      if (!x.at("order_bound").is_null()) a.order_bound = x.at("order_bound").get<int>();
      d.arrows.push_back(a);
    }
    for (auto &x : j.at("coincidences")) d.coincidences.push_back(x.get<std::pair<int, int>>());
    for (auto &x : j.at("excluded")) d.excluded.push_back(x.get<std::pair<int, int>>());
    d.conjectural_complex = j.at("conjectural_complex").get<bool>();
    return d;
  });
}

inline Json to_json(const SpectralPage &pg) {
  Json j;
  j["kind"] = "spectral-page";
  j["n"] = pg.n;
  j["k"] = pg.k;
  j["page"] = pg.page;
  j["sign"] = to_string(pg.sign);
  j["nodes"] = Json::array();
  for (auto &[pq, cell] : pg.grid)
    j["nodes"].push_back(Json{{"p", pq.first}, {"q", pq.second}, {"mark", to_string(cell.mark)}, {"weight", cell.weight ? detail::weight_json(*cell.weight) : Json(nullptr)}});
  j["arrows"] = Json::array();
  for (auto &df : pg.differentials)
    j["arrows"].push_back(Json{{"from", detail::pair_json(df.from.first, df.from.second)},
                               {"to", detail::pair_json(df.to.first, df.to.second)},
                               {"kind", to_string(df.kind)},
                               {"order_bound", df.order_bound}});
  j["coincidences"] = Json::array();
  j["must_vanish_bullets"] = pg.must_vanish_bullets;
  return j;
}

inline SpectralPage page_from_json(const Json &j) {
  return detail::parse_guard([&] {
    detail::expect_kind(j, "spectral-page");
    SpectralPage pg;
    pg.n = j.at("n").get<int>();
    pg.k = j.at("k").get<int>();
    pg.page = j.at("page").get<int>();
    pg.sign = parse_sign(j.at("sign").get<std::string>());
    for (auto &x : j.at("nodes")) {
      PageCell c;
      c.mark = parse_cell_mark(x.at("mark").get<std::string>());
      if (!x.at("weight").is_null()) c.weight = detail::weight_from(x.at("weight"));
      pg.grid[{x.at("p").get<int>(), x.at("q").get<int>()}] = c;
    }
    for (auto &x : j.at("arrows"))
      pg.differentials.push_back({x.at("from").get<std::pair<int, int>>(), x.at("to").get<std::pair<int, int>>(),
                                  parse_differential_kind(x.at("kind").get<std::string>()), x.at("order_bound").get<int>()});
    pg.must_vanish_bullets = j.at("must_vanish_bullets").get<bool>();
    return pg;
  });
}

inline Json to_json(const BggComplex &c) {
  Json j;
  j["kind"] = "bgg-complex";
  j["n"] = c.n;
  j["k"] = c.k;
  j["sign"] = to_string(c.sign);
  j["nodes"] = Json::array();
  for (std::size_t i = 0; i < c.terms.size(); ++i) {
    Json node{{"weight", detail::weight_json(c.terms[i])}, {"degree", c.degrees.at(i)}};
    node["position"] = i < c.positions.size() ? detail::pair_json(c.positions[i].first, c.positions[i].second) : Json(nullptr);
    j["nodes"].push_back(node);
  }
  j["arrows"] = Json::array();
  for (auto &m : c.maps)
    j["arrows"].push_back(Json{{"source", m.source}, {"target", m.target}, {"kind", to_string(m.kind)}, {"order_bound", m.order_bound}});
  j["coincidences"] = Json::array();
  j["resolved_object"] = c.resolved_object;
  j["exactness"] = c.exactness;
  j["conjectural"] = c.conjectural;
  return j;
}

inline BggComplex complex_from_json(const Json &j) {
  return detail::parse_guard([&] {
    detail::expect_kind(j, "bgg-complex");
    BggComplex c;
    c.n = j.at("n").get<int>();
    c.k = j.at("k").get<int>();
    c.sign = parse_sign(j.at("sign").get<std::string>());
    for (auto &x : j.at("nodes")) {
      c.terms.push_back(detail::weight_from(x.at("weight")));
      c.degrees.push_back(x.at("degree").get<int>());
      if (!x.at("position").is_null()) c.positions.push_back(x.at("position").get<std::pair<int, int>>());
    }
    for (auto &x : j.at("arrows"))
      c.maps.push_back({x.at("source").get<int>(), x.at("target").get<int>(), parse_arrow_kind(x.at("kind").get<std::string>()), x.at("order_bound").get<int>()});
    c.resolved_object = j.at("resolved_object").get<std::string>();
    c.exactness = j.at("exactness").get<std::string>();
    c.conjectural = j.at("conjectural").get<bool>();
    return c;
  });
}

using Diagram = std::variant<HasseDiagram, OrbitDiagram, SpectralPage, BggComplex>;

inline Diagram parse_diagram(const std::string &text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception &e) {
    throw ParseError(std::string("malformed json: ") + e.what());
  }
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) throw ParseError("json document has no kind");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "hasse") return hasse_from_json(j);
  if (kind == "orbit") return orbit_from_json(j);
  if (kind == "spectral-page") return page_from_json(j);
  if (kind == "bgg-complex") return complex_from_json(j);
  throw ParseError("unknown diagram kind " + kind);
}

template <class D> std::string render(const D &d, const RenderConfig &cfg) {
  switch (cfg.format) {
  case Format::Tikz: return render_tikz(d, cfg);
  case Format::Dot: return render_dot(d, cfg);
  case Format::Json: return to_json(d).dump(2) + "\n";
  }
  throw InvalidArgument("unsupported format");
}

inline std::string render(const Diagram &d, const RenderConfig &cfg) {
  return std::visit([&](const auto &x) { return render(x, cfg); }, d);
}

} // namespace isobgg
