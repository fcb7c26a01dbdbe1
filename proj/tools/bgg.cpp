#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "isobgg/geometry.hpp"
#include "isobgg/orbits.hpp"
#include "isobgg/parabolic.hpp"
#include "isobgg/penrose.hpp"
#include "isobgg/render.hpp"
#include "isobgg/verma.hpp"

using namespace isobgg;

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kVerificationFailed = 2;

struct Options {
  int n = 0;
  int k = 0;
  std::string sign = "+";
  std::vector<int> cross{2};
  std::string format;
  std::string output;
  std::string input;
  std::vector<int> skip;
  bool labels = false;
  bool conjectural = false;
  int page = 1;
  int degree_cap = 4;
  int samples = 1000;
  std::uint64_t seed = 1;
  std::string scale = "1";
};

struct Result {
  std::string text;
  int status = kOk;
};

RenderConfig config(const Options &o, const std::string &fallback) {
  RenderConfig c;
  c.format = parse_format(o.format.empty() ? fallback : o.format);
  c.skip_columns = o.skip;
  c.show_labels = o.labels;
  c.scale = parse_rational(o.scale);
  if (c.scale <= 0) throw InvalidArgument("scale must be positive");
  return c;
}

bool text_format(const Options &o) { return o.format.empty() || o.format == "text"; }

void require_format(const Options &o, std::initializer_list<const char *> allowed) {
  if (o.format.empty()) return;
  for (auto *a : allowed)
    if (o.format == a) return;
  throw InvalidArgument("format " + o.format + " is not available for this subcommand");
}

std::string rows_text(const std::vector<RelativeBggTerm> &terms) {
  std::ostringstream s;
  for (auto &t : terms) {
    s << "p=" << t.p << "  " << to_string(t.weight());
    auto di = bbw_direct_image(t);
    if (di) s << "  ->  " << to_string(di->weight) << " in degree " << di->degree << "\n";
    else s << "  ->  0\n";
  }
  return s.str();
}

Json relative_json(int n, int k_signed, const std::vector<RelativeBggTerm> &terms) {
  Json j;
  j["kind"] = "relative-bgg";
  j["n"] = n;
  j["k"] = k_signed;
  j["nodes"] = Json::array();
  for (auto &t : terms) {
    auto di = bbw_direct_image(t);
    j["nodes"].push_back(Json{{"p", t.p},
                              {"weight", t.weight().coords},
                              {"direct_image", di ? Json(di->weight.coords) : Json(nullptr)},
                              {"degree", di ? Json(di->degree) : Json(nullptr)}});
  }
  j["arrows"] = Json::array();
  for (std::size_t i = 0; i + 1 < terms.size(); ++i) j["arrows"].push_back(Json{{"source", i}, {"target", i + 1}});
  j["coincidences"] = Json::array();
  return j;
}

std::string page_text(const SpectralPage &pg) {
  std::ostringstream s;
  s << "E" << pg.page << " page, n=" << pg.n << " k=" << pg.k << " sign " << to_string(pg.sign) << "\n";
  for (int q : {1, 0}) {
    s << "q=" << q << ":";
    for (auto &[pq, cell] : pg.grid) {
      if (pq.second != q) continue;
      s << "  [" << pq.first << "] " << to_string(cell.mark);
      if (cell.weight) s << " " << to_string(*cell.weight);
    }
    s << "\n";
  }
  for (auto &d : pg.differentials)
    s << "d: (" << d.from.first << "," << d.from.second << ") -> (" << d.to.first << "," << d.to.second << ") " << to_string(d.kind)
      << ", order <= " << d.order_bound << "\n";
  if (pg.must_vanish_bullets) s << "bullets vanish over the big affine cell\n";
  return s.str();
}

std::string complex_text(const BggComplex &c) {
  std::ostringstream s;
  s << (c.conjectural ? "conjectural " : "") << "complex n=" << c.n << " k=" << c.k;
  if (!c.conjectural) s << " sign " << to_string(c.sign);
  s << ", " << c.terms.size() << " terms\n";
  for (std::size_t i = 0; i < c.terms.size(); ++i) s << "  [" << c.degrees[i] << "] " << to_string(c.terms[i]) << "\n";
  for (auto &m : c.maps) s << "  " << m.source << " -> " << m.target << " " << to_string(m.kind) << ", order <= " << m.order_bound << "\n";
  if (!c.resolved_object.empty()) s << "resolves " << c.resolved_object << "\n";
  if (!c.exactness.empty()) s << c.exactness << "\n";
  return s.str();
}

Result run_hasse(const Options &o) {
  auto d = hasse_diagram(Parabolic(o.n, o.cross));
  return {render(d, config(o, "tikz"))};
}

Result run_regular(const Options &o) { return {render(regular_orbit_projection(o.n), config(o, "tikz"))}; }

Result run_singular(const Options &o) {
  check_k(o.n, o.k);
  return {render(singular_orbit(o.n, o.k), config(o, "tikz"))};
}

Result run_relative(const Options &o) {
  require_format(o, {"text", "json"});
  int ks = sign_value(parse_sign(o.sign)) * o.k;
  auto terms = relative_bgg(o.n, ks);
  if (o.format == "json") return {relative_json(o.n, ks, terms).dump(2) + "\n"};
  return {rows_text(terms)};
}

Result run_penrose(const Options &o) {
  Sign s = parse_sign(o.sign);
  if (o.page != 1 && o.page != 2) throw InvalidArgument("page must be 1 or 2");
  SpectralPage pg = e1_page(o.n, o.k, s);
  if (o.page == 2) pg = e2_page(pg, nonstandard_descriptor(o.n, o.k, s));
  if (text_format(o)) return {page_text(pg)};
  return {render(pg, config(o, "json"))};
}

Result run_complex(const Options &o) {
  BggComplex c;
  if (o.k == 0) {
    if (!o.conjectural)
      throw InvalidArgument("the k = 0 complex is only conjectural; pass --conjectural to build its branched diagram");
    c = assemble_conjectural_bgg(o.n);
  } else {
    c = assemble_singular_bgg(o.n, o.k, parse_sign(o.sign));
  }
  if (text_format(o)) return {complex_text(c)};
  return {render(c, config(o, "json"))};
}

Result run_verify(const Options &o) {
  require_format(o, {"text", "json"});
  if (o.degree_cap < 1) throw InvalidArgument("degree cap must be positive");
  auto reports = verify_table1(o.n, o.degree_cap);
  Result r;
  for (auto &rep : reports)
    if (!rep.pass()) r.status = kVerificationFailed;
  if (o.format == "json") {
    Json j;
    j["kind"] = "verify-maximal";
    j["n"] = o.n;
    j["k"] = nullptr;
    j["degree_cap"] = o.degree_cap;
    j["rows"] = Json::array();
    for (auto &rep : reports) {
      Json row;
      row["row"] = rep.input.row;
      row["k"] = rep.input.k;
      row["sign"] = to_string(rep.input.sign);
      row["module"] = to_string(rep.input.module);
      row["expected_weight"] = rep.input.expected.coords;
      row["candidate"] = rep.candidate;
      row["status"] = rep.pass() ? "PASS" : "FAIL";
      row["residuals"] = Json::array();
      row["report"] = rep.check_text;
      row["maximal_dimension"] = rep.maximal_dimension;
      row["maximal_basis"] = rep.maximal_basis;
      row["candidate_in_maximal_space"] = rep.candidate_in_maximal_space;
      row["notes"] = rep.input.notes;
      j["rows"].push_back(row);
    }
    r.text = j.dump(2) + "\n";
    return r;
  }
  std::ostringstream s;
  for (auto &rep : reports) {
    s << (rep.pass() ? "PASS" : "FAIL") << "  row " << rep.input.row << "  n=" << o.n << " k=" << rep.input.k << " sign "
      << to_string(rep.input.sign) << "  over " << to_string(rep.input.module) << "  weight " << to_string(rep.input.expected) << "\n";
    s << "    v = " << rep.candidate << "\n";
    s << "    " << rep.check_text << "\n";
    s << "    maximal vectors of this weight: " << rep.maximal_dimension << "\n";
    for (auto &b : rep.maximal_basis) s << "      " << b << "\n";
    for (auto &nt : rep.input.notes) s << "    note: " << nt << "\n";
  }
  r.text = s.str();
  return r;
}

Result run_geometry(const Options &o) {
  require_format(o, {"text", "json"});
  if (o.samples < 1) throw InvalidArgument("samples must be positive");
  auto rep = geometry_check(o.n, o.samples, o.seed);
  Result r;
  r.status = rep.pass() ? kOk : kVerificationFailed;
  if (o.format == "json") {
    Json j{{"kind", "geometry-check"},   {"n", o.n},
           {"k", nullptr},                {"samples", rep.samples},
           {"seed", o.seed},              {"isotropy_failures", rep.isotropy_failures},
           {"gamma_failures", rep.gamma_failures}, {"delta_failures", rep.delta_failures},
           {"status", rep.pass() ? "PASS" : "FAIL"}};
    r.text = j.dump(2) + "\n";
  } else {
    std::ostringstream s;
    s << (rep.pass() ? "PASS" : "FAIL") << "  n=" << o.n << " samples=" << rep.samples << " seed=" << o.seed << "\n";
    s << "  isotropy failures: " << rep.isotropy_failures << "\n";
    s << "  gamma chart failures: " << rep.gamma_failures << "\n";
    s << "  delta chart failures: " << rep.delta_failures << "\n";
    r.text = s.str();
  }
  return r;
}

Result run_render(const Options &o) {
  std::string text;
  if (o.input.empty() || o.input == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    text = s.str();
  } else {
    std::ifstream in(o.input);
    if (!in) throw InvalidArgument("cannot read " + o.input);
    std::ostringstream s;
    s << in.rdbuf();
    text = s.str();
  }
  return {render(parse_diagram(text), config(o, "tikz"))};
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Weyl orbits, Penrose pages and singular BGG complexes over the isotropic 2-Grassmannian"};
  app.require_subcommand(1);
  Options o;

  auto add_n = [&](CLI::App *c) { c->add_option("--n", o.n, "rank")->required(); };
  auto add_k = [&](CLI::App *c) { c->add_option("--k", o.k, "singularity index")->required(); };
  auto add_sign = [&](CLI::App *c) { c->add_option("--sign", o.sign, "+ or -"); };
  auto add_out = [&](CLI::App *c, const std::string &formats) {
    c->add_option("--format", o.format, formats);
    c->add_option("--output,-o", o.output, "write to a file instead of standard output");
  };
  auto add_display = [&](CLI::App *c) {
    c->add_option("--skip", o.skip, "placement columns elided in tikz output")->delimiter(',');
    c->add_flag("--labels", o.labels, "label arrows by their roots");
    c->add_option("--scale", o.scale, "tikz scale, a rational number");
  };

  std::map<CLI::App *, Result (*)(const Options &)> handlers;

  auto *hasse = app.add_subcommand("hasse", "Hasse diagram W^p of a parabolic");
  add_n(hasse);
  hasse->add_option("--cross", o.cross, "crossed nodes, e.g. 1 or 1,3")->delimiter(',');
  add_out(hasse, "tikz, dot or json");
  add_display(hasse);
  handlers[hasse] = run_hasse;

  auto *regular = app.add_subcommand("regular-orbit", "regular orbit of rho on the crossed {2} grid");
  add_n(regular);
  add_out(regular, "tikz, dot or json");
  add_display(regular);
  handlers[regular] = run_regular;

  auto *singular = app.add_subcommand("singular-orbit", "orbit diagram of lambda_k + rho");
  add_n(singular);
  add_k(singular);
  add_out(singular, "tikz, dot or json");
  add_display(singular);
  handlers[singular] = run_singular;

  auto *relative = app.add_subcommand("relative-bgg", "relative resolution and its direct images");
  add_n(relative);
  add_k(relative);
  add_sign(relative);
  add_out(relative, "text or json");
  handlers[relative] = run_relative;

  auto *penrose = app.add_subcommand("penrose-e1", "E1 (or E2) page of the Penrose spectral sequence");
  add_n(penrose);
  add_k(penrose);
  add_sign(penrose);
  penrose->add_option("--page", o.page, "1 or 2");
  add_out(penrose, "text, tikz, dot or json");
  add_display(penrose);
  handlers[penrose] = run_penrose;

  auto *complex = app.add_subcommand("bgg-complex", "singular BGG complex for lambda_k");
  add_n(complex);
  add_k(complex);
  add_sign(complex);
  complex->add_flag("--conjectural", o.conjectural, "allow the conjectural k = 0 diagram");
  add_out(complex, "text, tikz, dot or json");
  add_display(complex);
  handlers[complex] = run_complex;

  auto *verify = app.add_subcommand("verify-maximal", "check the maximal vectors of the first operators");
  add_n(verify);
  verify->add_option("--degree-cap", o.degree_cap, "largest PBW degree");
  add_out(verify, "text or json");
  handlers[verify] = run_verify;

  auto *geometry = app.add_subcommand("geometry-check", "isotropy and twistor chart identities at random rational points");
  add_n(geometry);
  geometry->add_option("--samples", o.samples, "number of random points");
  geometry->add_option("--seed", o.seed, "random seed");
  add_out(geometry, "text or json");
  handlers[geometry] = run_geometry;

  auto *rend = app.add_subcommand("render", "render a json diagram");
  rend->add_option("--input,-i", o.input, "json file, - for standard input");
  add_out(rend, "tikz, dot or json");
  add_display(rend);
  handlers[rend] = run_render;

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kInvalid;
  }

  CLI::App *sub = app.get_subcommands().front();
  Result r;
  try {
    r = handlers.at(sub)(o);
  } catch (const InvalidArgument &e) {
    std::cerr << "bgg " << sub->get_name() << ": " << e.what() << "\n";
    return kInvalid;
  } catch (const DimensionError &e) {
    std::cerr << "bgg " << sub->get_name() << ": " << e.what() << "\n";
    return kInvalid;
  } catch (const ParseError &e) {
    std::cerr << "bgg " << sub->get_name() << ": " << e.what() << "\n";
    return kInvalid;
  } catch (const Error &e) {
    std::cerr << "bgg " << sub->get_name() << ": " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const std::exception &e) {
    std::cerr << "bgg " << sub->get_name() << ": " << e.what() << "\n";
    return kInvalid;
  }

  if (o.output.empty()) {
    std::cout << r.text;
  } else {
    std::ofstream out(o.output);
    if (!out) {
      std::cerr << "bgg: cannot write " << o.output << "\n";
      return kInvalid;
    }
    out << r.text;
  }
  if (r.status == kVerificationFailed) std::cerr << "bgg " << sub->get_name() << ": verification failed\n";
  return r.status;
}
