#include "affgr/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "affgr/cache.hpp"
#include "affgr/classify.hpp"
#include "affgr/element_text.hpp"
#include "affgr/error.hpp"
#include "affgr/report_json.hpp"
#include "affgr/schubert.hpp"
#include "affgr/verify.hpp"

namespace affgr {

using nlohmann::json;

namespace {

// Rows of cells printed with every column padded to its widest entry.
class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& os) const {
    std::vector<size_t> w;
    for (const auto& r : rows_) {
      if (w.size() < r.size()) w.resize(r.size(), 0);
      for (size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
    }
    for (const auto& r : rows_) {
      std::string line;
      for (size_t i = 0; i < r.size(); ++i) {
        line += r[i];
        if (i + 1 < r.size()) line += std::string(w[i] - r[i].size() + 2, ' ');
      }
      os << line << '\n';
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string nodes(const std::vector<Node>& v) {
  if (v.empty()) return "{}";
  std::string s = "{";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

template <class T>
std::string list(const std::vector<T>& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

const char* yes(bool b) { return b ? "yes" : "no"; }

struct Options {
  bool json = false;
  std::optional<int> enum_limit, bfs_limit, product_limit;
  std::string type;
  int max_len = 6;
  bool no_cache = false;
  std::string element;
  std::string elem1, elem2;
  int max_rank = 8;
  std::string suite = "all";
  uint64_t seed = SuiteOptions{}.seed;
  int samples = SuiteOptions{}.samples;
};

Limits limits_for(LieType t, const Options& o) {
  Limits l = Limits::defaults_for(t);
  if (o.enum_limit) l.enum_limit = *o.enum_limit;
  if (o.bfs_limit) l.bfs_limit = *o.bfs_limit;
  if (o.product_limit) l.product_limit = *o.product_limit;
  return l;
}

void emit(std::ostream& out, const std::string& cmd, const std::string& label, json payload) {
  out << make_envelope(cmd, label, std::move(payload)).dump(2) << '\n';
}

void print_report(std::ostream& out, const TypeReport& r) {
  Table t({"field", "value"});
  t.add({"type", r.type.label()});
  t.add({"I(lambda_0)", nodes(r.I_lambda0)});
  t.add({"Levi orbit", r.levi_descriptor});
  t.add({"Poincare polynomial", r.levi_poincare.to_string()});
  t.add({"chain", yes(r.chain)});
  t.add({"chain coefficients", r.chain ? list(r.chain_coeffs) : "-"});
  t.add({"PD status", to_string(r.pd_status)});
  t.add({"Bott nodes", nodes(r.bott_nodes)});
  t.add({"minuscule nodes", nodes(r.minuscule_nodes)});
  t.add({"smooth Schubert generating variety", yes(r.smooth_schubert_genv)});
  t.add({"exponents", list(r.exponents)});
  t.add({"top exponent", std::to_string(r.e_top)});
  t.add({"largest smooth Schubert dimension",
         r.max_smooth_schubert_dim ? std::to_string(*r.max_smooth_schubert_dim) : "-"});
  t.print(out);
}

int cmd_report(const Options& o, std::ostream& out) {
  const LieType t = parse_type(o.type);
  const TypeReport r = type_report(t);
  if (o.json)
    emit(out, "report", t.label(), r);
  else
    print_report(out, r);
  return 0;
}

int cmd_enumerate(const Options& o, std::ostream& out, std::ostream& err) {
  const LieType t = parse_type(o.type);
  const AffineWeylGroup G(t, limits_for(t, o));
  if (o.max_len < 0) throw PreconditionError("--max-len must be non-negative");
  if (o.max_len > G.limits().enum_limit)
    throw BoundExceeded("enumerate", "enum-limit", o.max_len, G.limits().enum_limit);
  const MinRepLevels lv = o.no_cache ? G.enumerate_minreps(o.max_len)
                                     : MinRepCache(MinRepCache::default_dir())
                                           .load_or_compute(G, o.max_len, &err);
  if (o.json) {
    emit(out, "enumerate", t.label(),
         json{{"max_length", o.max_len}, {"sizes", lv.sizes()}, {"levels", levels_json(G, lv)}});
    return 0;
  }
  Table tab({"length", "count", "elements"});
  for (size_t k = 0; k < lv.by_length.size(); ++k) {
    std::string els;
    for (const auto& x : lv.by_length[k]) els += (els.empty() ? "" : " ") + format_element(G, x);
    tab.add({std::to_string(k), std::to_string(lv.by_length[k].size()), els});
  }
  tab.print(out);
  return 0;
}

int cmd_poincare(const Options& o, std::ostream& out) {
  const LieType t = parse_type(o.type);
  const AffineWeylGroup G(t, limits_for(t, o));
  const AffineElem w = o.element.empty() ? G.lambda0() : parse_element(G, o.element);
  schubert_class(G, w);
  const GradedPoly p = schubert_poincare(G, w);
  if (o.json) {
    emit(out, "poincare", t.label(),
         json{{"element", format_element(G, w)}, {"length", w.length}, {"poincare", p}});
    return 0;
  }
  out << format_element(G, w) << "  length " << w.length << '\n' << p.to_string() << '\n';
  return 0;
}

int cmd_star(const Options& o, std::ostream& out) {
  const LieType t = parse_type(o.type);
  const AffineWeylGroup G(t, limits_for(t, o));
  const SchubertClass a = schubert_class(G, parse_element(G, o.elem1));
  const SchubertClass b = schubert_class(G, parse_element(G, o.elem2));
  const StarResult r = star(G, a, b);
  const bool differ = star_readings_differ(G, a, b);
  if (o.json) {
    emit(out, "star", t.label(),
         json{{"left", format_element(G, a.index)},
              {"right", format_element(G, b.index)},
              {"zero", r.is_zero()},
              {"class", r.is_zero() ? json(nullptr) : json(format_element(G, r.cls->index))},
              {"readings_differ", differ}});
    return 0;
  }
  out << (r.is_zero() ? std::string("0") : format_element(G, r.cls->index)) << '\n';
  if (differ) out << "note: the product is length-additive but not a minimal representative\n";
  return 0;
}

int cmd_segments(const Options& o, std::ostream& out) {
  const LieType t = parse_type(o.type);
  const AffineWeylGroup G(t, limits_for(t, o));
  const auto segs = segments(G);
  if (o.json) {
    json a = json::array();
    for (const auto& s : segs)
      a.push_back({{"element", format_element(G, s)},
                   {"translation_form", format_translation_form(G, s)},
                   {"length", s.length}});
    emit(out, "segments", t.label(), json{{"segments", a}});
    return 0;
  }
  Table tab({"length", "element", "translation form"});
  for (const auto& s : segs)
    tab.add({std::to_string(s.length), format_element(G, s), format_translation_form(G, s)});
  tab.print(out);
  return 0;
}

int cmd_factorize(const Options& o, std::ostream& out) {
  const LieType t = parse_type(o.type);
  const AffineWeylGroup G(t, limits_for(t, o));
  const AffineElem w = parse_element(G, o.element);
  schubert_class(G, w);
  const auto f = segment_factorize(G, w);
  const bool star_ok = star_refactor_check(G, w);
  if (o.json) {
    json a = json::array();
    for (const auto& s : f) a.push_back(format_element(G, s));
    emit(out, "factorize", t.label(),
         json{{"element", format_element(G, w)}, {"segments", a}, {"star_product_matches", star_ok}});
    return 0;
  }
  Table tab({"factor", "length", "segment"});
  for (size_t i = 0; i < f.size(); ++i)
    tab.add({std::to_string(i + 1), std::to_string(f[i].length), format_element(G, f[i])});
  tab.print(out);
  out << "star product of segments matches: " << yes(star_ok) << '\n';
  return 0;
}

int cmd_chevalley(const Options& o, std::ostream& out) {
  const LieType t = parse_type(o.type);
  const auto rd = root_datum(t);
  const auto subset = I_of_lambda0(*rd);
  const ChainCoeffs c = chain_coeffs(t);
  const FlagCohomology H(rd, subset);
  const CohomClass c1 = c1_class(t);
  const PDStatus pd = pd_status_from(c);
  if (o.json) {
    emit(out, "chevalley", t.label(),
         json{{"I_lambda0", subset},
              {"c1", H.describe(c1)},
              {"chain", c.is_chain},
              {"a", c.a},
              {"pd_status", pd}});
    return 0;
  }
  out << "I(lambda_0) = " << nodes(subset) << '\n' << "c1 = " << H.describe(c1) << '\n';
  if (!c.is_chain) {
    out << "not a chain\n";
  } else {
    Table tab({"k", "a_k"});
    for (size_t k = 0; k < c.a.size(); ++k) tab.add({std::to_string(k + 1), std::to_string(c.a[k])});
    tab.print(out);
  }
  out << "PD status: " << to_string(pd) << '\n';
  return 0;
}

int cmd_classify_all(const Options& o, std::ostream& out) {
  if (o.max_rank < 1) throw PreconditionError("--max-rank must be at least 1");
  const auto reports = classify_all(o.max_rank);
  if (o.json) {
    emit(out, "classify-all", "", json{{"max_rank", o.max_rank}, {"types", reports}});
    return 0;
  }
  Table tab({"type", "I(lambda_0)", "Levi orbit", "chain", "PD", "bott", "minuscule",
             "smooth-genv", "e_top"});
  for (const auto& r : reports)
    tab.add({r.type.label(), nodes(r.I_lambda0), r.levi_descriptor, yes(r.chain),
             to_string(r.pd_status), nodes(r.bott_nodes), nodes(r.minuscule_nodes),
             r.smooth_schubert_genv ? "true" : "false", std::to_string(r.e_top)});
  tab.print(out);
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const LieType t = parse_type(o.type);
  const auto results = run_suite(t, o.suite, SuiteOptions{o.seed, o.samples});
  const bool ok = std::all_of(results.begin(), results.end(), [](auto& r) { return r.passed; });
  if (o.json) {
    json a = json::array();
    for (const auto& r : results)
      a.push_back({{"name", r.name}, {"passed", r.passed}, {"checked", r.checked},
                   {"detail", r.detail}});
    emit(out, "verify", t.label(), json{{"suite", o.suite}, {"seed", o.seed}, {"results", a}});
  } else {
    Table tab({"check", "result", "cases", "detail"});
    for (const auto& r : results)
      tab.add({r.name, r.passed ? "PASS" : "FAIL", std::to_string(r.checked), r.detail});
    tab.print(out);
  }
  return ok ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Affine Grassmannian combinatorics: Schubert classes, segments, Levi orbits"};
  app.name("affgr");
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Emit a versioned JSON envelope");
  app.add_option("--enum-limit", o.enum_limit, "Longest enumerated level")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--bfs-limit", o.bfs_limit, "Deepest BFS level")->check(CLI::NonNegativeNumber);
  app.add_option("--product-limit", o.product_limit, "Longest element in Bruhat and star work")
      ->check(CLI::NonNegativeNumber);

  auto type_arg = [&](CLI::App* c) { c->add_option("type", o.type, "Lie type, e.g. G2")->required(); };

  auto* report = app.add_subcommand("report", "Levi orbit, duality and node data for a type");
  type_arg(report);
  auto* enumerate = app.add_subcommand("enumerate", "Minimal coset representatives by length");
  type_arg(enumerate);
  enumerate->add_option("--max-len", o.max_len, "Longest level")->capture_default_str();
  enumerate->add_flag("--no-cache", o.no_cache, "Compute without reading or writing the cache");
  auto* poincare = app.add_subcommand("poincare", "Poincare polynomial of a Schubert variety");
  type_arg(poincare);
  poincare->add_option("--element", o.element, "Index element (default t_lambda_0)");
  auto* starc = app.add_subcommand("star", "Star product of two Schubert classes");
  type_arg(starc);
  starc->add_option("elem1", o.elem1)->required();
  starc->add_option("elem2", o.elem2)->required();
  auto* segs = app.add_subcommand("segments", "Segments of the canonical generating variety");
  type_arg(segs);
  auto* fact = app.add_subcommand("factorize", "Unique factorization into segments");
  type_arg(fact);
  fact->add_option("--element", o.element)->required();
  auto* chev = app.add_subcommand("chevalley", "Chevalley coefficients of c1 on the Levi orbit");
  type_arg(chev);
  auto* cls = app.add_subcommand("classify-all", "Classification table for every type");
  cls->add_option("--max-rank", o.max_rank)->capture_default_str();
  auto* ver = app.add_subcommand("verify", "Run a property suite");
  type_arg(ver);
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  ver->add_option("--suite", o.suite)->check(CLI::IsMember(suites))->capture_default_str();
  ver->add_option("--seed", o.seed)->capture_default_str();
  ver->add_option("--samples", o.samples)->check(CLI::PositiveNumber)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (report->parsed()) return cmd_report(o, out);
    if (enumerate->parsed()) return cmd_enumerate(o, out, err);
    if (poincare->parsed()) return cmd_poincare(o, out);
    if (starc->parsed()) return cmd_star(o, out);
    if (segs->parsed()) return cmd_segments(o, out);
    if (fact->parsed()) return cmd_factorize(o, out);
    if (chev->parsed()) return cmd_chevalley(o, out);
    if (cls->parsed()) return cmd_classify_all(o, out);
    if (ver->parsed()) return cmd_verify(o, out);
  } catch (const BoundExceeded& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const FactorizationError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace affgr
