// hyperlat: claims runner and module front ends.

#include "hyperlat/claims.hpp"
#include "hyperlat/definite.hpp"
#include "hyperlat/parallel.hpp"
#include "hyperlat/polygon.hpp"
#include "hyperlat/polytope.hpp"
#include "hyperlat/reflect.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace hyperlat;

namespace {

struct Globals {
  unsigned threads = 1;
  std::uint64_t budget = 2'000'000;
  double tol = 1e-8;
  std::string diagram_file;
  bool json_out = false;
};

// Input problems that should exit with the usage code.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

CoxeterDiagram get_diagram(const Globals& g, const std::string& name) {
  if (!g.diagram_file.empty()) return load_diagram_file(g.diagram_file);
  if (name.empty()) throw UsageError("a diagram name or --diagram-file is required");
  return builtin_diagram(name);
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

json labels_json(const CoxeterDiagram& d, const NodeSet& s) {
  auto l = d.labels_of(s);
  std::sort(l.begin(), l.end());
  return l;
}

json sig_json(const Signature& s) { return json::array({s.positive, s.negative, s.zero}); }

template <class R>
json scalar_json(const R& x) {
  return json{{"a", x.a.template convert_to<long long>()}, {"b", x.b.template convert_to<long long>()}};
}

template <class R>
json lattice_json(const HermitianLattice<R>& l) {
  json rows = json::array();
  for (Index i = 0; i < l.rank(); ++i) {
    json row = json::array();
    for (Index j = 0; j < l.rank(); ++j) row.push_back(scalar_json(l.gram(i, j)));
    rows.push_back(row);
  }
  return json{{"ring", RingTraits<R>::name}, {"rank", l.rank()}, {"gram", rows}};
}

template <class R>
json invariants_json(const HermitianLattice<R>& l) {
  auto inv = invariants(l);
  return json{{"ring", RingTraits<R>::name},
              {"rank", inv.rank},
              {"radical_dimension", inv.radical_dimension},
              {"quotient_rank", inv.rank - inv.radical_dimension},
              {"signature", sig_json(inv.signature)},
              {"determinant", inv.determinant.str()}};
}

template <class R>
int rep_relations(const Globals& g, const CoxeterDiagram& d) {
  auto rep = rep_from_diagram<R>(d);
  auto r = verify_relations(rep, d, g.threads);
  json gens = json::array();
  for (const auto& c : r.generators) gens.push_back({{"label", c.label}, {"unitary", c.unitary}, {"order_ok", c.order_ok}});
  json fails = json::array();
  for (const auto& f : r.failures) fails.push_back({{"a", f.a}, {"b", f.b}, {"bonded", f.bonded}});
  print({{"ring", RingTraits<R>::name}, {"rank", rep.lattice.rank()}, {"generators", gens},
         {"pairs_checked", r.pairs_checked}, {"braid_pairs", r.braid_pairs}, {"commuting_pairs", r.commuting_pairs},
         {"failures", fails}, {"ok", r.ok()}});
  return r.ok() ? 0 : 1;
}

template <class R>
int rep_closure(const Globals& g, const CoxeterDiagram& d) {
  auto rep = rep_from_diagram<R>(d);
  auto c = group_closure(rep, g.budget, g.threads);
  print({{"ring", RingTraits<R>::name}, {"rank", rep.lattice.rank()}, {"order", c.order}, {"complete", c.complete},
         {"depth", c.depth}});
  return c.complete ? 0 : 1;
}

template <class R>
int roots(const Globals& g, const CoxeterDiagram& d, long bound) {
  auto q = quotient_by_radical(gram_from_diagram<R>(d));
  auto inv = short_vectors(q.lattice, Integer(bound), g.threads);
  json counts = json::object();
  for (const auto& [n, c] : inv.count_by_norm) counts[n.str()] = c;
  print({{"ring", RingTraits<R>::name}, {"rank", q.lattice.rank()}, {"bound", bound}, {"count_by_norm", counts},
         {"mirrors", inv.mirror_count()}});
  return 0;
}

json certificate_json(const RealQuadSpace& s, const PolytopeCertificate& c) {
  const auto& d = s.diagram;
  json crit = json::array();
  for (const auto& e : c.critical)
    crit.push_back({{"J", labels_json(d, e.subset.nodes)},
                    {"type", e.subset.type},
                    {"kind", to_string(e.subset.kind)},
                    {"Z", labels_json(d, e.z)},
                    {"N_type", e.n_type},
                    {"N_rank", e.n_rank},
                    {"ok", e.ok()}});
  json cusps = json::array();
  for (const auto& v : c.ideal_vertices) {
    json ray = json::array();
    for (Index k = 0; k < v.ray.size(); ++k) ray.push_back(to_string(v.ray(k)));
    cusps.push_back({{"N", labels_json(d, v.n)},
                     {"type", v.type},
                     {"orbit", v.orbit},
                     {"kernels_proportional", v.kernels_proportional},
                     {"ray", ray}});
  }
  return {{"dim", c.dim},        {"signature", sig_json(c.signature)}, {"verdict", c.verdict},
          {"failures", c.failures}, {"critical", crit},             {"ideal_vertices", cusps},
          {"orbit_count", c.orbit_count}};
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::string t = s;
  std::replace(t.begin(), t.end(), ',', ' ');
  std::istringstream in(t);
  std::string tok;
  while (in >> tok) {
    auto slash = tok.find('/');
    try {
      if (slash == std::string::npos)
        out.push_back(std::stod(tok));
      else
        out.push_back(std::stod(tok.substr(0, slash)) / std::stod(tok.substr(slash + 1)));
    } catch (const std::exception&) {
      throw UsageError("cannot read number '" + tok + "'");
    }
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eisenstein and Gauss lattices from Coxeter diagrams, their reflection groups and polytopes"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  g.threads = 1;
  app.add_option("--threads", g.threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--budget-elements", g.budget, "element budget for group closures and orders");
  app.add_option("--tol", g.tol, "quadrature tolerance")->check(CLI::Range(1e-14, 1e-2));
  app.add_option("--diagram-file", g.diagram_file, "diagram in the text format instead of a builtin name");
  app.add_flag("--json", g.json_out, "JSON output where text is the default");

  // verify / report
  std::string filter, golden_path = default_golden_path(), from;
  bool regenerate = false, list = false;
  auto* verify = app.add_subcommand("verify", "run the claim catalog");
  verify->add_option("--filter", filter, "claim id glob, e.g. 'kernel.*'");
  verify->add_option("--golden", golden_path, "golden values file");
  verify->add_flag("--regenerate-golden", regenerate, "rewrite the golden file from this run");
  verify->add_flag("--list", list, "list claim ids");
  auto* report = app.add_subcommand("report", "run the catalog, or convert a saved report between formats");
  report->add_option("--from", from, "saved report (JSON or text)");
  report->add_option("--filter", filter, "claim id glob");
  report->add_option("--golden", golden_path, "golden values file");

  // lattice
  std::string diagram_name, ring = "eisenstein";
  bool quotient = false;
  auto* lattice = app.add_subcommand("lattice", "Hermitian lattices of diagrams");
  lattice->require_subcommand(1);
  lattice->fallthrough();
  auto* lbuild = lattice->add_subcommand("build", "dump the Gram matrix as JSON");
  auto* linv = lattice->add_subcommand("invariants", "radical, signature, determinant");
  for (auto* s : {lbuild, linv}) {
    s->add_option("diagram", diagram_name, "builtin name");
    s->add_option("--ring", ring, "eisenstein or gauss")->check(CLI::IsMember({"eisenstein", "gauss"}));
  }
  lbuild->add_flag("--quotient,--emit", quotient, "emit the quotient by the radical");

  // diagram
  std::string pattern_name;
  bool respect_colors = false;
  std::uint64_t search_budget = 50'000'000;
  auto* diagram = app.add_subcommand("diagram", "diagram combinatorics");
  diagram->require_subcommand(1);
  diagram->fallthrough();
  auto* dfind = diagram->add_subcommand("find", "induced copies of a pattern");
  dfind->add_option("pattern", pattern_name, "pattern diagram name")->required();
  dfind->add_option("diagram", diagram_name, "haystack diagram name");
  dfind->add_option("--budget", search_budget, "search node budget");
  auto* daut = diagram->add_subcommand("aut", "automorphism group order");
  daut->add_option("diagram", diagram_name, "builtin name");
  daut->add_flag("--respect-colors", respect_colors, "only color-preserving automorphisms");
  auto* dshow = diagram->add_subcommand("show", "print a diagram in the text format");
  dshow->add_option("diagram", diagram_name, "builtin name");

  // rep
  auto* rep = app.add_subcommand("rep", "complex reflection representations");
  rep->require_subcommand(1);
  rep->fallthrough();
  auto* rrel = rep->add_subcommand("relations", "generator orders and braid/commutation relations");
  auto* rclo = rep->add_subcommand("closure", "order of the generated group (definite lattices)");
  for (auto* s : {rrel, rclo}) {
    s->add_option("diagram", diagram_name, "builtin name");
    s->add_option("--ring", ring, "eisenstein or gauss")->check(CLI::IsMember({"eisenstein", "gauss"}));
  }
  auto* rspider = rep->add_subcommand("spider", "order of the spider element on the Allcock lattice (exploratory)");

  // polytopes
  std::string method = "sum", face;
  auto* vinberg = app.add_subcommand("vinberg", "finite volume certificate of the real polytope");
  vinberg->add_option("diagram", diagram_name, "builtin name");
  auto* weyl = app.add_subcommand("weyl", "Weyl point and mirror distances");
  weyl->add_option("diagram", diagram_name, "builtin name");
  weyl->add_option("--method", method, "sum or points-lines")->check(CLI::IsMember({"sum", "points-lines"}));
  weyl->add_option("--face", face, "comma separated labels of an elliptic J; project to the face");

  // definite
  long bound = 3;
  auto* rootsc = app.add_subcommand("roots", "short vectors of the quotient lattice");
  rootsc->add_option("diagram", diagram_name, "builtin name");
  rootsc->add_option("--ring", ring, "eisenstein or gauss")->check(CLI::IsMember({"eisenstein", "gauss"}));
  rootsc->add_option("--bound", bound, "norm bound")->check(CLI::PositiveNumber);
  auto* lemma = app.add_subcommand("lemma", "rank-5 extension sweep");
  lemma->add_option("--bound", bound, "norm bound on the entries")->check(CLI::PositiveNumber);

  // polygon
  int n = 12;
  std::string mu_text, z_text, svg_path;
  bool regular = false;
  auto* polygon = app.add_subcommand("polygon", "Schwarz-Christoffel edge integrals");
  polygon->add_option("--n", n, "number of vertices when --mu is not given (equal weights 2/n)")->check(CLI::Range(4, 64));
  polygon->add_option("--mu", mu_text, "weights, comma separated; fractions allowed");
  polygon->add_option("--z", z_text, "increasing prevertices, comma separated");
  polygon->add_option("--svg", svg_path, "write the reconstructed polygon as SVG");
  polygon->add_flag("--regular", regular, "solve for the regular polygon instead of taking --z");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify || *report) {
      RunOptions opt;
      opt.threads = g.threads;
      opt.budget_elements = g.budget;
      opt.tol = g.tol;
      opt.regenerate = regenerate;
      if (list) {
        for (const auto& c : claim_catalog())
          std::cout << c.id << (c.exploratory ? "  (exploratory)" : "") << "  " << c.description << "\n";
        return 0;
      }
      Report r;
      if (*report && !from.empty()) {
        r = parse_report(read_file(from));
      } else {
        if (!regenerate) opt.golden = Golden::load(golden_path);
        r = run_claims(filter, opt);
        if (r.claims.empty()) throw UsageError("no claim matches '" + filter + "'");
        if (regenerate) {
          Golden out;
          try {
            out = Golden::load(golden_path);
          } catch (const std::exception&) {
          }
          for (const auto& [k, v] : r.golden_updates) out.set(k, v);
          std::ofstream f(golden_path);
          f << format_golden(out);
          std::cerr << "wrote " << r.golden_updates.size() << " golden values to " << golden_path << "\n";
        }
      }
      if (g.json_out)
        std::cout << report_to_json(r).dump(2) << "\n";
      else
        std::cout << report_to_text(r);
      return r.failed() ? 1 : 0;
    }

    if (*lbuild || *linv) {
      CoxeterDiagram d = get_diagram(g, diagram_name);
      auto emit = [&](auto tag) {
        using R = decltype(tag);
        auto l = gram_from_diagram<R>(d);
        if (*linv) return print(invariants_json(l));
        print(lattice_json(quotient ? quotient_by_radical(l).lattice : l));
      };
      if (ring == "gauss")
        emit(GaussInt());
      else
        emit(EisensteinInt());
      return 0;
    }

    if (*dfind) {
      CoxeterDiagram hay = get_diagram(g, diagram_name);
      CoxeterDiagram pat = builtin_diagram(pattern_name);
      auto s = find_induced(hay, pat, search_budget);
      json emb = json::array();
      for (const auto& e : s.embeddings) {
        json m = json::array();
        for (int v : e) m.push_back(hay.label(v));
        emb.push_back(m);
      }
      print({{"count", s.embeddings.size()}, {"complete", s.complete}, {"nodes_visited", s.nodes_visited},
             {"embeddings", emb}});
      return s.complete ? 0 : 1;
    }
    if (*daut) {
      CoxeterDiagram d = get_diagram(g, diagram_name);
      print({{"nodes", d.size()}, {"respect_colors", respect_colors}, {"order", automorphism_count(d, respect_colors)}});
      return 0;
    }
    if (*dshow) {
      std::cout << format_diagram(get_diagram(g, diagram_name));
      return 0;
    }

    if (*rrel || *rclo) {
      CoxeterDiagram d = get_diagram(g, diagram_name);
      if (ring == "gauss") return *rrel ? rep_relations<GaussInt>(g, d) : rep_closure<GaussInt>(g, d);
      return *rrel ? rep_relations<EisensteinInt>(g, d) : rep_closure<EisensteinInt>(g, d);
    }
    if (*rspider) {
      auto r = rep_from_diagram<EisensteinInt>(builtin_diagram("I26"));
      auto o = word_order(r, spider_word(), g.budget);
      print({{"word", spider_word()},
             {"order", o.order ? json(*o.order) : json("budget exceeded")},
             {"projective_order", o.projective_order ? json(*o.projective_order) : json("budget exceeded")},
             {"powers_tried", o.tried}});
      return 0;
    }

    if (*vinberg) {
      CoxeterDiagram d = get_diagram(g, diagram_name);
      auto s = real_form(d);
      print(certificate_json(s, vinberg_check(s)));
      return 0;
    }
    if (*weyl) {
      CoxeterDiagram d = get_diagram(g, diagram_name);
      auto s = real_form(d);
      auto w = weyl_points(s, method);
      json out{{"method", w.method}, {"norm", to_string(w.norm)}, {"tower", w.tower}, {"equidistant", w.equidistant}};
      json dist = json::object();
      for (Index i = 0; i < s.size(); ++i) dist[d.label(static_cast<int>(i))] = to_string(w.sinh2[i]);
      out["sinh2"] = dist;
      if (!face.empty()) {
        std::vector<std::string> l;
        std::stringstream in(face);
        std::string tok;
        while (std::getline(in, tok, ',')) l.push_back(tok);
        NodeSet j = d.nodes(l);
        auto p = face_project(s, j, w.w0);
        json fd = json::object();
        for (int k : zperp(d, j)) fd[d.label(k)] = to_string(sinh2_distance(s, p, k));
        out["face"] = {{"J", labels_json(d, j)}, {"sinh2", fd}};
      }
      print(out);
      return 0;
    }

    if (*rootsc) {
      CoxeterDiagram d = get_diagram(g, diagram_name);
      return ring == "gauss" ? roots<GaussInt>(g, d, bound) : roots<EisensteinInt>(g, d, bound);
    }
    if (*lemma) {
      auto r = lemma_search(bound, g.threads);
      json pd = json::array();
      for (const auto& v : r.positive_definite) {
        json t = json::array();
        for (const auto& x : v) t.push_back(to_string(x));
        pd.push_back(t);
      }
      print({{"bound", bound}, {"candidates", r.candidates}, {"positive_definite", pd},
             {"determinant_mismatches", r.determinant_mismatches},
             {"inequality_violations", r.inequality_violations}, {"only_trivial", r.only_trivial()}});
      return r.only_trivial() ? 0 : 1;
    }

    if (*polygon) {
      std::vector<double> mu = mu_text.empty() ? std::vector<double>(n, 2.0 / n) : parse_list(mu_text);
      std::vector<double> z;
      if (regular) {
        if (!mu_text.empty()) throw UsageError("--regular uses equal weights; drop --mu");
        z = find_regular(static_cast<int>(mu.size())).z;
      } else if (!z_text.empty()) {
        z = parse_list(z_text);
      } else {
        for (std::size_t k = 1; k <= mu.size(); ++k) z.push_back(static_cast<double>(k));
      }
      auto d = edge_integrals(z, mu, g.tol);
      auto r = closure_residuals(d);
      json w = json::array(), v = json::array();
      for (const auto& x : d.w) w.push_back({x.real(), x.imag()});
      for (const auto& x : d.vertices) v.push_back({x.real(), x.imag()});
      print({{"mu", d.mu}, {"z", d.z}, {"w", w}, {"l", d.l}, {"vertices", v}, {"angles", d.angles},
             {"residuals", {r.r1, r.r2}}, {"area", d.area}, {"error_estimate", d.error_estimate},
             {"nodes_used", d.nodes_used}});
      if (!svg_path.empty()) {
        std::ofstream f(svg_path);
        f << polygon_svg(d);
      }
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
