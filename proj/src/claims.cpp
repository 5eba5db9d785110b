#include "hyperlat/claims.hpp"

#include "hyperlat/definite.hpp"
#include "hyperlat/parallel.hpp"
#include "hyperlat/polygon.hpp"
#include "hyperlat/polytope.hpp"
#include "hyperlat/reflect.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <mutex>
#include <numbers>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#ifndef HYPERLAT_GOLDEN_PATH
#define HYPERLAT_GOLDEN_PATH "data/golden.txt"
#endif

namespace hyperlat {

std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::pass: return "pass";
    case ClaimStatus::fail: return "fail";
    case ClaimStatus::skipped: return "skipped";
    case ClaimStatus::exploratory: return "exploratory";
  }
  return "?";
}

ClaimStatus parse_status(const std::string& s) {
  if (s == "pass") return ClaimStatus::pass;
  if (s == "fail") return ClaimStatus::fail;
  if (s == "skipped") return ClaimStatus::skipped;
  if (s == "exploratory") return ClaimStatus::exploratory;
  throw std::invalid_argument("unknown claim status: " + s);
}

// ---------------------------------------------------------------------------
// Golden values

namespace {

struct GoldenKey {
  const char* key;
  const char* comment;
};

const std::vector<GoldenKey>& golden_keys() {
  static const std::vector<GoldenKey> keys = {
      {"diagram.free12gons", "induced 12-cycles of I26 up to cycle symmetry; pattern search and plain path extension agree"},
      {"closure.A2", "order of the triflection group on L(A2), breadth-first closure"},
      {"closure.A3", "order of the triflection group on L(A3), breadth-first closure"},
      {"closure.A4", "order of the triflection group on L(A4), breadth-first closure"},
      {"negative.A3_det", "Gram determinant of L(A3)"},
      {"negative.A2A1_det", "Gram determinant of L(A2) + L(A1)"},
      {"critical.I26.A5", "critical A5 subsets of the I26 real form"},
      {"critical.I26.D4", "critical D4 subsets of the I26 real form"},
      {"cusps.12cell", "ideal vertices of the tildeA11 polytope, deduplicated by N(J)"},
      {"cusps.26cell", "ideal vertices of the I26 polytope, deduplicated by N(J)"},
      {"modtwo.Y322G.singular", "nonzero singular vectors of L(Y322, Gauss) mod (1+i)"},
      {"polygon.regular12.z", "prevertices of the regular 12-gon found by Gauss-Newton, z1, z2, z12 held at -cot(pi (k - 1/2)/12)"},
  };
  return keys;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

Golden Golden::parse(const std::string& text) {
  Golden g;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto eq = t.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("golden line " + std::to_string(number) + ": expected key = value");
    g.values_[trim(t.substr(0, eq))] = trim(t.substr(eq + 1));
  }
  return g;
}

Golden Golden::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read golden file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

json Golden::get(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) throw std::runtime_error("golden value missing: " + key);
  return json::parse(it->second);
}

std::string format_golden(const Golden& g) {
  std::ostringstream out;
  out << "# Implementation-derived reference values. Regenerate only with\n"
      << "# `hyperlat verify --regenerate-golden` after reviewing the change.\n";
  std::set<std::string> known;
  for (const auto& k : golden_keys()) {
    known.insert(k.key);
    if (!g.has(k.key)) continue;
    out << "\n# " << k.comment << "\n" << k.key << " = " << g.values().at(k.key) << "\n";
  }
  for (const auto& [k, v] : g.values())
    if (!known.count(k)) out << "\n" << k << " = " << v << "\n";
  return out.str();
}

std::string default_golden_path() { return HYPERLAT_GOLDEN_PATH; }

// ---------------------------------------------------------------------------

bool Report::failed() const {
  return std::any_of(claims.begin(), claims.end(), [](const ClaimRecord& c) { return c.status == ClaimStatus::fail; });
}

bool glob_match(const std::string& pattern, const std::string& id) {
  if (pattern.find(',') != std::string::npos) {
    std::istringstream in(pattern);
    std::string part;
    while (std::getline(in, part, ','))
      if (glob_match(trim(part), id)) return true;
    return false;
  }
  // iterative wildcard match with backtracking on the last *
  std::size_t p = 0, s = 0, star = std::string::npos, mark = 0;
  while (s < id.size()) {
    if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == id[s])) {
      ++p;
      ++s;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = s;
    } else if (star != std::string::npos) {
      p = star + 1;
      s = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

namespace {

// Lazily computed shared objects; safe to request from several claims at once.
template <class T>
class Lazy {
 public:
  template <class F>
  const T& get(F&& make) {
    std::call_once(once_, [&] { value_.emplace(make()); });
    return *value_;
  }

 private:
  std::once_flag once_;
  std::optional<T> value_;
};

struct Env {
  const RunOptions& opt;
  unsigned threads = 1;  // for work inside a single claim

  Lazy<CoxeterDiagram> i26;
  Lazy<Quotient<EisensteinInt>> i26_quotient;
  Lazy<ReflectionRep<EisensteinInt>> i26_rep;
  Lazy<RealQuadSpace> i26_space, a11_space, y555_space;
  Lazy<PolytopeCertificate> i26_cert, a11_cert, y555_cert;
  Lazy<WeylData> i26_weyl, a11_weyl;
  Lazy<ClosureResult> closure[5];

  explicit Env(const RunOptions& o) : opt(o) {}

  const CoxeterDiagram& I26() {
    return i26.get([] { return builtin_diagram("I26"); });
  }
  const Quotient<EisensteinInt>& I26_quotient() {
    return i26_quotient.get([&] { return quotient_by_radical(gram_from_diagram<EisensteinInt>(I26())); });
  }
  const ReflectionRep<EisensteinInt>& I26_rep() {
    return i26_rep.get([&] { return rep_from_quotient(I26_quotient(), I26()); });
  }
  const RealQuadSpace& I26_space() {
    return i26_space.get([&] { return real_form(I26()); });
  }
  const RealQuadSpace& A11_space() {
    return a11_space.get([] { return real_form(builtin_diagram("tildeA11")); });
  }
  const RealQuadSpace& Y555_space() {
    return y555_space.get([] { return real_form(builtin_diagram("Y555")); });
  }
  const PolytopeCertificate& I26_cert() {
    return i26_cert.get([&] { return vinberg_check(I26_space()); });
  }
  const PolytopeCertificate& A11_cert() {
    return a11_cert.get([&] { return vinberg_check(A11_space()); });
  }
  const PolytopeCertificate& Y555_cert() {
    return y555_cert.get([&] { return vinberg_check(Y555_space()); });
  }
  const WeylData& I26_weyl() {
    return i26_weyl.get([&] { return weyl_points(I26_space(), "points-lines"); });
  }
  const WeylData& A11_weyl() {
    return a11_weyl.get([&] { return weyl_points(A11_space(), "sum"); });
  }
  const ClosureResult& closure_of(int n) {
    return closure[n].get([&] {
      auto rep = rep_from_diagram<EisensteinInt>(builtin_diagram("A" + std::to_string(n)));
      return group_closure(rep, opt.budget_elements, threads);
    });
  }
};

struct Outcome {
  Outcome() = default;
  Outcome(json e, json c) : expected(std::move(e)), computed(std::move(c)) {}

  json expected, computed;
  std::optional<bool> pass;  // defaults to expected == computed
  std::string note;
  std::map<std::string, std::string> golden;
};

struct Claim {
  ClaimInfo info;
  std::function<Outcome(Env&)> run;
};

// Expected value from the golden file, or the computed one when regenerating.
json golden(Env& env, Outcome& o, const std::string& key, const json& computed) {
  if (env.opt.regenerate) {
    o.golden[key] = computed.dump();
    return computed;
  }
  return env.opt.golden.get(key);
}

json sig(const Signature& s) { return json::array({s.positive, s.negative, s.zero}); }

template <class R>
LatticeInvariants builtin_invariants(const std::string& name) {
  return invariants(gram_from_diagram<R>(builtin_diagram(name)));
}

template <class R>
Outcome radical_claim(const std::string& name, Index expected) {
  auto inv = builtin_invariants<R>(name);
  return {json{{"radical", expected}}, json{{"radical", inv.radical_dimension}}};
}

template <class R>
Outcome quotient_signature_claim(const std::string& name, Index rank, Signature s) {
  auto inv = builtin_invariants<R>(name);
  return {json{{"rank", rank}, {"signature", sig(s)}},
          json{{"rank", inv.rank - inv.radical_dimension}, {"signature", sig(inv.signature)}}};
}

json invariants_json(const LatticeInvariants& inv) {
  return json{{"rank", inv.rank - inv.radical_dimension},
              {"signature", sig(inv.signature)},
              {"determinant", inv.determinant.str()}};
}

Outcome match_claim(const LatticeInvariants& a, const LatticeInvariants& b) {
  auto cmp = invariants_match(a, b);
  Outcome o{json{{"match", true}}, json{{"match", cmp.match}, {"left", invariants_json(a)}, {"right", invariants_json(b)}}};
  o.pass = cmp.match;
  for (const auto& m : cmp.mismatches) o.note += (o.note.empty() ? "" : "; ") + m;
  return o;
}

Outcome relations_claim(const RelationReport& r, std::size_t pairs, std::size_t braids, std::size_t gens) {
  std::size_t good = 0;
  for (const auto& g : r.generators) good += g.unitary && g.order_ok;
  return {json{{"generators_ok", gens}, {"pairs", pairs}, {"braid_pairs", braids}, {"failures", 0}},
          json{{"generators_ok", good}, {"pairs", r.pairs_checked}, {"braid_pairs", r.braid_pairs},
               {"failures", r.failures.size()}}};
}

std::vector<std::string> labels(const CoxeterDiagram& d, const NodeSet& s) { return d.labels_of(s); }

const std::vector<std::string>& free12_labels() {
  static const std::vector<std::string> l = {"a", "b1", "c1", "d1", "e1", "f1", "a3", "f2", "e2", "d2", "c2", "b2"};
  return l;
}

const std::vector<std::string>& a4_labels() {
  static const std::vector<std::string> l = {"c3", "d3", "e3", "f3"};
  return l;
}

std::string type_histogram_key(const std::vector<CriticalEntry>& c) {
  std::map<std::string, int> m;
  for (const auto& e : c) ++m[e.subset.type + "->" + e.n_type + "/rank" + std::to_string(e.n_rank)];
  std::string out;
  for (const auto& [k, v] : m) out += (out.empty() ? "" : ", ") + k + " x" + std::to_string(v);
  return out;
}

json critical_types(const std::vector<CriticalEntry>& c) {
  std::map<std::string, int> m;
  for (const auto& e : c) ++m[e.subset.type];
  json j = json::object();
  for (const auto& [k, v] : m) j[k] = v;
  return j;
}

std::vector<double> uniform_config(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(-10, 10);
  std::vector<double> z(n);
  for (auto& x : z) x = u(rng);
  std::sort(z.begin(), z.end());
  return z;
}

double dot_q(const Eigen::MatrixXd& q, const std::vector<double>& l) {
  Eigen::Map<const Eigen::VectorXd> v(l.data(), static_cast<Eigen::Index>(l.size()));
  return v.dot(q * v);
}

constexpr double pi = std::numbers::pi;

// ---------------------------------------------------------------------------

std::vector<Claim> build_catalog() {
  std::vector<Claim> c;
  auto add = [&](std::string id, std::string desc, std::string ref, std::function<Outcome(Env&)> f,
                 bool exploratory = false) {
    c.push_back({{std::move(id), std::move(desc), std::move(ref), exploratory}, std::move(f)});
  };
  using E = EisensteinInt;
  using G = GaussInt;

  // -- kernels
  add("kernel.An_small", "L(A_n) is nondegenerate for n = 1..4", "positive definite chain lattices L^1..L^4",
      [](Env&) {
        json got = json::array();
        for (int n = 1; n <= 4; ++n) got.push_back(builtin_invariants<E>("A" + std::to_string(n)).radical_dimension);
        return Outcome{json{{"radical", {0, 0, 0, 0}}}, json{{"radical", got}}};
      });
  add("kernel.A5", "L(A5) has a one dimensional radical", "A5 chain: kernel with quotient L^4",
      [](Env&) { return radical_claim<E>("A5", 1); });
  add("kernel.An_lorentzian", "L(A_n) is nondegenerate for n = 6..10", "Lorentzian chain lattices L^6..L^10",
      [](Env&) {
        json got = json::array();
        for (int n = 6; n <= 10; ++n) got.push_back(builtin_invariants<E>("A" + std::to_string(n)).radical_dimension);
        return Outcome{json{{"radical", {0, 0, 0, 0, 0}}}, json{{"radical", got}}};
      });
  add("kernel.A11", "L(A11) has a one dimensional radical", "A11 chain: quotient L^10",
      [](Env&) { return radical_claim<E>("A11", 1); });
  add("kernel.tildeA11", "L(tildeA11) has a two dimensional radical", "affine 12-cycle: quotient again L^10",
      [](Env&) { return radical_claim<E>("tildeA11", 2); });
  add("kernel.Y555", "L(Y555) has a two dimensional radical", "Y555 lattice: two dimensional kernel",
      [](Env&) { return radical_claim<E>("Y555", 2); });
  add("kernel.I26", "L(I26) has a twelve dimensional radical", "incidence lattice of P^2(3): kernel of dimension 12",
      [](Env& env) {
        auto inv = invariants(gram_from_diagram<E>(env.I26()));
        return Outcome{json{{"radical", 12}}, json{{"radical", inv.radical_dimension}}};
      });
  add("kernel.Y333G", "L(Y333) over Z[i] has a two dimensional radical", "Gauss lattice of Y333",
      [](Env&) { return radical_claim<G>("Y333", 2); });
  add("kernel.I14G", "L(I14) over Z[i] has a six dimensional radical", "Gauss incidence lattice of P^2(2)",
      [](Env&) { return radical_claim<G>("I14", 6); });

  // -- signatures and invariants
  add("signature.A7", "L(A7) is Lorentzian of signature (6,1)", "chain lattices are Lorentzian from n = 6",
      [](Env&) { return quotient_signature_claim<E>("A7", 7, {6, 1, 0}); });
  add("signature.I26", "quotient of L(I26) has rank 14 and signature (13,1)", "Allcock lattice of rank 14",
      [](Env&) { return quotient_signature_claim<E>("I26", 14, {13, 1, 0}); });
  add("signature.Y555", "quotient of L(Y555) has rank 14 and signature (13,1)", "Y555 quotient is L(Y544)",
      [](Env&) { return quotient_signature_claim<E>("Y555", 14, {13, 1, 0}); });
  add("signature.tildeA11", "quotient of L(tildeA11) has rank 10 and signature (9,1)", "quotient L^10",
      [](Env&) { return quotient_signature_claim<E>("tildeA11", 10, {9, 1, 0}); });
  add("signature.Y322G", "L(Y322) over Z[i] has signature (7,1)", "Lorentzian Gauss lattice of rank 8",
      [](Env&) { return quotient_signature_claim<G>("Y322", 8, {7, 1, 0}); });
  add("invariants.I26_Y555", "quotients of L(I26) and L(Y555) have equal invariants",
      "both quotients equal the Allcock lattice",
      [](Env&) { return match_claim(builtin_invariants<E>("I26"), builtin_invariants<E>("Y555")); });
  add("invariants.Y555_Y544", "quotient of L(Y555) matches L(Y544)", "Y555 quotient is the Lorentzian L(Y544)",
      [](Env&) { return match_claim(builtin_invariants<E>("Y555"), builtin_invariants<E>("Y544")); });
  add("invariants.tildeA11_A10", "quotient of L(tildeA11) matches L(A10)", "tildeA11 quotient is L^10",
      [](Env&) { return match_claim(builtin_invariants<E>("tildeA11"), builtin_invariants<E>("A10")); });
  add("invariants.A3_vs_A2A1", "L(A3) and L(A2)+L(A1) differ in determinant (negative case)",
      "direct determinant computation", [](Env& env) {
        auto a3 = builtin_invariants<E>("A3");
        auto sum = invariants(direct_sum(gram_from_diagram<E>(builtin_diagram("A2")), gram_from_diagram<E>(builtin_diagram("A1"))));
        auto cmp = invariants_match(a3, sum);
        Outcome o;
        json d3 = std::stoll(a3.determinant.str()), d21 = std::stoll(sum.determinant.str());
        o.computed = json{{"match", cmp.match}, {"det_A3", d3}, {"det_A2A1", d21}};
        o.expected = json{{"match", false},
                          {"det_A3", golden(env, o, "negative.A3_det", d3)},
                          {"det_A2A1", golden(env, o, "negative.A2A1_det", d21)}};
        return o;
      });
  add("gram.A2", "Gram of A2 is [[3, theta], [-theta, 3]]", "Gram formula on a black-white bond", [](Env&) {
        auto l = gram_from_diagram<E>(builtin_diagram("A2"));
        json got = json::array();
        for (Index i = 0; i < 2; ++i) {
          json row = json::array();
          for (Index j = 0; j < 2; ++j) row.push_back(to_string(l.gram(i, j)));
          got.push_back(row);
        }
        json want = json::array({json::array({to_string(E(3)), to_string(E::theta())}),
                                 json::array({to_string(E(-E::theta())), to_string(E(3))})});
        return Outcome{want, got};
      });
  add("gram.I14G", "Gauss Gram of I14 has diagonal 2 and 21 bonds of (1+i)", "I14 over Z[i], valency 3", [](Env&) {
        auto d = builtin_diagram("I14");
        auto l = gram_from_diagram<G>(d);
        int diag = 0, bonds = 0, other = 0;
        const G b = G::one_plus_i();
        for (Index i = 0; i < l.rank(); ++i)
          for (Index j = 0; j < l.rank(); ++j) {
            if (i == j) diag += l.gram(i, i) == G(2);
            else if (l.gram(i, j) == b || l.gram(i, j) == conj(b)) bonds += i < j;
            else if (l.gram(i, j) != G(0)) ++other;
          }
        return Outcome{json{{"diagonal_2", 14}, {"bonds", 21}, {"other", 0}},
                       json{{"diagonal_2", diag}, {"bonds", bonds}, {"other", other}}};
      });
  add("quotient.I26", "images of all 26 basis vectors in the I26 quotient have norm 3",
      "quotient of L(I26) is the Allcock lattice", [](Env& env) {
        const auto& q = env.I26_quotient();
        int ok = 0;
        for (Index i = 0; i < q.projection.cols(); ++i) ok += q.lattice.norm(q.projection.col(i)) == E(3);
        return Outcome{json{{"rank", 14}, {"norm3_images", 26}},
                       json{{"rank", q.lattice.rank()}, {"norm3_images", ok}}};
      });
  add("null.q3", "null vectors delta_l of L(I26) and d_l of the real form", "null vector identities for P^2(3)",
      [](Env&) {
        auto r = incidence_null_identities(3);
        return Outcome{json{{"point_failures", 0}, {"line_failures", 0}, {"real_checked", true},
                            {"real_failures", 0}, {"differences_in_radical", true}, {"span", 12}},
                       json{{"point_failures", r.point_failures}, {"line_failures", r.line_failures},
                            {"real_checked", r.real_checked},
                            {"real_failures", r.real_point_failures + r.real_line_failures},
                            {"differences_in_radical", r.differences_in_radical}, {"span", r.span_dimension}}};
      });
  add("null.q2", "Gauss analogue of the null vectors for I14", "null vector identities for P^2(2)", [](Env&) {
        auto r = incidence_null_identities(2);
        return Outcome{json{{"ok", true}, {"span", 6}}, json{{"ok", r.ok()}, {"span", r.span_dimension}}};
      });

  // -- diagrams
  add("diagram.I26.valency", "I26 has 26 nodes of valency 4; two points share exactly one line",
      "incidence diagram I26 has valency 4", [](Env& env) {
        const auto& d = env.I26();
        int deg4 = 0, bad_pairs = 0;
        for (int i = 0; i < d.size(); ++i) deg4 += d.degree(i) == 4;
        for (int i = 0; i < d.size(); ++i)
          for (int j = i + 1; j < d.size(); ++j) {
            if (d.color(i) != Color::black || d.color(j) != Color::black) continue;
            int common = 0;
            for (int k : d.neighbors(i)) common += d.adjacent(k, j);
            bad_pairs += common != 1;
          }
        return Outcome{json{{"nodes", 26}, {"valency4", 26}, {"bad_point_pairs", 0}},
                       json{{"nodes", d.size()}, {"valency4", deg4}, {"bad_point_pairs", bad_pairs}}};
      });
  add("diagram.I26.aut_colors", "color-preserving automorphisms of I26", "group of order 5,616", [](Env& env) {
        return Outcome{5616, automorphism_count(env.I26(), true)};
      });
  add("diagram.I26.aut", "all automorphisms of I26", "L3(3).2 of order 11,232", [](Env& env) {
        return Outcome{11232, automorphism_count(env.I26(), false)};
      });
  add("diagram.I14.aut", "all automorphisms of I14", "L3(2).2, twice 168", [](Env&) {
        return Outcome{336, automorphism_count(builtin_diagram("I14"), false)};
      });
  add("diagram.I26.Y555", "I26 on {a, b_i, c_i, d_i, e_i, f_i} is Y555", "Y555 inside I26", [](Env& env) {
        std::vector<std::string> l = {"a"};
        for (char ch : std::string("bcdef"))
          for (int i = 1; i <= 3; ++i) l.push_back(std::string(1, ch) + std::to_string(i));
        return Outcome{true, isomorphic(induced(env.I26(), l), builtin_diagram("Y555"))};
      });
  add("diagram.I26.Y555.maximal", "no node of I26 extends the named Y555 to a 17-node induced tree",
      "Y555 is a maximal subtree", [](Env& env) {
        const CoxeterDiagram& d = env.I26();
        std::vector<std::string> l = {"a"};
        for (char ch : std::string("bcdef"))
          for (int i = 1; i <= 3; ++i) l.push_back(std::string(1, ch) + std::to_string(i));
        NodeSet base = d.nodes(l);
        int trees = 0, tried = 0;
        for (int v = 0; v < d.size(); ++v) {
          if (std::find(base.begin(), base.end(), v) != base.end()) continue;
          NodeSet s = base;
          s.push_back(v);
          std::sort(s.begin(), s.end());
          CoxeterDiagram sub = induced(d, s);
          ++tried;
          trees += components(sub).size() == 1 && sub.edge_count() == sub.size() - 1;
        }
        return Outcome{json{{"extensions_tried", 10}, {"trees", 0}},
                       json{{"extensions_tried", tried}, {"trees", trees}}};
      });
  add("diagram.I26.3A5", "I26 on the b..f arms is 3A5", "named 3A5 subdiagram", [](Env& env) {
        std::vector<std::string> l;
        for (int i = 1; i <= 3; ++i)
          for (char ch : std::string("bcdef")) l.push_back(std::string(1, ch) + std::to_string(i));
        return Outcome{"3A5", component_type(env.I26(), env.I26().nodes(l))};
      });
  add("diagram.I26.4D4", "I26 on a, b_i, d_i, e_i, f_i, z_i is 4D4", "named 4D4 subdiagram", [](Env& env) {
        std::vector<std::string> l = {"a", "b1", "b2", "b3"};
        for (int i = 1; i <= 3; ++i)
          for (char ch : std::string("defz")) l.push_back(std::string(1, ch) + std::to_string(i));
        return Outcome{"4D4", component_type(env.I26(), env.I26().nodes(l))};
      });
  add("diagram.I26.tildeA11", "the named free 12-gon is an induced tildeA11 found by the pattern search",
      "free 12-gon making tildeA11", [](Env& env) {
        const auto& d = env.I26();
        NodeSet s = d.nodes(free12_labels());
        auto search = find_induced(d, builtin_diagram("tildeA11"));
        bool found = false;
        for (auto e : search.embeddings) {
          std::sort(e.begin(), e.end());
          found |= e == s;
        }
        return Outcome{json{{"type", "tildeA11"}, {"found", true}},
                       json{{"type", connected_type(induced(d, s))}, {"found", found}}};
      });
  add("diagram.zperp", "Z(A4) is the free 12-gon and Z(Z(A4)) = A4", "Z(A4) = tildeA11 and back", [](Env& env) {
        const auto& d = env.I26();
        NodeSet j = d.nodes(a4_labels());
        NodeSet z = zperp(d, j);
        NodeSet zz = zperp(d, z);
        NodeSet want = d.nodes(free12_labels());
        std::sort(want.begin(), want.end());
        return Outcome{json{{"Z", labels(d, want)}, {"Z_type", "tildeA11"}, {"ZZ", labels(d, j)}},
                       json{{"Z", labels(d, z)}, {"Z_type", component_type(d, z)}, {"ZZ", labels(d, zz)}}};
      });
  add("diagram.free12gons", "induced 12-cycles in I26 by two independent enumerators", "free 12-gons in I26",
      [](Env& env) {
        auto search = find_induced(env.I26(), builtin_diagram("tildeA11"));
        std::uint64_t plain = count_induced_cycles(env.I26(), 12);
        Outcome o;
        o.computed = json{{"pattern_search", search.embeddings.size()}, {"path_extension", plain},
                          {"complete", search.complete}};
        json g = golden(env, o, "diagram.free12gons", plain);
        o.expected = json{{"pattern_search", g}, {"path_extension", g}, {"complete", true}};
        return o;
      });

  // -- representations
  add("rep.I26.relations", "26 triflections on the Allcock lattice: orders, unitarity, 325 pair relations",
      "Hermitian representation of the I26 Artin group", [](Env& env) {
        return relations_claim(verify_relations(env.I26_rep(), env.I26(), env.threads), 325, 52, 26);
      });
  add("rep.tildeA11.relations", "12 triflections on L^10 with all 66 pair relations",
      "triflection representation of tildeA11", [](Env& env) {
        auto d = builtin_diagram("tildeA11");
        return relations_claim(verify_relations(rep_from_diagram<E>(d), d, env.threads), 66, 12, 12);
      });
  add("rep.Y322G.relations", "8 tetraflections on L(Y322, Gauss) with all 28 pair relations",
      "tetraflection representation of Y322", [](Env& env) {
        auto d = builtin_diagram("Y322");
        return relations_claim(verify_relations(rep_from_diagram<G>(d), d, env.threads), 28, 7, 8);
      });
  add("rep.compatible", "A10, A11 and tildeA11 act on L^10 by identical shared generators",
      "three compatible triflection representations", [](Env&) {
        auto t = builtin_diagram("tildeA11");
        std::vector<int> order;
        for (int i = 1; i <= 11; ++i) order.push_back(t.require(std::to_string(i)));
        order.push_back(t.require("0"));
        CoxeterDiagram full = reorder(t, order);
        NodeSet n10, n11;
        for (int i = 0; i < 10; ++i) n10.push_back(i);
        n11 = n10;
        n11.push_back(10);
        std::vector<CoxeterDiagram> ds = {induced(full, n10), induced(full, n11), full};
        std::vector<ReflectionRep<E>> reps;
        int shared_basis = 0;
        for (const auto& d : ds) {
          auto q = quotient_by_radical(gram_from_diagram<E>(d));
          shared_basis += q.basis_nodes == std::vector<Index>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
          reps.push_back(rep_from_quotient(q, d));
        }
        int identical = 0;
        for (int i = 1; i <= 10; ++i) {
          std::string l = std::to_string(i);
          identical += reps[0].generator(l) == reps[1].generator(l) && reps[1].generator(l) == reps[2].generator(l);
        }
        identical += reps[1].generator("11") == reps[2].generator("11");
        return Outcome{json{{"rank", 10}, {"shared_basis", 3}, {"identical", 11}},
                       json{{"rank", reps[2].lattice.rank()}, {"shared_basis", shared_basis}, {"identical", identical}}};
      });
  for (int n = 2; n <= 4; ++n) {
    static const char* st[] = {"", "", "ST4", "ST25", "ST32"};
    add("closure.A" + std::to_string(n), "order of the triflection group on L(A" + std::to_string(n) + ")",
        std::string("finite group ") + st[n], [n](Env& env) {
          const auto& r = env.closure_of(n);
          Outcome o;
          o.computed = json{{"order", r.order}, {"complete", r.complete}};
          o.expected = json{{"order", golden(env, o, "closure.A" + std::to_string(n), r.order)}, {"complete", true}};
          if (!r.complete) o.note = "element budget exhausted";
          return o;
        });
  }
  add("closure.degrees", "order on L^4 equals the product 12*18*24*30 of the invariant degrees",
      "invariant degrees 12, 18, 24, 30", [](Env& env) {
        const auto& r = env.closure_of(4);
        Outcome o{12 * 18 * 24 * 30, r.order};
        if (!r.complete) o.note = "element budget exhausted";
        return o;
      });
  add("spider.order", "order of the spider element a b1 c1 a b2 c2 a b3 c3 on the Allcock lattice",
      "spider element (order not stated)", [](Env& env) {
        std::uint64_t budget = std::min<std::uint64_t>(env.opt.budget_elements, 100000);
        auto r = word_order(env.I26_rep(), spider_word(), budget);
        Outcome o;
        o.expected = nullptr;
        o.computed = json{{"order", r.order ? json(*r.order) : json("budget exceeded")},
                          {"projective_order", r.projective_order ? json(*r.projective_order) : json("budget exceeded")},
                          {"powers_tried", r.tried}};
        return o;
      },
      true);

  // -- definite lattices
  for (int n = 1; n <= 4; ++n) {
    static const int mirrors[] = {0, 1, 4, 12, 40};
    add("mirrors.L" + std::to_string(n), "mirrors of L(A" + std::to_string(n) + ") and norm-3 vector count",
        "1, 4, 12, 40 mirrors", [n](Env& env) {
          auto inv = short_vectors(gram_from_diagram<E>(builtin_diagram("A" + std::to_string(n))), Integer(3), env.threads);
          std::uint64_t norm3 = inv.count_by_norm.count(Integer(3)) ? inv.count_by_norm.at(Integer(3)) : 0;
          return Outcome{json{{"mirrors", mirrors[n]}, {"norm3_vectors", 6 * mirrors[n]}},
                         json{{"mirrors", inv.mirror_count()}, {"norm3_vectors", norm3}}};
        });
  }
  add("lemma.origin", "the zero extension is positive definite with proof expression 3", "rank-5 lemma, trivial case",
      [](Env&) {
        std::array<E, 4> v{E(0), E(0), E(0), E(0)};
        auto det = determinant(cast_exact<EisensteinQ>(lemma_gram(v)));
        return Outcome{json{{"expression", to_string(E(3))}, {"determinant", "27"}},
                       json{{"expression", to_string(lemma_expression(v))}, {"determinant", det.a.str()}}};
      });
  add("lemma.unit", "x = 1 gives proof expression 0 and is rejected", "rank-5 lemma, a = -1, b = 0", [](Env&) {
        std::array<E, 4> v{E(1), E(0), E(0), E(0)};
        auto det = determinant(cast_exact<EisensteinQ>(lemma_gram(v)));
        return Outcome{json{{"expression", to_string(E(0))}, {"determinant_zero", true}},
                       json{{"expression", to_string(lemma_expression(v))}, {"determinant_zero", det == EisensteinQ(0)}}};
      });
  add("lemma.rank5", "exhaustive sweep at norm bound 3: only the zero extension is positive definite",
      "positive definite rank-5 extensions split as L^4 + L^1", [](Env& env) {
        auto r = lemma_search(3, env.threads);
        return Outcome{json{{"candidates", 28561}, {"positive_definite", 1}, {"only_trivial", true},
                            {"determinant_mismatches", 0}, {"inequality_violations", 0}},
                       json{{"candidates", r.candidates}, {"positive_definite", r.positive_definite.size()},
                            {"only_trivial", r.only_trivial()}, {"determinant_mismatches", r.determinant_mismatches},
                            {"inequality_violations", r.inequality_violations}}};
      });
  add("complement.12gon", "complement of the free 12-gon in the Allcock lattice is an L^4",
      "intersection of 40 mirrors", [](Env& env) {
        const auto& q = env.I26_quotient();
        NodeSet nodes = env.I26().nodes(free12_labels());
        Mat<E> sub(q.lattice.rank(), static_cast<Index>(nodes.size()));
        for (std::size_t k = 0; k < nodes.size(); ++k) sub.col(static_cast<Index>(k)) = q.projection.col(nodes[k]);
        auto comp = ortho_complement(q.lattice, sub);
        auto l4 = builtin_invariants<E>("A4");
        return Outcome{json{{"rank", 4}, {"positive_definite", true}, {"mirrors", 40},
                            {"determinant", l4.determinant.str()}, {"signature", sig(l4.signature)}},
                       json{{"rank", comp.lattice.rank()}, {"positive_definite", comp.positive_definite},
                            {"mirrors", comp.mirrors}, {"determinant", comp.determinant.str()},
                            {"signature", sig(comp.signature)}}};
      });
  add("complement.perpendicular",
      "sampled mirrors meeting the 12-gon ball contain it or cross it perpendicularly",
      "other mirrors meet the ball perpendicularly (finite sample only)", [](Env& env) {
        // r = r1 + r2 with r1 in the L^4 complement W. A mirror meeting the
        // open ball off-perpendicular has r1 != 0, r2 != 0 and <r1, r1> < 3.
        const auto& q = env.I26_quotient();
        const auto& lat = q.lattice;
        NodeSet nodes = env.I26().nodes(free12_labels());
        Mat<E> sub(lat.rank(), static_cast<Index>(nodes.size()));
        for (std::size_t k = 0; k < nodes.size(); ++k) sub.col(static_cast<Index>(k)) = q.projection.col(nodes[k]);
        auto comp = ortho_complement(lat, sub);
        const Mat<EisensteinQ> b = cast_exact<EisensteinQ>(comp.basis), g = cast_exact<EisensteinQ>(lat.gram);
        const Mat<EisensteinQ> m = multiply(Mat<EisensteinQ>(b.transpose()), multiply(g, conjugate(b)));
        const Mat<EisensteinQ> mt = m.transpose();

        std::vector<Vec<E>> roots;
        for (const auto& v : short_vectors(comp.lattice, Integer(3)).vectors) roots.push_back(multiply(comp.basis, Mat<E>(v)));
        for (Index i = 0; i < q.projection.cols(); ++i) roots.push_back(q.projection.col(i));
        const auto& gens = env.I26_rep().generators;
        std::mt19937_64 rng(11);
        std::uniform_int_distribution<std::size_t> pick_node(0, static_cast<std::size_t>(q.projection.cols()) - 1),
            pick_gen(0, gens.size() - 1);
        std::uniform_int_distribution<int> length(1, 24);
        for (int s = 0; s < 2000; ++s) {
          Mat<E> r = q.projection.col(static_cast<Index>(pick_node(rng)));
          for (int k = length(rng); k > 0; --k) r = multiply(gens[pick_gen(rng)], r);
          roots.push_back(r);
        }

        int contains = 0, perpendicular = 0, misses = 0, violations = 0;
        for (const auto& r : roots) {
          const Mat<EisensteinQ> rq = cast_exact<EisensteinQ>(Mat<E>(r));
          Mat<EisensteinQ> w = multiply(Mat<EisensteinQ>(rq.transpose()), multiply(g, conjugate(b))).transpose();
          auto c = solve(mt, w);
          if (!c) throw std::logic_error("projection onto the complement failed");
          const Mat<EisensteinQ> r1 = multiply(b, *c);
          const Rational n1 = real_part(multiply(Mat<EisensteinQ>(c->transpose()), multiply(m, conjugate(*c)))(0, 0));
          const bool r1_zero = n1 == 0, r2_zero = r1 == rq;
          if (r2_zero)
            ++contains;
          else if (r1_zero)
            ++perpendicular;
          else if (n1 >= 3)
            ++misses;
          else
            ++violations;
        }
        Outcome o{json{{"sampled", 240 + 26 + 2000}, {"violations", 0}},
                  json{{"sampled", roots.size()}, {"violations", violations}}};
        o.note = "contain " + std::to_string(contains) + ", perpendicular " + std::to_string(perpendicular) +
                 ", miss " + std::to_string(misses) + "; the statement for all roots is not verified";
        return o;
      });

  // -- polytopes
  add("real.I26", "real form of I26 is Lorentzian of dimension 14", "Lorentzian space of dimension 14", [](Env& env) {
        const auto& s = env.I26_space();
        return Outcome{json{{"dim", 14}, {"signature", {13, 1, 0}}}, json{{"dim", s.dim()}, {"signature", sig(s.signature)}}};
      });
  add("real.tildeA11", "real form of tildeA11 is Lorentzian of dimension 10", "Lorentzian 12-cell space",
      [](Env& env) {
        const auto& s = env.A11_space();
        return Outcome{json{{"dim", 10}, {"signature", {9, 1, 0}}}, json{{"dim", s.dim()}, {"signature", sig(s.signature)}}};
      });
  add("classify.chains", "chains A4, A5, A6 are elliptic, parabolic, hyperbolic", "chain Gram matrices",
      [](Env& env) {
        const auto& s = env.A11_space();
        json got = json::array();
        for (int k = 4; k <= 6; ++k) {
          NodeSet j;
          for (int i = 1; i <= k; ++i) j.push_back(s.diagram.require(std::to_string(i)));
          std::sort(j.begin(), j.end());
          got.push_back(to_string(classify_subset(s, j).kind));
        }
        return Outcome{json::array({"elliptic", "parabolic", "hyperbolic"}), got};
      });
  add("critical.tildeA11", "critical subsets of tildeA11 are exactly its 12 A5 chains", "critical A5 subdiagrams",
      [](Env& env) { return Outcome{json{{"A5", 12}}, critical_types(env.A11_cert().critical)}; });
  add("critical.I26", "critical subsets of I26 have types A5 and D4 only", "connected parabolic A5 or D4",
      [](Env& env) {
        Outcome o;
        o.computed = critical_types(env.I26_cert().critical);
        json a5 = o.computed.contains("A5") ? o.computed["A5"] : json(0);
        json d4 = o.computed.contains("D4") ? o.computed["D4"] : json(0);
        o.expected = json{{"A5", golden(env, o, "critical.I26.A5", a5)}, {"D4", golden(env, o, "critical.I26.D4", d4)}};
        return o;
      });
  add("critical.bruteforce", "I26 critical subsets agree with a level-wise enumeration up to size 7",
      "independent enumeration", [](Env& env) {
        auto brute = critical_subsets_bruteforce(env.I26_space(), 7);
        std::set<NodeSet> a(brute.begin(), brute.end()), b;
        for (const auto& e : env.I26_cert().critical) b.insert(e.subset.nodes);
        Outcome o{json{{"agree", true}}, json{{"agree", a == b}, {"bruteforce", a.size()}, {"grown", b.size()}}};
        o.pass = a == b;
        return o;
      });
  add("vinberg.12cell", "tildeA11 polytope has finite volume; every N(A5) is 2A5 of rank 8",
      "12-cell: rank of the two disjoint A5 Gram matrices is 8", [](Env& env) {
        const auto& c = env.A11_cert();
        return Outcome{json{{"verdict", true}, {"types", "A5->2A5/rank8 x12"}},
                       json{{"verdict", c.verdict}, {"types", type_histogram_key(c.critical)}}};
      });
  add("vinberg.26cell", "I26 polytope has finite volume; N types 3A5 and 4D4 of rank 12",
      "26-cell: both parabolic with Gram rank 12", [](Env& env) {
        const auto& c = env.I26_cert();
        std::set<std::string> types;
        bool ranks = true;
        for (const auto& e : c.critical) {
          types.insert(e.subset.type + "->" + e.n_type);
          ranks &= e.n_rank == 12;
        }
        return Outcome{json{{"verdict", true}, {"n_types", {"A5->3A5", "D4->4D4"}}, {"rank12", true}},
                       json{{"verdict", c.verdict}, {"n_types", types}, {"rank12", ranks}}};
      });
  add("vinberg.Y555", "Y555 space fails the criterion", "derived counterexample", [](Env& env) {
        const auto& c = env.Y555_cert();
        const auto& d = env.Y555_space().diagram;
        // the A5 chain through the triple node 0 along the first two arms
        NodeSet chain = d.nodes({"2", "1", "0", "6", "7"});
        std::sort(chain.begin(), chain.end());
        std::string named;
        for (const auto& e : c.critical)
          if (e.subset.nodes == chain) named = e.n_type;
        Outcome o{json{{"verdict", false}, {"chain_n_type", "2A2+A4+A5"}},
                  json{{"verdict", c.verdict}, {"chain_n_type", named}}};
        return o;
      });
  add("cusps.12cell", "ideal vertices of the 12-cell", "opposite A5 chain pairs", [](Env& env) {
        const auto& c = env.A11_cert();
        std::set<std::string> types;
        bool good = true;
        for (const auto& v : c.ideal_vertices) {
          types.insert(v.type);
          good &= v.kernels_proportional && v.isotropic && v.perron_positive;
        }
        Outcome o;
        o.computed = json{{"count", c.ideal_vertices.size()}, {"types", types}, {"rays_consistent", good}};
        o.expected = json{{"count", golden(env, o, "cusps.12cell", c.ideal_vertices.size())},
                          {"types", {"2A5"}},
                          {"rays_consistent", true}};
        return o;
      });
  add("cusps.26cell", "26-cell has two orbits of ideal vertices, of types 3A5 and 4D4",
      "two inequivalent ideal vertices", [](Env& env) {
        const auto& c = env.I26_cert();
        std::map<int, std::set<std::string>> orbit_types;
        bool good = true;
        for (const auto& v : c.ideal_vertices) {
          orbit_types[v.orbit].insert(v.type);
          good &= v.kernels_proportional && v.isotropic && v.perron_positive;
        }
        std::set<std::string> types;
        bool pure = true;
        for (const auto& [o, t] : orbit_types) {
          pure &= t.size() == 1;
          types.insert(t.begin(), t.end());
        }
        Outcome o;
        o.computed = json{{"orbits", c.orbit_count}, {"orbit_types", types}, {"one_type_per_orbit", pure},
                          {"rays_consistent", good}, {"count", c.ideal_vertices.size()}};
        o.expected = json{{"orbits", 2}, {"orbit_types", {"3A5", "4D4"}}, {"one_type_per_orbit", true},
                          {"rays_consistent", true}, {"count", golden(env, o, "cusps.26cell", c.ideal_vertices.size())}};
        return o;
      });
  add("weyl.12cell", "sum of the 12-cell roots is equidistant from all 12 mirrors",
      "12-cell Weyl point, squared sinh (3-2sqrt3)^2/(3(24sqrt3-36))", [](Env& env) {
        const auto& w = env.A11_weyl();
        const Sqrt3 r3 = Sqrt3::root3();
        Sqrt3 a = Sqrt3(3) - Sqrt3(2) * r3;
        Sqrt3 want = a * a / (Sqrt3(3) * (Sqrt3(24) * r3 - Sqrt3(36)));
        std::set<std::string> pair, dist;
        for (const auto& p : w.pairings) pair.insert(to_string(p));
        for (const auto& d : w.sinh2) dist.insert(to_string(d));
        return Outcome{json{{"norm", to_string(Tower(Sqrt3(36) - Sqrt3(24) * r3))},
                            {"pairings", {to_string(Tower(a))}},
                            {"sinh2", {to_string(Tower(want))}},
                            {"count", 12}},
                       json{{"norm", to_string(w.norm)}, {"pairings", pair}, {"sinh2", dist}, {"count", w.sinh2.size()}}};
      });
  add("weyl.26cell", "Weyl point of the 26-cell is equidistant from all 26 mirrors", "26 mirrors at minimal distance",
      [](Env& env) {
        const auto& w = env.I26_weyl();
        std::set<std::string> dist;
        for (const auto& d : w.sinh2) dist.insert(to_string(d));
        Outcome o{json{{"equidistant", true}, {"distinct_sinh2", 1}, {"count", 26}},
                  json{{"equidistant", w.equidistant}, {"distinct_sinh2", dist.size()}, {"count", w.sinh2.size()}}};
        if (!dist.empty()) o.note = "sinh^2 = " + *dist.begin();
        return o;
      });
  add("weyl.26cell.points", "-(4sqrt3 sum e_p + 3 sum e_l) pairs to 0 with points and 39 with lines",
      "point vector of the 26-cell", [](Env& env) {
        const auto& s = env.I26_space();
        Vec<Sqrt3> u = Vec<Sqrt3>::Constant(s.dim(), Sqrt3(0));
        const Sqrt3 c = Sqrt3(4) * Sqrt3::root3();
        for (Index i = 0; i < s.size(); ++i) {
          Sqrt3 f = s.diagram.color(static_cast<int>(i)) == Color::black ? -c : Sqrt3(-3);
          for (Index k = 0; k < s.dim(); ++k) u(k) += f * s.coords(k, i);
        }
        std::set<std::string> on_points, on_lines;
        for (Index i = 0; i < s.size(); ++i)
          (s.diagram.color(static_cast<int>(i)) == Color::black ? on_points : on_lines).insert(to_string(s.inner(u, s.e(i))));
        return Outcome{json{{"points", {to_string(Sqrt3(0))}}, {"lines", {to_string(Sqrt3(39))}}},
                       json{{"points", on_points}, {"lines", on_lines}}};
      });
  add("weyl.face", "projection of the 26-cell Weyl point to the A4 face is equidistant from its 12 facets",
      "face of the 26-cell is a 12-cell", [](Env& env) {
        const auto& s = env.I26_space();
        NodeSet j = s.diagram.nodes(a4_labels());
        auto p = face_project(s, j, env.I26_weyl().w0);
        std::set<std::string> dist;
        NodeSet z = zperp(s.diagram, j);
        for (int k : z) dist.insert(to_string(sinh2_distance(s, p, k)));
        std::string twelve = to_string(env.A11_weyl().sinh2.front());
        return Outcome{json{{"facets", 12}, {"sinh2", {twelve}}}, json{{"facets", z.size()}, {"sinh2", dist}}};
      });
  add("weyl.facet_consistency", "cosh^2 of the distance from w0 to its facet projection is 1 + sinh^2",
      "consistency of face projection and mirror distance", [](Env& env) {
        const auto& s = env.A11_space();
        const auto& w = env.A11_weyl();
        int agree = 0;
        for (Index i = 0; i < s.size(); ++i) {
          auto p = face_project(s, NodeSet{static_cast<int>(i)}, w.w0);
          Tower wp = s.inner(w.w0, p);
          Tower cosh2 = wp * wp / (s.inner(w.w0, w.w0) * s.inner(p, p));
          agree += cosh2 - Tower(1) == sinh2_distance(s, w.w0, i);
        }
        return Outcome{12, agree};
      });

  // -- mod two
  add("modtwo.Y322G", "L(Y322, Gauss) mod (1+i) is an 8-dimensional minus-type space kept by all tetraflections",
      "target O-_8(2).2", [](Env& env) {
        auto d = builtin_diagram("Y322");
        auto rep = rep_from_diagram<G>(d);
        auto b = reduce_mod_two(rep.lattice, rep.generators);
        int kept = static_cast<int>(std::count(b.generator_preserves.begin(), b.generator_preserves.end(), true));
        Outcome o;
        o.computed = json{{"dimension", b.dimension}, {"type", to_string(b.type)}, {"well_defined", b.well_defined},
                          {"singular", b.nonzero_singular()}, {"generators_preserving", kept}};
        o.expected = json{{"dimension", 8}, {"type", "minus"}, {"well_defined", true},
                          {"singular", golden(env, o, "modtwo.Y322G.singular", b.nonzero_singular())},
                          {"generators_preserving", 8}};
        return o;
      });
  add("modtwo.rank1", "the rank-1 Gauss lattice <2> reduces to q(1) = 1", "trivial reduction", [](Env&) {
        GaussLattice l{Mat<G>::Constant(1, 1, G(2))};
        auto b = reduce_mod_two(l);
        return Outcome{json{{"dimension", 1}, {"q1", 1}, {"singular", 0}},
                       json{{"dimension", b.dimension}, {"q1", b.value(1)}, {"singular", b.nonzero_singular()}}};
      });

  // -- polygons
  add("polygon.rectangle", "mu = 1/2, z = (-1,0,1,2) gives a rectangle", "interior angles (1 - mu_j) pi",
      [](Env& env) {
        auto d = edge_integrals({-1, 0, 1, 2}, {0.5, 0.5, 0.5, 0.5}, env.opt.tol);
        double err = 0;
        for (double a : d.angles) err = std::max(err, std::abs(a - pi / 2));
        auto r = closure_residuals(d);
        Outcome o{json{{"angle_error_max", 1e-8}, {"residual_max", 1e-8}},
                  json{{"angle_error", err}, {"residuals", {r.r1, r.r2}}}};
        o.pass = err <= 1e-8 && r.r1 <= 1e-8 && r.r2 <= 1e-8;
        return o;
      });
  add("polygon.closure12", "equal weights 1/6 at z = 1..12 close up with angles 5pi/6", "twelve-gons with angles 5pi/6",
      [](Env& env) {
        std::vector<double> z, mu(12, 1.0 / 6);
        for (int k = 1; k <= 12; ++k) z.push_back(k);
        auto d = edge_integrals(z, mu, env.opt.tol);
        double err = 0;
        for (double a : d.angles) err = std::max(err, std::abs(a - 5 * pi / 6));
        auto r = closure_residuals(d);
        Outcome o{json{{"angle_error_max", 1e-6}, {"residual_max", 1e-6}},
                  json{{"angle_error", err}, {"residuals", {r.r1, r.r2}}}};
        o.pass = err <= 1e-6 && r.r1 <= 1e-6 && r.r2 <= 1e-6;
        return o;
      });
  add("polygon.sensitivity", "perturbing one length by 1e-3 moves the closure residual past 1e-4",
      "closure is a linear functional", [](Env& env) {
        std::vector<double> z, mu(12, 1.0 / 6);
        for (int k = 1; k <= 12; ++k) z.push_back(k);
        auto l = edge_integrals(z, mu, env.opt.tol).l;
        l[3] += 1e-3;
        auto r = closure_residuals(mu, l);
        Outcome o{json{{"residual_min", 1e-4}}, json{{"residuals", {r.r1, r.r2}}}};
        o.pass = r.r1 >= 1e-4 && r.r2 >= 1e-4;
        return o;
      });
  add("polygon.area_signature12", "minus the area form on the 10-dimensional closure space has signature (9,1)",
      "Lorentzian form on polygon space", [](Env&) {
        auto s = area_form(std::vector<double>(12, 1.0 / 6));
        return Outcome{json{{"dimension", 10}, {"signature", {9, 1, 0}}},
                       json{{"dimension", s.dimension}, {"signature", {s.positive, s.negative, s.zero}}}};
      });
  add("polygon.area_signature4", "rectangle family: closure plane of dimension 2, signature (1,1)",
      "area form on quadrilaterals", [](Env&) {
        auto s = area_form(std::vector<double>(4, 0.5));
        return Outcome{json{{"dimension", 2}, {"signature", {1, 1, 0}}},
                       json{{"dimension", s.dimension}, {"signature", {s.positive, s.negative, s.zero}}}};
      });
  add("polygon.random", "200 random 12-point configurations: positive lengths, closure, positive area l^T Q l",
      "area is minus the Lorentzian norm", [](Env& env) {
        std::vector<double> mu(12, 1.0 / 6);
        Eigen::MatrixXd q = area_matrix(mu);
        std::mt19937_64 rng(2024);
        int positive_lengths = 0, closed = 0, positive_area = 0, shoelace = 0;
        for (int s = 0; s < 200; ++s) {
          auto d = edge_integrals(uniform_config(rng, 12), mu, env.opt.tol);
          positive_lengths += std::all_of(d.l.begin(), d.l.end(), [](double x) { return x > 0; });
          auto r = closure_residuals(d);
          closed += r.r1 <= 1e-6 && r.r2 <= 1e-6;
          double a = dot_q(q, d.l);
          positive_area += a > 0;
          shoelace += std::abs(a - d.area) <= 1e-9 * std::max(1.0, std::abs(a));
        }
        return Outcome{json{{"positive_lengths", 200}, {"closed", 200}, {"positive_area", 200}, {"shoelace_agrees", 200}},
                       json{{"positive_lengths", positive_lengths}, {"closed", closed}, {"positive_area", positive_area},
                            {"shoelace_agrees", shoelace}}};
      });
  add("polygon.regular12", "root finding reaches equal edge lengths; prevertices frozen", "regular 12-gon",
      [](Env& env) {
        auto r = find_regular(12);
        Outcome o;
        json z = r.z;
        json g = golden(env, o, "polygon.regular12.z", z);
        double dz = 0;
        for (std::size_t k = 0; k < r.z.size(); ++k) dz = std::max(dz, std::abs(r.z[k] - g[k].get<double>()));
        o.computed = json{{"spread", r.spread}, {"golden_distance", dz}};
        o.expected = json{{"spread_max", 1e-6}, {"golden_distance_max", 1e-9}};
        o.pass = r.spread <= 1e-6 && dz <= 1e-9;
        return o;
      });
  return c;
}

const std::vector<Claim>& catalog() {
  static const std::vector<Claim> c = build_catalog();
  return c;
}

}  // namespace

std::vector<ClaimInfo> claim_catalog() {
  std::vector<ClaimInfo> out;
  for (const auto& c : catalog()) out.push_back(c.info);
  return out;
}

Report run_claims(const std::string& filter, const RunOptions& opt) {
  std::vector<const Claim*> selected;
  for (const auto& c : catalog())
    if (filter.empty() || glob_match(filter, c.info.id)) selected.push_back(&c);

  Env env(opt);
  const bool many = selected.size() > 1;
  env.threads = many ? 1 : std::max(1u, opt.threads);
  Report report;
  report.claims.resize(selected.size());
  std::vector<std::map<std::string, std::string>> golden(selected.size());
  parallel_for(selected.size(), many ? std::max(1u, opt.threads) : 1, [&](std::size_t k) {
    const Claim& c = *selected[k];
    ClaimRecord& rec = report.claims[k];
    rec.id = c.info.id;
    rec.description = c.info.description;
    rec.reference = c.info.reference;
    auto t0 = std::chrono::steady_clock::now();
    try {
      Outcome o = c.run(env);
      rec.expected = o.expected;
      rec.computed = o.computed;
      rec.note = o.note;
      bool pass = o.pass ? *o.pass : o.expected == o.computed;
      rec.status = c.info.exploratory ? ClaimStatus::exploratory : (pass ? ClaimStatus::pass : ClaimStatus::fail);
      golden[k] = std::move(o.golden);
    } catch (const std::exception& e) {
      rec.note = e.what();
      rec.status = c.info.exploratory ? ClaimStatus::exploratory : ClaimStatus::fail;
    }
    rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  });
  for (auto& g : golden) report.golden_updates.insert(g.begin(), g.end());
  return report;
}

}  // namespace hyperlat
