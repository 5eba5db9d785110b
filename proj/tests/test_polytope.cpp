#include <doctest.h>

#include "hyperlat/claims.hpp"
#include "hyperlat/polytope.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

using namespace hyperlat;

namespace {

const double kRoot3 = std::sqrt(3.0);

CoxeterDiagram family(Family f, int n) { return build_family(DiagramType{f, n, 0, 0, 0}); }

// Generator Gram in doubles: 3 on the diagonal, -sqrt3 per bond.
Eigen::MatrixXd numeric_gram(const CoxeterDiagram& d) {
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(d.size(), d.size());
  for (int i = 0; i < d.size(); ++i) {
    g(i, i) = 3;
    for (int j : d.neighbors(i)) g(i, j) = -kRoot3;
  }
  return g;
}

SubsetKind numeric_kind(const Eigen::MatrixXd& g, const NodeSet& j) {
  Eigen::MatrixXd sub(j.size(), j.size());
  for (std::size_t a = 0; a < j.size(); ++a)
    for (std::size_t b = 0; b < j.size(); ++b) sub(a, b) = g(j[a], j[b]);
  double m = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(sub).eigenvalues().minCoeff();
  if (m > 1e-9) return SubsetKind::elliptic;
  if (m > -1e-9) return SubsetKind::parabolic;
  return SubsetKind::hyperbolic;
}

NodeSet random_connected(const CoxeterDiagram& d, std::mt19937_64& rng, int size) {
  std::uniform_int_distribution<int> pick(0, d.size() - 1);
  NodeSet s{pick(rng)};
  while (static_cast<int>(s.size()) < size) {
    std::vector<int> frontier;
    for (int v : s)
      for (int u : d.neighbors(v))
        if (std::find(s.begin(), s.end(), u) == s.end()) frontier.push_back(u);
    if (frontier.empty()) break;
    s.push_back(frontier[std::uniform_int_distribution<std::size_t>(0, frontier.size() - 1)(rng)]);
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

const RealQuadSpace& space(const std::string& name) {
  static std::map<std::string, RealQuadSpace> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, real_form(builtin_diagram(name))).first;
  return it->second;
}

}  // namespace

TEST_CASE("real forms") {
  CHECK(space("tildeA11").dim() == 10);
  CHECK(space("tildeA11").lorentzian());
  CHECK(space("I26").dim() == 14);
  CHECK(space("I26").lorentzian());
  CHECK(space("I26").signature == Signature{13, 1, 0});
  RealQuadSpace a4 = real_form(family(Family::A, 4));
  CHECK(a4.signature == Signature{4, 0, 0});
  CHECK_FALSE(a4.lorentzian());
  CHECK_THROWS_AS(real_form(family(Family::affine_A, 4)), PolytopeError);
}

TEST_CASE("chains") {
  const RealQuadSpace& s = space("tildeA11");
  CHECK(classify_subset(s, {0, 1, 2, 3}).kind == SubsetKind::elliptic);
  CHECK(classify_subset(s, {0, 1, 2, 3, 4}).kind == SubsetKind::parabolic);
  CHECK(classify_subset(s, {0, 1, 2, 3, 4, 5}).kind == SubsetKind::hyperbolic);
  CHECK(classify_subset(s, {0, 1, 2, 3, 4}).type == "A5");
  SubsetClass two = classify_subset(s, {0, 1, 2, 3, 4, 6, 7, 8, 9, 10});
  CHECK(two.type == "2A5");
  CHECK(two.kind == SubsetKind::parabolic);
  CHECK(two.gram_rank == 8);
}

TEST_CASE("connected subsets against eigenvalue signs") {
  const RealQuadSpace& s = space("I26");
  Eigen::MatrixXd g = numeric_gram(s.diagram);
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 400; ++trial) {
    NodeSet j = random_connected(s.diagram, rng, 1 + trial % 9);
    CHECK(classify_subset(s, j).kind == numeric_kind(g, j));
  }
}

TEST_CASE("classification is monotone") {
  const RealQuadSpace& s = space("I26");
  std::mt19937_64 rng(62);
  std::bernoulli_distribution coin(0.3);
  for (int trial = 0; trial < 300; ++trial) {
    NodeSet big = random_connected(s.diagram, rng, 3 + trial % 7);
    NodeSet small;
    for (int v : big)
      if (coin(rng)) small.push_back(v);
    SubsetKind kb = classify_subset(s, big).kind;
    SubsetKind ks = classify_subset(s, small).kind;
    if (kb == SubsetKind::elliptic) CHECK(ks == SubsetKind::elliptic);
    if (ks != SubsetKind::elliptic) CHECK(kb != SubsetKind::elliptic);
  }
}

TEST_CASE("critical subsets") {
  auto c12 = critical_subsets(space("tildeA11"));
  CHECK(c12.size() == 12);
  for (const auto& c : c12) {
    CHECK(c.type == "A5");
    CHECK(c.kind == SubsetKind::parabolic);
  }
  std::set<NodeSet> grown;
  for (const auto& c : c12) grown.insert(c.nodes);
  auto brute = critical_subsets_bruteforce(space("tildeA11"), 7);
  CHECK(std::set<NodeSet>(brute.begin(), brute.end()) == grown);

  Golden golden = Golden::load(default_golden_path());
  auto c26 = critical_subsets(space("I26"));
  std::map<std::string, std::uint64_t> types;
  for (const auto& c : c26) types[c.type]++;
  CHECK(types.size() == 2);
  CHECK(types["A5"] == golden.get("critical.I26.A5").get<std::uint64_t>());
  CHECK(types["D4"] == golden.get("critical.I26.D4").get<std::uint64_t>());
  std::set<NodeSet> all;
  for (const auto& c : c26) all.insert(c.nodes);
  auto b26 = critical_subsets_bruteforce(space("I26"), 6);
  CHECK(std::set<NodeSet>(b26.begin(), b26.end()) == all);
  // every critical subset is non-elliptic with all proper subsets elliptic
  Eigen::MatrixXd g = numeric_gram(space("I26").diagram);
  for (const auto& c : c26) {
    CHECK(numeric_kind(g, c.nodes) != SubsetKind::elliptic);
    for (std::size_t drop = 0; drop < c.nodes.size(); ++drop) {
      NodeSet sub = c.nodes;
      sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
      CHECK(classify_subset(space("I26"), sub).kind == SubsetKind::elliptic);
    }
  }
}

TEST_CASE("Vinberg certificates") {
  PolytopeCertificate c12 = vinberg_check(space("tildeA11"));
  CHECK(c12.verdict);
  CHECK(c12.critical.size() == 12);
  for (const auto& e : c12.critical) {
    CHECK(e.ok());
    CHECK(e.n_type == "2A5");
    CHECK(e.n_rank == 8);
  }
  PolytopeCertificate c26 = vinberg_check(space("I26"));
  CHECK(c26.verdict);
  std::set<std::string> n_types;
  for (const auto& e : c26.critical) {
    CHECK(e.ok());
    CHECK(e.n_rank == 12);
    n_types.insert(e.n_type);
  }
  CHECK(n_types == std::set<std::string>{"3A5", "4D4"});
  PolytopeCertificate y = vinberg_check(space("Y555"), false);
  CHECK_FALSE(y.verdict);
  CHECK_FALSE(y.failures.empty());
  CHECK_THROWS(vinberg_check(real_form(family(Family::A, 4))));
}

TEST_CASE("ideal vertices of the 26-cell") {
  const RealQuadSpace& s = space("I26");
  PolytopeCertificate cert = vinberg_check(s);
  const auto& cusps = cert.ideal_vertices;
  Golden golden = Golden::load(default_golden_path());
  CHECK(cusps.size() == golden.get("cusps.26cell").get<std::size_t>());
  CHECK(cert.orbit_count == 2);
  std::map<int, std::set<std::string>> orbit_types;
  for (const auto& v : cusps) {
    CHECK(v.kernels_proportional);
    CHECK(v.perron_positive);
    CHECK(v.isotropic);
    CHECK(s.inner(v.ray, v.ray) == Sqrt3(0));
    for (int j : v.n) CHECK(s.inner(v.ray, s.e(j)) == Sqrt3(0));
    orbit_types[v.orbit].insert(v.type);
  }
  REQUIRE(orbit_types.size() == 2);
  std::set<std::string> types;
  for (const auto& [o, t] : orbit_types) {
    CHECK(t.size() == 1);
    types.insert(*t.begin());
  }
  CHECK(types == std::set<std::string>{"3A5", "4D4"});
}

TEST_CASE("Weyl point of the 12-cell") {
  const RealQuadSpace& s = space("tildeA11");
  WeylData w = weyl_points(s, "sum");
  REQUIRE(w.sinh2.size() == 12);
  CHECK(w.equidistant);
  const Sqrt3 r3 = Sqrt3::root3();
  Sqrt3 a = Sqrt3(3) - Sqrt3(2) * r3;
  Tower want(a * a / (Sqrt3(3) * (Sqrt3(24) * r3 - Sqrt3(36))));
  for (const auto& v : w.sinh2) CHECK(v == want);
  // in doubles on the generators: w0 = sum e_i
  Eigen::MatrixXd g = numeric_gram(s.diagram);
  double ww = g.sum();
  for (int i = 0; i < 12; ++i) {
    double p = g.col(i).sum();
    CHECK(std::abs(p * p / (3 * -ww) - to_double(w.sinh2[i])) < 1e-12);
  }
}

TEST_CASE("Weyl point of the 26-cell") {
  const RealQuadSpace& s = space("I26");
  WeylData w = weyl_points(s, "points-lines");
  REQUIRE(w.sinh2.size() == 26);
  CHECK(w.equidistant);
  for (const auto& v : w.sinh2) CHECK(v == w.sinh2.front());
  // doubles: w_P = -(4 sqrt3 sum e_p + 3 sum e_l), w_L symmetric, w0 their normalized sum
  Eigen::MatrixXd g = numeric_gram(s.diagram);
  Eigen::VectorXd wp(26), wl(26);
  for (int i = 0; i < 26; ++i) {
    bool point = s.diagram.color(i) == Color::black;
    wp(i) = -(point ? 4 * kRoot3 : 3.0);
    wl(i) = -(point ? 3.0 : 4 * kRoot3);
  }
  for (int i = 0; i < 26; ++i)
    if (s.diagram.color(i) == Color::black) CHECK(std::abs((g * wp)(i)) < 1e-12);
  Eigen::VectorXd w0 = wp / std::sqrt(-wp.dot(g * wp)) + wl / std::sqrt(-wl.dot(g * wl));
  double norm = w0.dot(g * w0);
  for (int i = 0; i < 26; ++i) {
    double p = (g * w0)(i);
    CHECK(std::abs(p * p / (3 * -norm) - to_double(w.sinh2[i])) < 1e-10);
  }
  CHECK(std::abs(to_double(w.sinh2.front()) - (-1.0 / 26 + 2.0 / 39 * kRoot3)) < 1e-12);
}

TEST_CASE("face projection") {
  const RealQuadSpace& s = space("I26");
  WeylData w = weyl_points(s, "points-lines");
  NodeSet j = s.diagram.nodes({"c3", "d3", "e3", "f3"});
  Vec<Tower> p = face_project(s, j, w.w0);
  for (int k : j) CHECK(s.inner(p, to_tower(s.e(k))) == Tower(0));
  NodeSet z = zperp(s.diagram, j);
  REQUIRE(z.size() == 12);
  Tower first = sinh2_distance(s, p, z.front());
  for (int k : z) CHECK(sinh2_distance(s, p, k) == first);
  CHECK(first == weyl_points(space("tildeA11"), "sum").sinh2.front());
  // projecting onto the empty face changes nothing
  Vec<Tower> same = face_project(s, {}, w.w0);
  for (Index i = 0; i < same.size(); ++i) CHECK(same(i) == w.w0(i));
  // non-elliptic faces are refused
  CHECK_THROWS(face_project(space("tildeA11"), {0, 1, 2, 3, 4}, weyl_points(space("tildeA11"), "sum").w0));
}
