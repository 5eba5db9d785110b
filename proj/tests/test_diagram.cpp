#include <doctest.h>

#include "hyperlat/claims.hpp"
#include "hyperlat/diagram.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <set>

using namespace hyperlat;

namespace {

CoxeterDiagram family(Family f, int n) { return build_family(DiagramType{f, n, 0, 0, 0}); }
CoxeterDiagram y_shape(int p, int q, int r) { return build_family(DiagramType{Family::Y, 0, p, q, r}); }

CoxeterDiagram random_graph(std::mt19937_64& rng, int n, double p) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
  CoxeterDiagram d(labels);
  std::bernoulli_distribution edge(p);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (edge(rng)) d.add_edge(i, j);
  return d;
}

// Automorphisms by trying every permutation.
std::uint64_t brute_automorphisms(const CoxeterDiagram& d, bool respect_colors) {
  std::vector<int> p(d.size());
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (int i = 0; i < d.size() && ok; ++i) {
      if (respect_colors && d.color(i) != d.color(p[i])) ok = false;
      for (int j = i + 1; j < d.size() && ok; ++j) ok = d.adjacent(i, j) == d.adjacent(p[i], p[j]);
    }
    count += ok;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

bool brute_isomorphic(const CoxeterDiagram& a, const CoxeterDiagram& b) {
  if (a.size() != b.size()) return false;
  std::vector<int> p(a.size());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < a.size() && ok; ++i)
      for (int j = i + 1; j < a.size() && ok; ++j) ok = a.adjacent(i, j) == b.adjacent(p[i], p[j]);
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// Induced copies of a pattern by trying every subset of the right size.
std::uint64_t brute_induced_count(const CoxeterDiagram& hay, const CoxeterDiagram& pattern) {
  const int n = hay.size(), k = pattern.size();
  std::uint64_t count = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    NodeSet s;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(i);
    count += brute_isomorphic(induced(hay, s), pattern);
  }
  return count;
}

// The projective plane over F_3 built independently of the library, with
// collineations and dualities induced by GL_3(F_3).
struct Plane3 {
  std::vector<std::array<int, 3>> pts;  // normalized: first nonzero entry 1

  Plane3() {
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y)
        for (int z = 0; z < 3; ++z) {
          std::array<int, 3> v{x, y, z};
          if (v == std::array<int, 3>{0, 0, 0}) continue;
          if (normalize(v) == v) pts.push_back(v);
        }
  }
  static std::array<int, 3> normalize(std::array<int, 3> v) {
    int lead = 0;
    for (int c : v)
      if (c % 3 != 0) {
        lead = ((c % 3) + 3) % 3;
        break;
      }
    int inv = lead == 1 ? 1 : 2;  // 2 * 2 = 4 = 1
    for (int& c : v) c = ((c * inv) % 3 + 3) % 3;
    return v;
  }
  int index(const std::array<int, 3>& v) const {
    auto n = normalize(v);
    return static_cast<int>(std::find(pts.begin(), pts.end(), n) - pts.begin());
  }
  bool incident(int p, int l) const {
    return (pts[p][0] * pts[l][0] + pts[p][1] * pts[l][1] + pts[p][2] * pts[l][2]) % 3 == 0;
  }
  // node k < 13 is point k, node 13 + k is line k
  std::set<std::vector<int>> induced_maps() const {
    std::set<std::vector<int>> maps;
    std::array<int, 9> m{};
    for (int code = 0; code < 19683; ++code) {
      int c = code;
      for (int& e : m) {
        e = c % 3;
        c /= 3;
      }
      int det = m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
                m[2] * (m[3] * m[7] - m[4] * m[6]);
      if (((det % 3) + 3) % 3 == 0) continue;
      auto apply = [&](const std::array<int, 3>& v, bool transpose) {
        std::array<int, 3> out{};
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) out[i] += (transpose ? m[3 * j + i] : m[3 * i + j]) * v[j];
        return out;
      };
      // p -> A p and l -> l A^{-1} preserve incidence; written as l -> (A^T)^{-1} l,
      // found by searching the line whose pullback under A^T is l.
      std::vector<int> col(26), dual(26);
      for (int p = 0; p < 13; ++p) col[p] = index(apply(pts[p], false));
      for (int l = 0; l < 13; ++l) {
        for (int k = 0; k < 13; ++k)
          if (index(apply(pts[k], true)) == l) {
            col[13 + l] = 13 + k;
            break;
          }
      }
      // duality: p -> line A p, l -> point (A^T)^{-1} l
      for (int p = 0; p < 13; ++p) dual[p] = 13 + col[p];
      for (int l = 0; l < 13; ++l) dual[13 + l] = col[13 + l] - 13;
      maps.insert(col);
      maps.insert(dual);
    }
    return maps;
  }
  CoxeterDiagram diagram() const {
    std::vector<std::string> labels;
    for (int i = 0; i < 26; ++i) labels.push_back("n" + std::to_string(i));
    CoxeterDiagram d(labels);
    for (int p = 0; p < 13; ++p)
      for (int l = 0; l < 13; ++l)
        if (incident(p, l)) d.add_edge(p, 13 + l);
    return d;
  }
};

}  // namespace

TEST_CASE("family shapes") {
  for (int n = 1; n <= 12; ++n) {
    CoxeterDiagram a = family(Family::A, n);
    CHECK(a.size() == n);
    CHECK(a.edge_count() == n - 1);
    CHECK(a.is_properly_colored());
    CHECK(a.color(0) == Color::black);  // label 1 is odd
    CHECK(connected_type(a) == "A" + std::to_string(n));
  }
  for (int n = 2; n <= 11; ++n) {
    CoxeterDiagram c = family(Family::affine_A, n);
    CHECK(c.size() == n + 1);
    CHECK(c.edge_count() == n + 1);
    CHECK(c.has_coloring() == ((n + 1) % 2 == 0));
    if (c.has_coloring()) CHECK(c.color(0) == Color::black);
  }
  CHECK(family(Family::D, 4).degree(0) == 3);
  CHECK(connected_type(family(Family::D, 6)) == "D6");
  CHECK(connected_type(family(Family::E, 8)) == "E8");
  CHECK(connected_type(family(Family::affine_A, 11)) == "tildeA11");
  CoxeterDiagram y = y_shape(5, 5, 5);
  CHECK(y.size() == 16);
  CHECK(y.degree(0) == 3);
  CHECK(y.color(0) == Color::black);
  CHECK(connected_type(y) == "Y555");
  CHECK(is_finite_type(1, 2, 4));
  CHECK(is_affine_type(2, 2, 2));
  CHECK(is_affine_type(1, 3, 3));
  CHECK(is_affine_type(1, 2, 5));
  CHECK_FALSE(is_finite_type(5, 5, 5));
  CHECK_FALSE(is_affine_type(5, 5, 5));
}

TEST_CASE("incidence graphs") {
  CoxeterDiagram i14 = build_incidence(2), i26 = build_incidence(3);
  CHECK(i14.size() == 14);
  CHECK(i14.edge_count() == 21);
  CHECK(i26.size() == 26);
  CHECK(i26.edge_count() == 52);
  for (int i = 0; i < 26; ++i) CHECK(i26.degree(i) == 4);
  CHECK(i26.is_properly_colored());
  // any two points lie on exactly one common line
  for (int p = 0; p < 13; ++p)
    for (int q = p + 1; q < 13; ++q) {
      int common = 0;
      for (int l = 13; l < 26; ++l) common += i26.adjacent(p, l) && i26.adjacent(q, l);
      CHECK(common == 1);
    }
  CHECK(isomorphic(builtin_diagram("I26"), i26));
  CHECK(isomorphic(builtin_diagram("I14"), i14));
  CHECK_THROWS_AS(build_incidence(4), DiagramError);
}

TEST_CASE("named I26 nodes follow the coordinate correspondence") {
  CoxeterDiagram d = builtin_diagram("I26");
  for (const auto& n : i26_correspondence()) {
    int v = d.require(n.label);
    CHECK((d.color(v) == Color::black) == n.point);
  }
  // incidence through coordinates
  for (const auto& p : i26_correspondence())
    for (const auto& l : i26_correspondence()) {
      if (!p.point || l.point) continue;
      bool inc = (p.x * l.x + p.y * l.y + p.z * l.z) % 3 == 0;
      CHECK(d.adjacent(d.require(p.label), d.require(l.label)) == inc);
    }
}

TEST_CASE("automorphism counts against independent oracles") {
  Plane3 plane;
  REQUIRE(plane.pts.size() == 13);
  auto maps = plane.induced_maps();
  CoxeterDiagram own = plane.diagram();
  std::size_t collineations = 0;
  for (const auto& m : maps) {
    for (auto [i, j] : own.edges()) REQUIRE(own.adjacent(m[i], m[j]));
    collineations += m[0] < 13;
  }
  CHECK(collineations == 5616);
  CHECK(maps.size() == 11232);

  CoxeterDiagram i26 = builtin_diagram("I26");
  CHECK(automorphism_count(i26, true) == collineations);
  CHECK(automorphism_count(i26, false) == maps.size());
  CHECK(automorphism_count(builtin_diagram("I14"), false) == 336);
  CHECK(automorphism_count(builtin_diagram("I14"), true) == 168);

  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    CoxeterDiagram g = random_graph(rng, 7, trial % 2 ? 0.3 : 0.5);
    CHECK(automorphism_count(g, false) == brute_automorphisms(g, false));
  }
  for (int n = 3; n <= 8; ++n) {
    CoxeterDiagram a = family(Family::A, n);
    CHECK(automorphism_count(a, false) == brute_automorphisms(a, false));
    CHECK(automorphism_count(a, true) == brute_automorphisms(a, true));
  }
  CoxeterDiagram hex = family(Family::affine_A, 5);
  CHECK(automorphism_count(hex, false) == 12);
  CHECK(automorphism_count(hex, true) == 6);
}

TEST_CASE("isomorphism agrees with brute force") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 40; ++trial) {
    CoxeterDiagram a = random_graph(rng, 6, 0.4), b = random_graph(rng, 6, 0.4);
    CHECK(isomorphic(a, b) == brute_isomorphic(a, b));
    std::vector<int> perm(6);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(isomorphic(a, reorder(a, perm)));
  }
}

TEST_CASE("induced search agrees with subset enumeration") {
  std::mt19937_64 rng(33);
  const std::vector<CoxeterDiagram> patterns = {family(Family::A, 3), family(Family::D, 4),
                                                 family(Family::affine_A, 3), family(Family::A, 4)};
  for (int trial = 0; trial < 8; ++trial) {
    CoxeterDiagram g = random_graph(rng, 10, 0.35);
    for (const auto& p : patterns) CHECK(find_induced(g, p).embeddings.size() == brute_induced_count(g, p));
  }
  CoxeterDiagram i26 = builtin_diagram("I26");
  CHECK(find_induced(i26, family(Family::A, 2)).embeddings.size() == 52);
  CHECK(find_induced(i26, family(Family::A, 3)).embeddings.size() == 26 * 6);
}

TEST_CASE("induced copies form unions of automorphism orbits") {
  CoxeterDiagram i26 = builtin_diagram("I26");
  InducedSearch s = find_induced(i26, family(Family::D, 4));
  REQUIRE(s.complete);
  std::set<NodeSet> images;
  for (const auto& e : s.embeddings) {
    NodeSet img(e.begin(), e.end());
    std::sort(img.begin(), img.end());
    images.insert(img);
  }
  CHECK(images.size() == s.embeddings.size());
  auto auts = automorphisms(i26, false);
  REQUIRE(auts.size() == 11232);
  for (std::size_t k = 0; k < auts.size(); k += 97) {
    for (const auto& img : images) {
      NodeSet moved;
      for (int v : img) moved.push_back(auts[k][v]);
      std::sort(moved.begin(), moved.end());
      REQUIRE(images.count(moved) == 1);
    }
  }
}

TEST_CASE("induced cycles by two enumerators") {
  CoxeterDiagram i26 = builtin_diagram("I26");
  Golden golden = Golden::load(default_golden_path());
  const std::uint64_t frozen = golden.get("diagram.free12gons").get<std::uint64_t>();
  CHECK(count_induced_cycles(i26, 12) == frozen);
  CHECK(find_induced(i26, family(Family::affine_A, 11)).embeddings.size() == frozen);
  CHECK(count_induced_cycles(i26, 6) == find_induced(i26, family(Family::affine_A, 5)).embeddings.size());
  CHECK(count_induced_cycles(family(Family::affine_A, 11), 12) == 1);
  CHECK(count_induced_cycles(family(Family::A, 11), 12) == 0);
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 8; ++trial) {
    CoxeterDiagram g = random_graph(rng, 10, 0.3);
    for (int len = 4; len <= 6; ++len)
      CHECK(count_induced_cycles(g, len) == brute_induced_count(g, family(Family::affine_A, len - 1)));
  }
}

TEST_CASE("named subdiagrams of I26") {
  CoxeterDiagram d = builtin_diagram("I26");
  std::vector<std::string> y555 = {"a"};
  for (int i = 1; i <= 3; ++i)
    for (char c : std::string("bcdef")) y555.push_back(std::string(1, c) + std::to_string(i));
  CHECK(isomorphic(induced(d, y555), y_shape(5, 5, 5)));

  std::vector<std::string> arms(y555.begin() + 1, y555.end());
  CHECK(component_type(d, d.nodes(arms)) == "3A5");

  std::vector<std::string> d4 = {"a", "b1", "b2", "b3"};
  for (int i = 1; i <= 3; ++i)
    for (char c : std::string("defz")) d4.push_back(std::string(1, c) + std::to_string(i));
  CHECK(component_type(d, d.nodes(d4)) == "4D4");

  NodeSet a4 = d.nodes({"c3", "d3", "e3", "f3"});
  CHECK(component_type(d, a4) == "A4");
  NodeSet z = zperp(d, a4);
  NodeSet gon = d.nodes({"a", "b1", "c1", "d1", "e1", "f1", "a3", "f2", "e2", "d2", "c2", "b2"});
  std::sort(gon.begin(), gon.end());
  CHECK(z == gon);
  CHECK(connected_type(induced(d, z)) == "tildeA11");
  CHECK(zperp(d, z) == a4);
}

TEST_CASE("zperp is antitone") {
  CoxeterDiagram d = builtin_diagram("I26");
  std::mt19937_64 rng(35);
  std::bernoulli_distribution coin(0.5), rare(0.15);
  for (int trial = 0; trial < 500; ++trial) {
    NodeSet j, k;
    for (int v = 0; v < d.size(); ++v) {
      bool in_j = rare(rng);
      if (in_j) j.push_back(v);
      if (in_j || (rare(rng) && coin(rng))) k.push_back(v);
    }
    NodeSet zj = zperp(d, j), zk = zperp(d, k);
    CHECK(std::includes(zj.begin(), zj.end(), zk.begin(), zk.end()));
    for (int v : zj) CHECK(std::find(j.begin(), j.end(), v) == j.end());
  }
  NodeSet all(d.size());
  std::iota(all.begin(), all.end(), 0);
  CHECK(zperp(d, all).empty());
  CHECK(zperp(d, {}).size() == 26);
}

TEST_CASE("text format round trip") {
  for (const auto& name : builtin_names()) {
    if (name.find('<') != std::string::npos) continue;  // parametrized families
    CoxeterDiagram d = builtin_diagram(name);
    CoxeterDiagram back = parse_diagram(format_diagram(d));
    REQUIRE(back.size() == d.size());
    CHECK(back.labels() == d.labels());
    CHECK(back.edges() == d.edges());
    for (int i = 0; i < d.size(); ++i) CHECK(back.color(i) == d.color(i));
  }
  CoxeterDiagram p = parse_diagram("nodes: a:b b1:w x:-\nedges: a-b1 b1-x\n");
  CHECK(p.size() == 3);
  CHECK(p.adjacent(0, 1));
  CHECK(p.color(2) == Color::none);
  CHECK_THROWS_AS(parse_diagram("nodes: a:b\nedges: a-q\n"), DiagramError);
  CHECK_THROWS_AS(parse_diagram("nodes: a:b a:w\n"), DiagramError);
  CHECK_THROWS_AS(builtin_diagram("Z9"), DiagramError);
}
