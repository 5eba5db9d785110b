#include "hyperlat/polytope.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace hyperlat {

Sqrt3 RealQuadSpace::inner(const Vec<Sqrt3>& x, const Vec<Sqrt3>& y) const {
  Sqrt3 s(0);
  for (Index i = 0; i < dim(); ++i) {
    if (sign(x(i)) == 0) continue;
    for (Index j = 0; j < dim(); ++j)
      if (sign(y(j)) != 0 && sign(form(i, j)) != 0) s += x(i) * form(i, j) * y(j);
  }
  return s;
}

Tower RealQuadSpace::inner(const Vec<Tower>& x, const Vec<Tower>& y) const {
  Tower s(0);
  for (Index i = 0; i < dim(); ++i) {
    if (sign(x(i)) == 0) continue;
    for (Index j = 0; j < dim(); ++j)
      if (sign(y(j)) != 0 && sign(form(i, j)) != 0) s += x(i) * Tower(form(i, j)) * y(j);
  }
  return s;
}

Vec<Tower> to_tower(const Vec<Sqrt3>& v) {
  Vec<Tower> t(v.size());
  for (Index i = 0; i < v.size(); ++i) t(i) = Tower(v(i));
  return t;
}

namespace {

bool bipartite(const CoxeterDiagram& d) {
  std::vector<int> side(d.size(), -1);
  for (int s = 0; s < d.size(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : d.neighbors(v)) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          queue.push_back(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

Mat<Sqrt3> principal(const Mat<Sqrt3>& g, const NodeSet& j) {
  const Index k = static_cast<Index>(j.size());
  Mat<Sqrt3> out(k, k);
  for (Index a = 0; a < k; ++a)
    for (Index b = 0; b < k; ++b) out(a, b) = g(j[a], j[b]);
  return out;
}

struct NodeSetHash {
  std::size_t operator()(const NodeSet& s) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : s) h = (h ^ static_cast<std::size_t>(x + 1)) * 1099511628211ull;
    return h;
  }
};

}  // namespace

RealQuadSpace real_form(const CoxeterDiagram& d) {
  if (!bipartite(d)) throw PolytopeError("real form needs a bipartite diagram");
  RealQuadSpace s;
  s.diagram = d;
  s.gram = real_gram(d);
  s.basis = independent_rows(s.gram);
  const Index r = static_cast<Index>(s.basis.size());
  Mat<Sqrt3> rows(r, s.size());
  for (Index k = 0; k < r; ++k) rows.row(k) = s.gram.row(s.basis[k]);
  // column i of coords: e_i - sum_k c_k e_{basis k} lies in the radical
  auto c = solve(Mat<Sqrt3>(rows.transpose()), Mat<Sqrt3>(s.gram.transpose()));
  if (!c) throw std::logic_error("real form: inconsistent coordinates");
  s.coords = *c;
  s.form = principal(s.gram, NodeSet(s.basis.begin(), s.basis.end()));
  s.signature = symmetric_signature(s.form);
  return s;
}

std::string to_string(SubsetKind k) {
  switch (k) {
    case SubsetKind::elliptic: return "elliptic";
    case SubsetKind::parabolic: return "parabolic";
    case SubsetKind::hyperbolic: return "hyperbolic";
  }
  return "?";
}

SubsetKind classify_gram(const Mat<Sqrt3>& g) {
  if (g.rows() == 0) return SubsetKind::elliptic;
  Signature sig = symmetric_signature(g);
  if (sig.negative > 0) return SubsetKind::hyperbolic;
  if (sig.zero > 0) return SubsetKind::parabolic;
  return SubsetKind::elliptic;
}

SubsetClass classify_subset(const RealQuadSpace& s, const NodeSet& j) {
  SubsetClass c;
  c.nodes = j;
  std::sort(c.nodes.begin(), c.nodes.end());
  Mat<Sqrt3> g = principal(s.gram, c.nodes);
  c.kind = classify_gram(g);
  c.gram_rank = c.nodes.empty() ? 0 : rank(g);
  c.components = components(s.diagram, c.nodes);
  for (const auto& comp : c.components) c.component_kinds.push_back(classify_gram(principal(s.gram, comp)));
  c.type = c.nodes.empty() ? "empty" : component_type(s.diagram, c.nodes);
  return c;
}

std::vector<SubsetClass> critical_subsets(const RealQuadSpace& s) {
  std::unordered_map<NodeSet, bool, NodeSetHash> elliptic_memo;
  auto is_elliptic = [&](const NodeSet& j) {
    auto it = elliptic_memo.find(j);
    if (it != elliptic_memo.end()) return it->second;
    bool e = classify_gram(principal(s.gram, j)) == SubsetKind::elliptic;
    elliptic_memo.emplace(j, e);
    return e;
  };

  std::vector<NodeSet> frontier;
  std::unordered_set<NodeSet, NodeSetHash> seen;
  for (int v = 0; v < s.size(); ++v) {
    NodeSet single{v};
    seen.insert(single);
    if (is_elliptic(single)) frontier.push_back(single);
  }
  std::set<NodeSet> critical;
  while (!frontier.empty()) {
    std::vector<NodeSet> next;
    for (const NodeSet& k : frontier) {
      std::set<int> boundary;
      for (int v : k)
        for (int w : s.diagram.neighbors(v))
          if (!std::binary_search(k.begin(), k.end(), w)) boundary.insert(w);
      for (int w : boundary) {
        NodeSet j = k;
        j.insert(std::lower_bound(j.begin(), j.end(), w), w);
        if (!seen.insert(j).second) continue;
        if (is_elliptic(j)) {
          next.push_back(std::move(j));
          continue;
        }
        bool minimal = true;
        for (std::size_t drop = 0; drop < j.size() && minimal; ++drop) {
          NodeSet sub = j;
          sub.erase(sub.begin() + static_cast<long>(drop));
          if (!is_elliptic(sub)) minimal = false;
        }
        if (minimal) critical.insert(j);
      }
    }
    frontier = std::move(next);
  }
  std::vector<SubsetClass> out;
  for (const auto& j : critical) out.push_back(classify_subset(s, j));
  return out;
}

std::vector<NodeSet> critical_subsets_bruteforce(const RealQuadSpace& s, int max_size) {
  // Gram of a disconnected set is block diagonal: classify by components.
  std::unordered_map<NodeSet, bool, NodeSetHash> comp_memo;
  auto component_elliptic = [&](const NodeSet& c) {
    auto it = comp_memo.find(c);
    if (it != comp_memo.end()) return it->second;
    bool e = classify_gram(principal(s.gram, c)) == SubsetKind::elliptic;
    comp_memo.emplace(c, e);
    return e;
  };
  auto elliptic = [&](const NodeSet& j) {
    for (const auto& c : components(s.diagram, j))
      if (!component_elliptic(c)) return false;
    return true;
  };

  std::vector<NodeSet> out;
  std::unordered_set<NodeSet, NodeSetHash> level{NodeSet{}};
  const int n = static_cast<int>(s.size());
  for (int size = 1; size <= max_size; ++size) {
    std::unordered_set<NodeSet, NodeSetHash> next;
    std::vector<NodeSet> sorted_level(level.begin(), level.end());
    std::sort(sorted_level.begin(), sorted_level.end());
    for (const NodeSet& k : sorted_level) {
      int start = k.empty() ? 0 : k.back() + 1;
      for (int v = start; v < n; ++v) {
        NodeSet j = k;
        j.push_back(v);
        // every (size-1)-subset must be elliptic
        bool all_sub = true;
        for (std::size_t drop = 0; drop + 1 < j.size() && all_sub; ++drop) {
          NodeSet sub = j;
          sub.erase(sub.begin() + static_cast<long>(drop));
          if (!level.count(sub)) all_sub = false;
        }
        if (!all_sub) continue;
        if (elliptic(j))
          next.insert(std::move(j));
        else
          out.push_back(std::move(j));
      }
    }
    level = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Positive generator of the kernel of a connected parabolic Gram block.
std::optional<Vec<Sqrt3>> perron_vector(const Mat<Sqrt3>& g) {
  Mat<Sqrt3> k = kernel_basis(g);
  if (k.cols() != 1) return std::nullopt;
  Vec<Sqrt3> v = k.col(0);
  if (sign(v(0)) < 0) v = -v;
  return v;
}

Vec<Sqrt3> normalized_ray(Vec<Sqrt3> v) {
  for (Index i = 0; i < v.size(); ++i)
    if (sign(v(i)) != 0) {
      Sqrt3 lead = v(i);
      for (Index k = 0; k < v.size(); ++k) v(k) = v(k) / lead;
      return v;
    }
  return v;
}

}  // namespace

PolytopeCertificate vinberg_check(const RealQuadSpace& s, bool with_vertices) {
  if (!s.lorentzian()) throw PolytopeError("Vinberg's criterion needs a Lorentzian space");
  PolytopeCertificate cert;
  cert.dim = s.dim();
  cert.signature = s.signature;
  cert.verdict = true;
  for (auto& j : critical_subsets(s)) {
    CriticalEntry e;
    e.z = zperp(s.diagram, j.nodes);
    e.n = j.nodes;
    e.n.insert(e.n.end(), e.z.begin(), e.z.end());
    std::sort(e.n.begin(), e.n.end());
    e.n_type = component_type(s.diagram, e.n);
    e.components_parabolic = true;
    for (const auto& comp : components(s.diagram, e.n)) {
      SubsetKind k = classify_gram(principal(s.gram, comp));
      e.n_component_kinds.push_back(k);
      if (k != SubsetKind::parabolic) e.components_parabolic = false;
    }
    e.n_rank = rank(principal(s.gram, e.n));
    e.rank_ok = e.n_rank == s.dim() - 2;
    e.subset = std::move(j);
    if (!e.ok()) {
      cert.verdict = false;
      std::string what = "critical " + e.subset.type + " {" ;
      for (const auto& l : s.diagram.labels_of(e.subset.nodes)) what += " " + l;
      what += " }: ";
      if (e.subset.kind != SubsetKind::parabolic) what += "not parabolic; ";
      if (!e.components_parabolic) what += "N(J) = " + e.n_type + " has non-parabolic components; ";
      if (!e.rank_ok) what += "rank " + std::to_string(e.n_rank) + " != " + std::to_string(s.dim() - 2);
      cert.failures.push_back(what);
    }
    cert.critical.push_back(std::move(e));
  }
  if (cert.verdict && with_vertices) {
    cert.ideal_vertices = ideal_vertices(s, cert);
    int m = -1;
    for (const auto& v : cert.ideal_vertices) m = std::max(m, v.orbit);
    cert.orbit_count = m + 1;
  }
  return cert;
}

std::vector<IdealVertex> ideal_vertices(const RealQuadSpace& s, const PolytopeCertificate& cert) {
  if (!cert.verdict) throw PolytopeError("ideal vertices need a passing Vinberg certificate");
  std::map<NodeSet, std::string> sets;
  for (const auto& e : cert.critical) sets.emplace(e.n, e.n_type);

  std::vector<IdealVertex> out;
  std::map<NodeSet, std::size_t> index;
  for (const auto& [n, type] : sets) {
    IdealVertex v;
    v.n = n;
    v.type = type;
    v.perron_positive = true;
    v.kernels_proportional = true;
    std::vector<Vec<Sqrt3>> rays;
    for (const auto& comp : components(s.diagram, n)) {
      auto k = perron_vector(principal(s.gram, comp));
      if (!k) {
        v.perron_positive = false;
        v.kernels_proportional = false;
        continue;
      }
      Vec<Sqrt3> w = Vec<Sqrt3>::Constant(s.dim(), Sqrt3(0));
      for (std::size_t c = 0; c < comp.size(); ++c) {
        if (sign((*k)(static_cast<Index>(c))) <= 0) v.perron_positive = false;
        w += (*k)(static_cast<Index>(c)) * s.e(comp[c]);
      }
      rays.push_back(normalized_ray(w));
    }
    for (std::size_t k = 1; k < rays.size(); ++k)
      if (rays[k] != rays[0]) v.kernels_proportional = false;
    if (!rays.empty()) {
      v.ray = rays[0];
      v.isotropic = sign(s.inner(v.ray, v.ray)) == 0;
    }
    index.emplace(n, out.size());
    out.push_back(std::move(v));
  }

  // orbits under all automorphisms of the diagram (they act by isometries)
  auto autos = automorphisms(s.diagram, false);
  int orbit = 0;
  for (auto& v : out) {
    if (v.orbit >= 0) continue;
    for (const auto& perm : autos) {
      NodeSet image;
      for (int x : v.n) image.push_back(perm[x]);
      std::sort(image.begin(), image.end());
      auto it = index.find(image);
      if (it == index.end()) throw std::logic_error("cusp set not closed under automorphisms");
      out[it->second].orbit = orbit;
    }
    ++orbit;
  }
  return out;
}

Tower sinh2_distance(const RealQuadSpace& s, const Vec<Tower>& w, Index i) {
  Vec<Tower> e = to_tower(s.e(i));
  Tower p = s.inner(w, e);
  Tower n = s.inner(w, w);
  Tower ee = s.inner(e, e);
  return p * p / (ee * (-n));
}

namespace {

// Nonzero vector w in V with <w, e_i> = 0 for all i in `nodes`.
Vec<Sqrt3> orthogonal_to(const RealQuadSpace& s, const std::vector<Index>& nodes) {
  Mat<Sqrt3> a(static_cast<Index>(nodes.size()), s.dim());
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    Vec<Sqrt3> e = s.e(nodes[k]);
    for (Index c = 0; c < s.dim(); ++c) {
      Sqrt3 t(0);
      for (Index r = 0; r < s.dim(); ++r) t += e(r) * s.form(r, c);
      a(static_cast<Index>(k), c) = t;
    }
  }
  Mat<Sqrt3> ker = kernel_basis(a);
  if (ker.cols() != 1) throw PolytopeError("degenerate Weyl vector solve: kernel dimension " + std::to_string(ker.cols()));
  return ker.col(0);
}

}  // namespace

WeylData weyl_points(const RealQuadSpace& s, const std::string& method) {
  WeylData w;
  w.method = method;
  const Index n = s.size();
  if (method == "sum") {
    Vec<Sqrt3> sum = Vec<Sqrt3>::Constant(s.dim(), Sqrt3(0));
    for (Index i = 0; i < n; ++i) sum += s.e(i);
    w.w0 = to_tower(sum);
  } else if (method == "points-lines") {
    std::vector<Index> points, lines;
    for (Index i = 0; i < n; ++i) {
      Color c = s.diagram.color(static_cast<int>(i));
      if (c == Color::black) points.push_back(i);
      else if (c == Color::white) lines.push_back(i);
      else throw PolytopeError("points-lines Weyl vectors need a colored diagram");
    }
    auto oriented = [&](Vec<Sqrt3> v, const std::vector<Index>& others) {
      // pairs non-negatively with every e_i
      for (Index i : others) {
        int sg = sign(s.inner(v, s.e(i)));
        if (sg < 0) return Vec<Sqrt3>(-v);
        if (sg > 0) return v;
      }
      return v;
    };
    Vec<Sqrt3> wp = oriented(orthogonal_to(s, points), lines);
    Vec<Sqrt3> wl = oriented(orthogonal_to(s, lines), points);
    w.r_points = -s.inner(wp, wp);
    w.r_lines = -s.inner(wl, wl);
    if (sign(w.r_points) <= 0 || sign(w.r_lines) <= 0) throw PolytopeError("Weyl vectors are not timelike");
    if (w.r_points == w.r_lines) {
      w.w0 = to_tower(Vec<Sqrt3>(wp + wl));
    } else {
      // sqrt(r_P) (w_P / sqrt(r_P) + w_L / sqrt(r_L)) up to the positive factor sqrt(r_L)
      w.tower = true;
      Tower root = Tower::sqrt_of(w.r_points * w.r_lines);
      w.w0 = Vec<Tower>(s.dim());
      for (Index k = 0; k < s.dim(); ++k) w.w0(k) = root * Tower(wp(k)) + Tower(w.r_points * wl(k));
    }
    w.w_points = wp;
    w.w_lines = wl;
  } else {
    throw PolytopeError("unknown Weyl method '" + method + "'");
  }
  w.norm = s.inner(w.w0, w.w0);
  if (sign(w.norm) >= 0) throw PolytopeError("Weyl point is not timelike");
  w.equidistant = true;
  for (Index i = 0; i < n; ++i) {
    w.pairings.push_back(s.inner(w.w0, to_tower(s.e(i))));
    w.sinh2.push_back(sinh2_distance(s, w.w0, i));
    if (w.sinh2.back() != w.sinh2.front()) w.equidistant = false;
  }
  return w;
}

Vec<Tower> face_project(const RealQuadSpace& s, const NodeSet& j, const Vec<Tower>& v) {
  if (j.empty()) return v;
  if (classify_gram(principal(s.gram, j)) != SubsetKind::elliptic)
    throw PolytopeError("face projection needs an elliptic subset");
  const Index k = static_cast<Index>(j.size());
  Mat<Tower> gj(k, k);
  Mat<Tower> rhs(k, 1);
  for (Index a = 0; a < k; ++a) {
    for (Index b = 0; b < k; ++b) gj(a, b) = Tower(s.gram(j[a], j[b]));
    rhs(a, 0) = s.inner(v, to_tower(s.e(j[a])));
  }
  auto coef = solve(gj, rhs);
  if (!coef) throw std::logic_error("face projection: singular elliptic Gram");
  Vec<Tower> out = v;
  for (Index a = 0; a < k; ++a) {
    Vec<Tower> e = to_tower(s.e(j[a]));
    for (Index c = 0; c < s.dim(); ++c) out(c) -= (*coef)(a, 0) * e(c);
  }
  return out;
}

}  // namespace hyperlat
