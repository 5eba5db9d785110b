#include "hyperlat/diagram.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace hyperlat {

CoxeterDiagram::CoxeterDiagram(std::vector<std::string> labels, std::vector<Color> colors)
    : labels_(std::move(labels)), colors_(std::move(colors)) {
  const auto n = labels_.size();
  if (colors_.empty()) colors_.assign(n, Color::none);
  if (colors_.size() != n) throw DiagramError("color list length differs from node count");
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (seen.size() != n) throw DiagramError("duplicate node label");
  adj_.assign(n, std::vector<char>(n, 0));
  nbrs_.assign(n, {});
}

void CoxeterDiagram::add_edge(int i, int j) {
  if (i == j) throw DiagramError("loop at node " + labels_[i]);
  if (adj_[i][j]) return;
  adj_[i][j] = adj_[j][i] = 1;
  nbrs_[i].insert(std::lower_bound(nbrs_[i].begin(), nbrs_[i].end(), j), j);
  nbrs_[j].insert(std::lower_bound(nbrs_[j].begin(), nbrs_[j].end(), i), i);
}

int CoxeterDiagram::edge_count() const {
  int e = 0;
  for (const auto& nb : nbrs_) e += static_cast<int>(nb.size());
  return e / 2;
}

std::vector<std::pair<int, int>> CoxeterDiagram::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < size(); ++i)
    for (int j : nbrs_[i])
      if (i < j) out.emplace_back(i, j);
  return out;
}

std::optional<int> CoxeterDiagram::index_of(std::string_view label) const {
  for (int i = 0; i < size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

int CoxeterDiagram::require(std::string_view label) const {
  auto i = index_of(label);
  if (!i) throw DiagramError("unknown node label '" + std::string(label) + "'");
  return *i;
}

NodeSet CoxeterDiagram::nodes(const std::vector<std::string>& labels) const {
  NodeSet out;
  for (const auto& l : labels) out.push_back(require(l));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::string> CoxeterDiagram::labels_of(const NodeSet& nodes) const {
  std::vector<std::string> out;
  for (int i : nodes) out.push_back(labels_[i]);
  return out;
}

bool CoxeterDiagram::has_coloring() const {
  return std::none_of(colors_.begin(), colors_.end(), [](Color c) { return c == Color::none; });
}

bool CoxeterDiagram::is_properly_colored() const {
  if (!has_coloring()) return false;
  for (auto [i, j] : edges())
    if (colors_[i] == colors_[j]) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Families

bool is_finite_type(int p, int q, int r) {
  // 1/(p+1)+1/(q+1)+1/(r+1) > 1, cleared of denominators
  long a = p + 1, b = q + 1, c = r + 1;
  return b * c + a * c + a * b > a * b * c;
}

bool is_affine_type(int p, int q, int r) {
  long a = p + 1, b = q + 1, c = r + 1;
  return b * c + a * c + a * b == a * b * c;
}

namespace {

std::vector<std::string> numbered(int from, int to) {
  std::vector<std::string> out;
  for (int i = from; i <= to; ++i) out.push_back(std::to_string(i));
  return out;
}

// 2-color a connected bipartite diagram from `root` (black); false if odd cycle.
bool two_color(CoxeterDiagram& d, int root) {
  std::vector<int> side(d.size(), -1);
  std::deque<int> queue{root};
  side[root] = 0;
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
  for (int i = 0; i < d.size(); ++i) d.set_color(i, side[i] == 0 ? Color::black : Color::white);
  return true;
}

CoxeterDiagram build_y(int p, int q, int r) {
  if (p < 0 || q < 0 || r < 0) throw DiagramError("Y_pqr needs p, q, r >= 0");
  CoxeterDiagram d(numbered(0, p + q + r));
  int next = 1;
  for (int arm : {p, q, r}) {
    int prev = 0;
    for (int k = 0; k < arm; ++k) {
      d.add_edge(prev, next);
      prev = next++;
    }
  }
  two_color(d, 0);
  return d;
}

}  // namespace

CoxeterDiagram build_family(const DiagramType& t) {
  switch (t.family) {
    case Family::A: {
      if (t.n < 1) throw DiagramError("A_n needs n >= 1");
      CoxeterDiagram d(numbered(1, t.n));
      for (int i = 0; i + 1 < t.n; ++i) d.add_edge(i, i + 1);
      for (int i = 0; i < t.n; ++i) d.set_color(i, i % 2 == 0 ? Color::black : Color::white);
      return d;
    }
    case Family::affine_A: {
      if (t.n < 2) throw DiagramError("affine A_n needs n >= 2");
      CoxeterDiagram d(numbered(0, t.n));
      for (int i = 0; i < t.n; ++i) d.add_edge(i, i + 1);
      d.add_edge(0, t.n);
      if ((t.n + 1) % 2 == 0)
        for (int i = 0; i <= t.n; ++i) d.set_color(i, i % 2 == 0 ? Color::black : Color::white);
      return d;
    }
    case Family::D:
      if (t.n < 4) throw DiagramError("D_n needs n >= 4");
      return build_y(t.n - 3, 1, 1);
    case Family::E:
      if (t.n < 6 || t.n > 8) throw DiagramError("E_n needs 6 <= n <= 8");
      return build_y(t.n - 4, 2, 1);
    case Family::affine_D: {
      if (t.n < 4) throw DiagramError("affine D_n needs n >= 4");
      // path 0..n-4 with two leaves at each end
      CoxeterDiagram d(numbered(0, t.n));
      int path = t.n - 3;
      for (int i = 0; i + 1 < path; ++i) d.add_edge(i, i + 1);
      d.add_edge(0, path);
      d.add_edge(0, path + 1);
      d.add_edge(path - 1, path + 2);
      d.add_edge(path - 1, path + 3);
      two_color(d, 0);
      return d;
    }
    case Family::affine_E:
      if (t.n == 6) return build_y(2, 2, 2);
      if (t.n == 7) return build_y(3, 3, 1);
      if (t.n == 8) return build_y(5, 2, 1);
      throw DiagramError("affine E_n needs 6 <= n <= 8");
    case Family::Y:
      return build_y(t.p, t.q, t.r);
  }
  throw DiagramError("unknown family");
}

namespace {

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

std::vector<std::array<int, 3>> projective_points(int q) {
  std::vector<std::array<int, 3>> out;
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y)
      for (int z = 0; z < q; ++z) {
        std::array<int, 3> v{x, y, z};
        auto first = std::find_if(v.begin(), v.end(), [](int c) { return c != 0; });
        if (first != v.end() && *first == 1) out.push_back(v);
      }
  return out;
}

std::string coord_label(char prefix, const std::array<int, 3>& v) {
  return std::string(1, prefix) + std::to_string(v[0]) + std::to_string(v[1]) + std::to_string(v[2]);
}

}  // namespace

CoxeterDiagram build_incidence(int q) {
  if (!is_prime(q) || q > 7) throw DiagramError("incidence graphs are supported for prime q <= 7");
  auto pts = projective_points(q);
  std::vector<std::string> labels;
  std::vector<Color> colors;
  for (const auto& p : pts) {
    labels.push_back(coord_label('p', p));
    colors.push_back(Color::black);
  }
  for (const auto& l : pts) {
    labels.push_back(coord_label('l', l));
    colors.push_back(Color::white);
  }
  CoxeterDiagram d(labels, colors);
  const int m = static_cast<int>(pts.size());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int dot = pts[i][0] * pts[j][0] + pts[i][1] * pts[j][1] + pts[i][2] * pts[j][2];
      if (dot % q == 0) d.add_edge(i, m + j);
    }
  return d;
}

const std::vector<NamedIncidenceNode>& i26_correspondence() {
  // Figure labels of the 26 nodes; listed Y555 part first.
  static const std::vector<NamedIncidenceNode> table = {
      {"a", true, 0, 0, 1},   {"b1", false, 1, 0, 0}, {"c1", true, 0, 1, 2},  {"d1", false, 1, 2, 2},
      {"e1", true, 1, 2, 2},  {"f1", false, 0, 1, 2}, {"b2", false, 0, 1, 0}, {"c2", true, 1, 0, 2},
      {"d2", false, 1, 2, 1}, {"e2", true, 1, 2, 1},  {"f2", false, 1, 0, 2}, {"b3", false, 1, 2, 0},
      {"c3", true, 1, 1, 2},  {"d3", false, 1, 1, 2}, {"e3", true, 1, 2, 0},  {"f3", false, 0, 0, 1},
      {"f", false, 1, 1, 0},  {"a1", true, 0, 1, 0},  {"a2", true, 1, 0, 0},  {"a3", true, 1, 1, 1},
      {"g1", true, 0, 1, 1},  {"g2", true, 1, 0, 1},  {"g3", true, 1, 1, 0},  {"z1", false, 1, 0, 1},
      {"z2", false, 0, 1, 1}, {"z3", false, 1, 1, 1},
  };
  return table;
}

const std::vector<NamedIncidenceNode>& i14_correspondence() {
  static const std::vector<NamedIncidenceNode> table = {
      {"a", true, 0, 0, 1},   {"b1", false, 1, 0, 0}, {"c1", true, 0, 1, 1}, {"d1", false, 0, 1, 1},
      {"b2", false, 0, 1, 0}, {"c2", true, 1, 0, 1},  {"d2", false, 1, 0, 1}, {"b3", false, 1, 1, 0},
      {"c3", true, 1, 1, 0},  {"d3", false, 0, 0, 1}, {"z", false, 1, 1, 1},  {"a1", true, 0, 1, 0},
      {"a2", true, 1, 0, 0},  {"a3", true, 1, 1, 1},
  };
  return table;
}

namespace {

CoxeterDiagram named_incidence(int q, const std::vector<NamedIncidenceNode>& table) {
  CoxeterDiagram alg = build_incidence(q);
  std::vector<int> order;
  std::vector<std::string> labels;
  std::vector<Color> colors;
  for (const auto& node : table) {
    std::array<int, 3> v{node.x, node.y, node.z};
    order.push_back(alg.require(coord_label(node.point ? 'p' : 'l', v)));
    labels.emplace_back(node.label);
    colors.push_back(node.point ? Color::black : Color::white);
  }
  CoxeterDiagram d(labels, colors);
  for (int i = 0; i < d.size(); ++i)
    for (int j = i + 1; j < d.size(); ++j)
      if (alg.adjacent(order[i], order[j])) d.add_edge(i, j);
  return d;
}

bool parse_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  out = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
    out = out * 10 + (c - '0');
  }
  return true;
}

}  // namespace

CoxeterDiagram builtin_diagram(std::string_view name) {
  if (name == "I26") return named_incidence(3, i26_correspondence());
  if (name == "I14") return named_incidence(2, i14_correspondence());
  int n = 0;
  if (name.size() > 5 && name.substr(0, 5) == "tilde") {
    std::string_view rest = name.substr(5);
    if (rest.size() >= 2 && parse_int(rest.substr(1), n)) {
      if (rest[0] == 'A') return build_family({Family::affine_A, n});
      if (rest[0] == 'D') return build_family({Family::affine_D, n});
      if (rest[0] == 'E') return build_family({Family::affine_E, n});
    }
  } else if (name.size() >= 2) {
    if (name[0] == 'Y' && name.size() == 4) {
      int p = name[1] - '0', q = name[2] - '0', r = name[3] - '0';
      if (p >= 0 && p <= 9 && q >= 0 && q <= 9 && r >= 0 && r <= 9) return build_family({Family::Y, 0, p, q, r});
    }
    if (parse_int(name.substr(1), n)) {
      if (name[0] == 'A') return build_family({Family::A, n});
      if (name[0] == 'D') return build_family({Family::D, n});
      if (name[0] == 'E') return build_family({Family::E, n});
    }
  }
  throw DiagramError("unknown diagram name '" + std::string(name) + "'");
}

std::vector<std::string> builtin_names() {
  return {"A<n>", "D<n>", "E6", "E7", "E8", "tildeA<n>", "tildeD<n>", "tildeE6", "tildeE7", "tildeE8",
          "Y<pqr>", "I26", "I14"};
}

// ---------------------------------------------------------------------------
// Subdiagrams

CoxeterDiagram induced(const CoxeterDiagram& d, const NodeSet& subset) {
  NodeSet s = subset;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (int v : s)
    if (v < 0 || v >= d.size()) throw DiagramError("node index out of range");
  std::vector<std::string> labels;
  std::vector<Color> colors;
  for (int v : s) {
    labels.push_back(d.label(v));
    colors.push_back(d.color(v));
  }
  CoxeterDiagram out(labels, colors);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (d.adjacent(s[i], s[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
  return out;
}

CoxeterDiagram induced(const CoxeterDiagram& d, const std::vector<std::string>& labels) {
  return induced(d, d.nodes(labels));
}

CoxeterDiagram reorder(const CoxeterDiagram& d, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != d.size()) throw DiagramError("reorder needs a permutation");
  std::vector<std::string> labels;
  std::vector<Color> colors;
  for (int v : order) {
    labels.push_back(d.label(v));
    colors.push_back(d.color(v));
  }
  CoxeterDiagram out(labels, colors);
  for (int i = 0; i < d.size(); ++i)
    for (int j = i + 1; j < d.size(); ++j)
      if (d.adjacent(order[i], order[j])) out.add_edge(i, j);
  return out;
}

CoxeterDiagram flip_colors(const CoxeterDiagram& d) {
  CoxeterDiagram out = d;
  for (int i = 0; i < d.size(); ++i) {
    Color c = d.color(i);
    out.set_color(i, c == Color::black ? Color::white : (c == Color::white ? Color::black : Color::none));
  }
  return out;
}

NodeSet zperp(const CoxeterDiagram& d, const NodeSet& j) {
  std::vector<char> blocked(d.size(), 0);
  for (int v : j) {
    blocked[v] = 1;
    for (int w : d.neighbors(v)) blocked[w] = 1;
  }
  NodeSet out;
  for (int v = 0; v < d.size(); ++v)
    if (!blocked[v]) out.push_back(v);
  return out;
}

std::vector<NodeSet> components(const CoxeterDiagram& d, const NodeSet& subset) {
  std::vector<char> in(d.size(), 0), seen(d.size(), 0);
  for (int v : subset) in[v] = 1;
  std::vector<NodeSet> out;
  NodeSet sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  for (int s : sorted) {
    if (seen[s]) continue;
    NodeSet comp;
    std::deque<int> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      comp.push_back(v);
      for (int w : d.neighbors(v))
        if (in[w] && !seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<NodeSet> components(const CoxeterDiagram& d) {
  NodeSet all(d.size());
  std::iota(all.begin(), all.end(), 0);
  return components(d, all);
}

bool is_connected(const CoxeterDiagram& d, const NodeSet& subset) {
  return !subset.empty() && components(d, subset).size() == 1;
}

// ---------------------------------------------------------------------------
// Backtracking search

namespace {

// Pattern nodes in BFS order per component; parent[k] = position of an
// earlier neighbor or -1 for component roots.
struct SearchOrder {
  std::vector<int> order;
  std::vector<int> parent;
};

SearchOrder search_order(const CoxeterDiagram& d) {
  SearchOrder so;
  std::vector<int> pos(d.size(), -1);
  // start each component at a maximum-degree node to constrain early
  std::vector<int> starts(d.size());
  std::iota(starts.begin(), starts.end(), 0);
  std::stable_sort(starts.begin(), starts.end(), [&](int a, int b) { return d.degree(a) > d.degree(b); });
  for (int s : starts) {
    if (pos[s] >= 0) continue;
    std::deque<int> queue{s};
    pos[s] = static_cast<int>(so.order.size());
    so.order.push_back(s);
    so.parent.push_back(-1);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : d.neighbors(v))
        if (pos[w] < 0) {
          pos[w] = static_cast<int>(so.order.size());
          so.order.push_back(w);
          so.parent.push_back(pos[v]);
          queue.push_back(w);
        }
    }
  }
  return so;
}

// Maps pattern nodes to target nodes so that adjacency is preserved both ways.
// `accept` sees the map indexed by pattern node; returning false stops.
struct Matcher {
  const CoxeterDiagram& pattern;
  const CoxeterDiagram& target;
  bool respect_colors = false;
  bool same_degree = false;
  std::uint64_t budget = UINT64_MAX;
  std::uint64_t visited = 0;
  bool exhausted = false;
  SearchOrder so;
  std::vector<int> image;
  std::vector<char> used;
  std::function<bool(const std::vector<int>&)> accept;

  Matcher(const CoxeterDiagram& p, const CoxeterDiagram& t) : pattern(p), target(t), so(search_order(p)) {
    image.assign(p.size(), -1);
    used.assign(t.size(), 0);
  }

  bool feasible(int k, int cand) {
    int v = so.order[k];
    if (used[cand]) return false;
    if (respect_colors && pattern.color(v) != target.color(cand)) return false;
    if (same_degree ? target.degree(cand) != pattern.degree(v) : target.degree(cand) < pattern.degree(v))
      return false;
    for (int e = 0; e < k; ++e) {
      int u = so.order[e];
      if (pattern.adjacent(v, u) != target.adjacent(cand, image[u])) return false;
    }
    return true;
  }

  // returns false to abort the whole search
  bool extend(std::size_t k) {
    if (++visited > budget) {
      exhausted = true;
      return false;
    }
    if (k == so.order.size()) return accept(image);
    int v = so.order[k];
    auto try_candidate = [&](int cand) {
      if (!feasible(static_cast<int>(k), cand)) return true;
      image[v] = cand;
      used[cand] = 1;
      bool go_on = extend(k + 1);
      used[cand] = 0;
      image[v] = -1;
      return go_on;
    };
    if (so.parent[k] >= 0) {
      int parent_image = image[so.order[so.parent[k]]];
      for (int cand : target.neighbors(parent_image))
        if (!try_candidate(cand)) return false;
    } else {
      for (int cand = 0; cand < target.size(); ++cand)
        if (!try_candidate(cand)) return false;
    }
    return true;
  }
};

}  // namespace

InducedSearch find_induced(const CoxeterDiagram& haystack, const CoxeterDiagram& pattern, std::uint64_t budget) {
  InducedSearch result;
  if (pattern.size() == 0) {
    result.embeddings.push_back({});
    return result;
  }
  if (pattern.size() > haystack.size()) return result;
  std::map<NodeSet, std::vector<int>> best;
  Matcher m(pattern, haystack);
  m.budget = budget;
  m.accept = [&](const std::vector<int>& img) {
    NodeSet key = img;
    std::sort(key.begin(), key.end());
    auto it = best.find(key);
    if (it == best.end())
      best.emplace(std::move(key), img);
    else if (img < it->second)
      it->second = img;
    return true;
  };
  m.extend(0);
  result.complete = !m.exhausted;
  result.nodes_visited = m.visited;
  for (auto& [key, img] : best) result.embeddings.push_back(img);
  std::sort(result.embeddings.begin(), result.embeddings.end());
  return result;
}

namespace {

struct CycleWalk {
  const CoxeterDiagram& d;
  int length;
  int start = 0;
  std::vector<int> path;
  std::vector<char> on_path;
  std::uint64_t found = 0;

  void extend() {
    const int last = path.back();
    const bool closing = static_cast<int>(path.size()) == length;
    if (closing) {
      if (d.adjacent(last, start)) ++found;
      return;
    }
    for (int v : d.neighbors(last)) {
      if (v <= start || on_path[v]) continue;
      bool chord = false;
      for (std::size_t k = 0; k + 1 < path.size() && !chord; ++k) {
        // the start may touch the final node only
        if (k == 0 && static_cast<int>(path.size()) + 1 == length) continue;
        chord = d.adjacent(v, path[k]);
      }
      if (chord) continue;
      path.push_back(v);
      on_path[v] = 1;
      extend();
      on_path[v] = 0;
      path.pop_back();
    }
  }
};

}  // namespace

std::uint64_t count_induced_cycles(const CoxeterDiagram& d, int length) {
  if (length < 3) throw DiagramError("cycles have at least 3 nodes");
  CycleWalk w{d, length, 0, {}, std::vector<char>(d.size(), 0)};
  for (int s = 0; s < d.size(); ++s) {
    w.start = s;
    w.path = {s};
    w.on_path[s] = 1;
    w.extend();
    w.on_path[s] = 0;
  }
  return w.found / 2;  // both directions
}

bool isomorphic(const CoxeterDiagram& a, const CoxeterDiagram& b) {
  if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
  if (a.size() == 0) return true;
  Matcher m(b, a);
  m.same_degree = true;
  bool found = false;
  m.accept = [&](const std::vector<int>&) {
    found = true;
    return false;
  };
  m.extend(0);
  return found;
}

std::vector<std::vector<int>> automorphisms(const CoxeterDiagram& d, bool respect_colors) {
  std::vector<std::vector<int>> out;
  Matcher m(d, d);
  m.respect_colors = respect_colors;
  m.same_degree = true;
  m.accept = [&](const std::vector<int>& img) {
    out.push_back(img);
    return true;
  };
  m.extend(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t automorphism_count(const CoxeterDiagram& d, bool respect_colors) {
  std::uint64_t count = 0;
  Matcher m(d, d);
  m.respect_colors = respect_colors;
  m.same_degree = true;
  m.accept = [&](const std::vector<int>&) {
    ++count;
    return true;
  };
  m.extend(0);
  return count;
}

// ---------------------------------------------------------------------------
// Type names

std::string connected_type(const CoxeterDiagram& d) {
  const int n = d.size();
  const int e = d.edge_count();
  if (n == 0) return "empty";
  std::vector<int> deg(n);
  for (int i = 0; i < n; ++i) deg[i] = d.degree(i);
  int maxdeg = *std::max_element(deg.begin(), deg.end());
  if (e == n && maxdeg == 2) return "tildeA" + std::to_string(n - 1);
  if (e != n - 1) return "X" + std::to_string(n);
  if (maxdeg <= 2) return "A" + std::to_string(n);
  std::vector<int> branch;
  for (int i = 0; i < n; ++i)
    if (deg[i] >= 3) branch.push_back(i);
  if (branch.size() == 1 && deg[branch[0]] == 4 && n == 5) return "tildeD4";
  if (branch.size() == 1 && deg[branch[0]] == 3) {
    // arm lengths
    std::vector<int> arms;
    for (int start : d.neighbors(branch[0])) {
      int len = 1, prev = branch[0], cur = start;
      while (d.degree(cur) == 2) {
        int next = d.neighbors(cur)[0] == prev ? d.neighbors(cur)[1] : d.neighbors(cur)[0];
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.rbegin(), arms.rend());
    int p = arms[0], q = arms[1], r = arms[2];
    if (q == 1 && r == 1) return "D" + std::to_string(n);
    if (q == 2 && r == 1 && p <= 4) return "E" + std::to_string(n);
    if (p == 2 && q == 2 && r == 2) return "tildeE6";
    if (p == 3 && q == 3 && r == 1) return "tildeE7";
    if (p == 5 && q == 2 && r == 1) return "tildeE8";
    return "Y" + std::to_string(p) + std::to_string(q) + std::to_string(r);
  }
  if (branch.size() == 2 && deg[branch[0]] == 3 && deg[branch[1]] == 3) {
    auto leaves = [&](int b) {
      int c = 0;
      for (int w : d.neighbors(b))
        if (d.degree(w) == 1) ++c;
      return c;
    };
    if (leaves(branch[0]) == 2 && leaves(branch[1]) == 2) return "tildeD" + std::to_string(n - 1);
  }
  return "X" + std::to_string(n);
}

std::string component_type(const CoxeterDiagram& d, const NodeSet& subset) {
  std::map<std::string, int> counts;
  for (const auto& comp : components(d, subset)) ++counts[connected_type(induced(d, comp))];
  std::string out;
  for (const auto& [name, c] : counts) {
    if (!out.empty()) out += "+";
    if (c > 1) out += std::to_string(c);
    out += name;
  }
  return out.empty() ? "empty" : out;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

std::vector<std::string> tokens(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

}  // namespace

CoxeterDiagram parse_diagram(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::string> labels;
  std::vector<Color> colors;
  std::vector<std::pair<std::string, std::string>> edge_labels;
  bool have_nodes = false;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    auto toks = tokens(line);
    if (toks.empty()) continue;
    if (toks[0] == "nodes:") {
      have_nodes = true;
      for (std::size_t k = 1; k < toks.size(); ++k) {
        const auto& t = toks[k];
        auto colon = t.rfind(':');
        std::string label = colon == std::string::npos ? t : t.substr(0, colon);
        std::string c = colon == std::string::npos ? "-" : t.substr(colon + 1);
        if (label.empty()) throw DiagramError("empty node label");
        labels.push_back(label);
        if (c == "b")
          colors.push_back(Color::black);
        else if (c == "w")
          colors.push_back(Color::white);
        else if (c == "-")
          colors.push_back(Color::none);
        else
          throw DiagramError("bad color '" + c + "' (expected b, w or -)");
      }
    } else if (toks[0] == "edges:") {
      for (std::size_t k = 1; k < toks.size(); ++k) {
        const auto& t = toks[k];
        auto dash = t.find('-');
        if (dash == std::string::npos || dash == 0 || dash + 1 == t.size())
          throw DiagramError("bad edge '" + t + "'");
        edge_labels.emplace_back(t.substr(0, dash), t.substr(dash + 1));
      }
    } else {
      throw DiagramError("unexpected line '" + line + "'");
    }
  }
  if (!have_nodes) throw DiagramError("missing 'nodes:' line");
  CoxeterDiagram d(labels, colors);
  for (const auto& [a, b] : edge_labels) d.add_edge(d.require(a), d.require(b));
  return d;
}

std::string format_diagram(const CoxeterDiagram& d) {
  std::string out = "nodes:";
  for (int i = 0; i < d.size(); ++i) {
    Color c = d.color(i);
    out += " " + d.label(i) + ":" + (c == Color::black ? "b" : c == Color::white ? "w" : "-");
  }
  out += "\nedges:";
  for (auto [i, j] : d.edges()) out += " " + d.label(i) + "-" + d.label(j);
  out += "\n";
  return out;
}

CoxeterDiagram load_diagram_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DiagramError("cannot open diagram file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_diagram(ss.str());
}

}  // namespace hyperlat
