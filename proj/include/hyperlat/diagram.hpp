#pragma once

// Simply laced Coxeter diagrams: standard families, point/line incidence
// graphs of finite projective planes, induced subdiagrams, Z(J) complements,
// induced-pattern search and automorphism counting.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hyperlat {

enum class Color { none, black, white };

using NodeSet = std::vector<int>;  // sorted node indices

struct DiagramError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class CoxeterDiagram {
 public:
  CoxeterDiagram() = default;
  explicit CoxeterDiagram(std::vector<std::string> labels, std::vector<Color> colors = {});

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  Color color(int i) const { return colors_[i]; }

  bool adjacent(int i, int j) const { return adj_[i][j] != 0; }
  const std::vector<int>& neighbors(int i) const { return nbrs_[i]; }
  int degree(int i) const { return static_cast<int>(nbrs_[i].size()); }
  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;

  void add_edge(int i, int j);
  void set_color(int i, Color c) { colors_[i] = c; }

  std::optional<int> index_of(std::string_view label) const;
  int require(std::string_view label) const;
  NodeSet nodes(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(const NodeSet& nodes) const;

  /// Every node is colored and every bond joins black to white.
  bool is_properly_colored() const;
  bool has_coloring() const;

 private:
  std::vector<std::string> labels_;
  std::vector<Color> colors_;
  std::vector<std::vector<char>> adj_;
  std::vector<std::vector<int>> nbrs_;
};

// ---------------------------------------------------------------------------
// Families

enum class Family { A, affine_A, D, affine_D, E, affine_E, Y };

struct DiagramType {
  Family family = Family::A;
  int n = 0;                  // rank parameter for A, D, E and the affine types
  int p = 0, q = 0, r = 0;    // arm lengths for Y
};

/// 1/(p+1) + 1/(q+1) + 1/(r+1) > 1
bool is_finite_type(int p, int q, int r);
/// 1/(p+1) + 1/(q+1) + 1/(r+1) == 1
bool is_affine_type(int p, int q, int r);

/// Trees and even cycles come 2-colored (A_n: odd labels black; cycles and
/// Y_pqr: node 0 black); odd cycles are uncolored.
CoxeterDiagram build_family(const DiagramType& type);

/// Incidence graph of the projective plane over the prime field F_q.
/// Points (black) are labeled "p<xyz>", lines (white) "l<xyz>", by normalized
/// homogeneous coordinates.
CoxeterDiagram build_incidence(int q);

/// Named diagrams: "A5", "tildeA11", "D4", "tildeD5", "E8", "tildeE6",
/// "Y555", "I26", "I14". I26 and I14 carry the figure labels (a, b1, ...).
CoxeterDiagram builtin_diagram(std::string_view name);
std::vector<std::string> builtin_names();

/// Homogeneous coordinates of the named I26/I14 nodes in the fixed
/// correspondence with P^2(3)/P^2(2).
struct NamedIncidenceNode {
  const char* label;
  bool point;
  int x, y, z;
};
const std::vector<NamedIncidenceNode>& i26_correspondence();
const std::vector<NamedIncidenceNode>& i14_correspondence();

// ---------------------------------------------------------------------------
// Subdiagrams and search

CoxeterDiagram induced(const CoxeterDiagram& d, const NodeSet& subset);
CoxeterDiagram induced(const CoxeterDiagram& d, const std::vector<std::string>& labels);
/// Same diagram with nodes listed in `order` (a permutation).
CoxeterDiagram reorder(const CoxeterDiagram& d, const std::vector<int>& order);
CoxeterDiagram flip_colors(const CoxeterDiagram& d);

/// Nodes neither in J nor adjacent to J.
NodeSet zperp(const CoxeterDiagram& d, const NodeSet& j);

std::vector<NodeSet> components(const CoxeterDiagram& d);
std::vector<NodeSet> components(const CoxeterDiagram& d, const NodeSet& subset);
bool is_connected(const CoxeterDiagram& d, const NodeSet& subset);

struct InducedSearch {
  /// One node map per induced subdiagram (pattern node k -> haystack node),
  /// the lexicographically least among maps with the same image; sorted.
  std::vector<std::vector<int>> embeddings;
  bool complete = true;
  std::uint64_t nodes_visited = 0;
};

InducedSearch find_induced(const CoxeterDiagram& haystack, const CoxeterDiagram& pattern,
                           std::uint64_t budget = 50'000'000);

/// Induced cycles of the given length by plain path extension from their
/// least node; independent of find_induced.
std::uint64_t count_induced_cycles(const CoxeterDiagram& d, int length);

bool isomorphic(const CoxeterDiagram& a, const CoxeterDiagram& b);

std::uint64_t automorphism_count(const CoxeterDiagram& d, bool respect_colors);
/// All automorphisms as permutations (image of node i at position i).
std::vector<std::vector<int>> automorphisms(const CoxeterDiagram& d, bool respect_colors);

/// Type name of a connected diagram ("A5", "D4", "E6", "tildeA11",
/// "tildeD5", "tildeE6", "Y555", or "X<n>" when not recognized).
std::string connected_type(const CoxeterDiagram& d);
/// Component types grouped, e.g. "3A5", "A2+A2+A4" sorted by name.
std::string component_type(const CoxeterDiagram& d, const NodeSet& subset);

// ---------------------------------------------------------------------------
// Text format
//
//   nodes: a:b b1:w x:-
//   edges: a-b1 b1-x

CoxeterDiagram parse_diagram(std::string_view text);
std::string format_diagram(const CoxeterDiagram& d);
CoxeterDiagram load_diagram_file(const std::string& path);

}  // namespace hyperlat
