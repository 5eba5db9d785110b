#pragma once

// Real Lorentzian forms over Q(sqrt3) attached to diagrams, subset
// classification, Vinberg's finite-volume criterion, cusps and Weyl points.

#include "hyperlat/herm.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hyperlat {

struct PolytopeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Span V of vectors e_i with <e_i, e_i> = 3 and <e_j, e_k> = -sqrt3 on bonds.
struct RealQuadSpace {
  CoxeterDiagram diagram;
  Mat<Sqrt3> gram;            // n x n Gram of the generators e_i
  std::vector<Index> basis;   // generators used as a basis of V
  Mat<Sqrt3> coords;          // dim x n, column i = e_i in basis coordinates
  Mat<Sqrt3> form;            // dim x dim Gram on the basis
  Signature signature;

  Index dim() const { return form.rows(); }
  Index size() const { return gram.rows(); }
  Vec<Sqrt3> e(Index i) const { return coords.col(i); }
  Sqrt3 inner(const Vec<Sqrt3>& x, const Vec<Sqrt3>& y) const;
  Tower inner(const Vec<Tower>& x, const Vec<Tower>& y) const;
  bool lorentzian() const { return signature.negative == 1 && signature.zero == 0; }
};

/// Throws PolytopeError when the diagram is not bipartite.
RealQuadSpace real_form(const CoxeterDiagram& d);

enum class SubsetKind { elliptic, parabolic, hyperbolic };
std::string to_string(SubsetKind k);

struct SubsetClass {
  NodeSet nodes;
  SubsetKind kind = SubsetKind::elliptic;
  std::string type;                          // component type, e.g. "2A5"
  std::vector<NodeSet> components;
  std::vector<SubsetKind> component_kinds;
  Index gram_rank = 0;
};

SubsetKind classify_gram(const Mat<Sqrt3>& g);
SubsetClass classify_subset(const RealQuadSpace& s, const NodeSet& j);

/// Minimal non-elliptic subsets, found by growing connected elliptic subsets
/// one neighbor at a time. No size cap is needed: deleting a leaf of a
/// spanning tree of a critical set leaves a connected elliptic set.
std::vector<SubsetClass> critical_subsets(const RealQuadSpace& s);

/// Independent check: minimal non-elliptic subsets of size <= max_size by
/// level-wise enumeration of all (not necessarily connected) elliptic sets.
std::vector<NodeSet> critical_subsets_bruteforce(const RealQuadSpace& s, int max_size);

struct CriticalEntry {
  SubsetClass subset;
  NodeSet z;  // Z(J)
  NodeSet n;  // N(J) = J + Z(J)
  std::string n_type;
  std::vector<SubsetKind> n_component_kinds;
  Index n_rank = 0;
  bool components_parabolic = false;
  bool rank_ok = false;

  bool ok() const { return subset.kind == SubsetKind::parabolic && components_parabolic && rank_ok; }
};

struct IdealVertex {
  NodeSet n;
  std::string type;
  Vec<Sqrt3> ray;                   // basis coordinates, first nonzero entry 1
  bool kernels_proportional = false;
  bool perron_positive = false;     // component kernels have positive coordinates
  bool isotropic = false;
  int orbit = -1;
};

struct WeylData {
  std::string method;          // "sum" or "points-lines"
  Vec<Tower> w0;               // basis coordinates
  std::optional<Vec<Sqrt3>> w_points, w_lines;
  Sqrt3 r_points, r_lines;     // -<w_P, w_P>, -<w_L, w_L>
  bool tower = false;          // sqrt(r_P r_L) was adjoined
  Tower norm;                  // <w0, w0>
  std::vector<Tower> pairings; // <w0, e_i>
  std::vector<Tower> sinh2;    // <w0, e_i>^2 / (3 (-<w0, w0>))
  bool equidistant = false;
};

struct PolytopeCertificate {
  Index dim = 0;
  Signature signature;
  std::vector<CriticalEntry> critical;
  bool verdict = false;
  std::vector<std::string> failures;  // reasons when the verdict is false
  std::vector<IdealVertex> ideal_vertices;
  int orbit_count = 0;
};

/// Vinberg's criterion with per-component parabolicity of N(J) and
/// rank G_{N(J)} == dim - 2. Ideal vertices are filled in when the verdict
/// holds. Throws unless the space is Lorentzian.
PolytopeCertificate vinberg_check(const RealQuadSpace& s, bool with_vertices = true);

/// Cusps from a certificate, deduplicated by N(J), with orbit labels under
/// all diagram automorphisms.
std::vector<IdealVertex> ideal_vertices(const RealQuadSpace& s, const PolytopeCertificate& cert);

/// "sum": w0 = sum e_i. "points-lines": w_P orthogonal to all black e_p,
/// w_L to all white e_l, w0 their normalized midpoint.
WeylData weyl_points(const RealQuadSpace& s, const std::string& method);

/// Orthogonal projection of v onto the complement of span{e_j : j in J};
/// throws unless J is elliptic.
Vec<Tower> face_project(const RealQuadSpace& s, const NodeSet& j, const Vec<Tower>& v);

/// <w, e_i>^2 / (<e_i, e_i> (-<w, w>))
Tower sinh2_distance(const RealQuadSpace& s, const Vec<Tower>& w, Index i);

Vec<Tower> to_tower(const Vec<Sqrt3>& v);

}  // namespace hyperlat
