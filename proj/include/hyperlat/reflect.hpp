#pragma once

// Complex reflections of order 3 (Eisenstein) and 4 (Gauss), their Artin
// relations, and finite matrix group closure.

#include "hyperlat/herm.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hyperlat {

struct ReflectionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

template <class R>
struct ReflectionRep {
  HermitianLattice<R> lattice;
  std::vector<std::string> labels;
  std::vector<Vec<R>> roots;
  std::vector<Mat<R>> generators;

  std::size_t size() const { return generators.size(); }
  const Mat<R>& generator(std::string_view label) const;
};

/// Matrix of x -> x + (zeta - 1) <x, e> / <e, e> e; column k is the image of
/// basis vector k. Throws on a wrong root norm or a non-integral coefficient.
template <class R>
Mat<R> reflection_matrix(const HermitianLattice<R>& l, const Vec<R>& root,
                         const R& zeta = RingTraits<R>::zeta());

/// Generators for every node of `d`, acting on the quotient via the projected roots.
template <class R>
ReflectionRep<R> rep_from_quotient(const Quotient<R>& q, const CoxeterDiagram& d);

/// Builds the diagram lattice, its quotient by the radical, and the representation.
template <class R>
ReflectionRep<R> rep_from_diagram(const CoxeterDiagram& d);

/// M^T G conj(M) == G
template <class R>
bool is_unitary(const Mat<R>& m, const Mat<R>& gram);

template <class R>
Mat<R> matrix_power(const Mat<R>& m, int k);

struct GeneratorCheck {
  std::string label;
  bool unitary = false;
  bool order_ok = false;  // M^k == I for k the order of zeta, M != I
};

struct RelationFailure {
  std::string a, b;
  bool bonded = false;
};

struct RelationReport {
  std::vector<GeneratorCheck> generators;
  std::size_t pairs_checked = 0;
  std::size_t braid_pairs = 0;
  std::size_t commuting_pairs = 0;
  std::vector<RelationFailure> failures;

  bool ok() const;
};

/// Braid relation aba = bab on bonded pairs, ab = ba otherwise; generator
/// orders and unitarity. Pairs are checked in parallel.
template <class R>
RelationReport verify_relations(const ReflectionRep<R>& rep, const CoxeterDiagram& d, unsigned threads = 1);

struct ClosureResult {
  std::uint64_t order = 0;  // elements found
  bool complete = false;    // false when the budget stopped the search
  int depth = 0;            // word length of the last BFS layer
};

/// Breadth-first closure of the generated matrix group. Refuses lattices that
/// are not positive definite (their unitary groups are infinite).
template <class R>
ClosureResult group_closure(const ReflectionRep<R>& rep, std::uint64_t max_elements = 2'000'000,
                            unsigned threads = 1);

struct ElementOrder {
  std::optional<std::uint64_t> order;             // least k with g^k == I
  std::optional<std::uint64_t> projective_order;  // least k with g^k a scalar unit
  std::uint64_t tried = 0;
};

/// Order of a product of generators by repeated multiplication, up to `budget` powers.
template <class R>
ElementOrder word_order(const ReflectionRep<R>& rep, const std::vector<std::string>& word, std::uint64_t budget);

/// s = a b1 c1 a b2 c2 a b3 c3
std::vector<std::string> spider_word();

}  // namespace hyperlat
