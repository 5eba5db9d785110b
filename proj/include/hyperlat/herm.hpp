#pragma once

// Hermitian lattices over Z[omega] and Z[i] built from bipartite Coxeter
// diagrams: radicals, quotients, exact signatures and determinants.
//
// Vectors are coordinate columns in the lattice basis and the form is
// <x, y> = x^T G conj(y).

#include "hyperlat/diagram.hpp"
#include "hyperlat/matrix.hpp"

#include <string>
#include <vector>

namespace hyperlat {

struct LatticeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

template <class R>
struct HermitianLattice {
  Mat<R> gram;

  Index rank() const { return gram.rows(); }
  R inner(const Vec<R>& x, const Vec<R>& y) const;
  R norm(const Vec<R>& x) const { return inner(x, x); }
};

using EisensteinLattice = HermitianLattice<EisensteinInt>;
using GaussLattice = HermitianLattice<GaussInt>;

/// Diagonal root_norm (3 resp. 2); bond() on black -> white edges and its
/// conjugate on white -> black. Throws unless the coloring is proper.
template <class R>
HermitianLattice<R> gram_from_diagram(const CoxeterDiagram& d);

/// Orthogonal sum.
template <class R>
HermitianLattice<R> direct_sum(const HermitianLattice<R>& a, const HermitianLattice<R>& b);

template <class R>
bool is_hermitian(const Mat<R>& g);

template <class R>
struct Radical {
  Mat<R> basis;  // columns; saturated (a basis of the radical as a module)
  Index dimension() const { return basis.cols(); }
};

template <class R>
Radical<R> radical(const HermitianLattice<R>& l);

template <class R>
struct Quotient {
  HermitianLattice<R> lattice;  // nondegenerate
  /// Column i holds the coordinates of the image of basis vector i.
  Mat<R> projection;
  /// Columns: lattice vectors (original coordinates) mapping to the quotient basis.
  Mat<R> lift;
  /// Original indices used as quotient basis when the greedy choice generates
  /// the whole quotient module; empty when a Hermite basis was needed.
  std::vector<Index> basis_nodes;
};

template <class R>
Quotient<R> quotient_by_radical(const HermitianLattice<R>& l);

/// Realification: the symmetric rational form Re<x, y> on the basis
/// {e_1, zeta e_1, e_2, zeta e_2, ...}. For integer coordinate vectors c the
/// value c^T S c is the norm of the corresponding lattice vector.
template <class R>
Mat<Rational> realify(const Mat<R>& gram);

/// Complex signature (halved signature of the realification).
template <class R>
Signature signature(const HermitianLattice<R>& l);

/// Determinant of a Hermitian Gram matrix; a rational integer, invariant
/// under change of basis by any unimodular matrix.
template <class R>
Integer gram_determinant(const Mat<R>& gram);

struct LatticeInvariants {
  Index rank = 0;
  Index radical_dimension = 0;
  Signature signature;  // of the nondegenerate quotient
  Integer determinant;  // of the quotient Gram
};

template <class R>
LatticeInvariants invariants(const HermitianLattice<R>& l);

struct InvariantComparison {
  bool match = true;
  std::vector<std::string> mismatches;
};

/// Compares the quotient invariants (rank, signature, determinant); the
/// radical dimension is compared too when `compare_radical` is set.
InvariantComparison invariants_match(const LatticeInvariants& a, const LatticeInvariants& b,
                                     bool compare_radical = false);

/// Real Gram matrix over Q(sqrt3): 3 on the diagonal, -sqrt3 per edge.
Mat<Sqrt3> real_gram(const CoxeterDiagram& d);

// ---------------------------------------------------------------------------
// Null vectors of incidence lattices

struct NullIdentityReport {
  int q = 0;
  /// <delta_l, eps_p> == 0 for all points p (count of failures)
  int point_failures = 0;
  /// <delta_l, eps_m> == bond for all lines m
  int line_failures = 0;
  /// real form, q == 3 only: <d_l, e_p> == 0 and <d_l, e_m> == -sqrt3
  bool real_checked = false;
  int real_point_failures = 0;
  int real_line_failures = 0;
  /// differences delta_l - delta_m: all in the radical, and span dimension
  bool differences_in_radical = false;
  Index span_dimension = 0;
  Index radical_dimension = 0;

  bool ok() const {
    return point_failures == 0 && line_failures == 0 && real_point_failures == 0 &&
           real_line_failures == 0 && differences_in_radical && span_dimension == radical_dimension;
  }
};

/// q == 3 over Z[omega] with delta_l = -theta eps_l + sum_{p ~ l} eps_p;
/// q == 2 over Z[i] with delta_l = -(1+i) eps_l + sum_{p ~ l} eps_p.
NullIdentityReport incidence_null_identities(int q);

// ---------------------------------------------------------------------------
// Reduction of a Gauss lattice modulo (1+i)

enum class QuadraticType { plus, minus, odd, degenerate };

std::string to_string(QuadraticType t);

struct BinaryQuadraticSpace {
  int dimension = 0;
  /// q of the vector with coordinate bits of the index (bit k = coordinate k)
  std::vector<std::uint8_t> q;
  bool well_defined = false;
  /// rank of the polar form b(x,y) = q(x+y) + q(x) + q(y) over F_2
  int polar_rank = 0;
  std::uint64_t zeros = 0;  // including the zero vector
  QuadraticType type = QuadraticType::degenerate;
  /// per generator: reduced F_2 matrix preserves q
  std::vector<bool> generator_preserves;
  /// reduced generator matrices; column k is the image of basis vector k as a bit mask
  std::vector<std::vector<std::uint32_t>> generator_images;

  std::uint64_t nonzero_singular() const { return zeros - 1; }
  int value(std::uint32_t v) const { return q[v]; }
};

/// Requires even diagonal and dimension <= 20.
BinaryQuadraticSpace reduce_mod_two(const GaussLattice& l, const std::vector<Mat<GaussInt>>& generators = {});

}  // namespace hyperlat
