#pragma once

// Positive definite Hermitian lattices: exact short-vector enumeration,
// mirror counts, the rank-5 extension lemma sweep and orthogonal complements.

#include "hyperlat/herm.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <vector>

namespace hyperlat {

template <class R>
struct RootInventory {
  Integer bound;
  /// All v with 0 < <v,v> <= bound, sorted by norm then coordinates.
  std::vector<Vec<R>> vectors;
  std::vector<Integer> norms;
  std::map<Integer, std::uint64_t> count_by_norm;

  /// Lines of root-norm vectors (vectors modulo the unit group).
  std::uint64_t mirror_count() const;
};

/// Exact enumeration on the realified integer quadratic form: rational LDL^T
/// with every candidate coordinate range confirmed in exact arithmetic.
/// Throws LatticeError unless the lattice is positive definite.
template <class R>
RootInventory<R> short_vectors(const HermitianLattice<R>& l, const Integer& bound, unsigned threads = 1);

template <class R>
std::uint64_t mirror_count(const HermitianLattice<R>& l);

// ---------------------------------------------------------------------------
// Rank-5 extension lemma

/// Gram of the L^4 chain with <eps_i, eps_{i+1}> = theta, extended by eps_5
/// with <eps_i, eps_5> = x_i theta and <eps_5, eps_5> = 3.
Mat<EisensteinInt> lemma_gram(const std::array<EisensteinInt, 4>& xyzw);

/// 3 - x x' - w w' - 2 a a' - 2 b b' - theta a b' + theta b a' with
/// a = y theta - x, b = z theta + w (primes denote conjugates).
EisensteinInt lemma_expression(const std::array<EisensteinInt, 4>& xyzw);

/// Eisenstein integers of norm <= bound.
std::vector<EisensteinInt> eisenstein_ball(const Integer& bound);

struct LemmaResult {
  Integer bound;
  std::uint64_t candidates = 0;
  std::vector<std::array<EisensteinInt, 4>> positive_definite;
  /// candidates where det(G) != 9 * expression
  std::uint64_t determinant_mismatches = 0;
  /// positive definite candidates violating one of the four bounds x x' <= 1,
  /// w w' <= 1, |a - b omega|^2 <= 1, |a + b omega|^2 <= 1
  std::uint64_t inequality_violations = 0;

  bool only_trivial() const;
};

LemmaResult lemma_search(const Integer& bound = 3, unsigned threads = 1);

// ---------------------------------------------------------------------------
// Orthogonal complements

template <class R>
struct Complement {
  Mat<R> basis;  // columns in ambient coordinates, saturated
  HermitianLattice<R> lattice;
  Signature signature;
  bool positive_definite = false;
  Integer determinant;
  std::uint64_t mirrors = 0;  // only when positive definite
};

/// Orthogonal complement of the span of `sub` (columns) inside `ambient`.
/// Throws when the sublattice is degenerate.
template <class R>
Complement<R> ortho_complement(const HermitianLattice<R>& ambient, const Mat<R>& sub);

}  // namespace hyperlat
