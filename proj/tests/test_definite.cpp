#include <doctest.h>

#include "hyperlat/definite.hpp"
#include "hyperlat/parallel.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <random>
#include <set>

using namespace hyperlat;

namespace {

CoxeterDiagram family(Family f, int n) { return build_family(DiagramType{f, n, 0, 0, 0}); }
EisensteinLattice a_lattice(int n) { return gram_from_diagram<EisensteinInt>(family(Family::A, n)); }

// Counts integer vectors c with 0 < c^T S c <= bound in a box wide enough to
// hold them all (radius from the diagonal of S^{-1}).
std::map<Integer, std::uint64_t> box_count(const Mat<Rational>& s, int bound) {
  const Index n = s.rows();
  Eigen::MatrixXd sd(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) sd(i, j) = s(i, j).convert_to<double>();
  Eigen::MatrixXd inv = sd.inverse();
  std::vector<int> radius(n);
  for (Index i = 0; i < n; ++i) radius[i] = static_cast<int>(std::floor(std::sqrt(bound * inv(i, i)) + 1e-9));
  std::map<Integer, std::uint64_t> counts;
  std::vector<int> c(n);
  for (Index i = 0; i < n; ++i) c[i] = -radius[i];
  for (;;) {
    Rational v = 0;
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) v += s(i, j) * c[i] * c[j];
    if (v > 0 && v <= bound) counts[boost::multiprecision::numerator(v)]++;
    Index k = 0;
    for (; k < n && c[k] == radius[k]; ++k) c[k] = -radius[k];
    if (k == n) break;
    ++c[k];
  }
  return counts;
}

std::complex<double> to_complex(const EisensteinInt& x) {
  return std::complex<double>(x.a.convert_to<double>(), 0) +
         x.b.convert_to<double>() * std::complex<double>(-0.5, std::sqrt(3.0) / 2);
}

bool numerically_positive_definite(const Mat<EisensteinInt>& g) {
  Eigen::MatrixXcd m(g.rows(), g.cols());
  for (Index i = 0; i < g.rows(); ++i)
    for (Index j = 0; j < g.cols(); ++j) m(i, j) = to_complex(g(i, j));
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(m).eigenvalues().minCoeff() > 1e-9;
}

}  // namespace

TEST_CASE("short vectors against box enumeration") {
  for (int n = 1; n <= 3; ++n) {
    auto l = a_lattice(n);
    RootInventory<EisensteinInt> inv = short_vectors(l, Integer(4));
    auto oracle = box_count(realify(l.gram), 4);
    CHECK(inv.count_by_norm == oracle);
    for (std::size_t k = 0; k < inv.vectors.size(); ++k) CHECK(l.norm(inv.vectors[k]) == EisensteinInt{inv.norms[k], Integer(0)});
  }
}

TEST_CASE("mirror counts of L1..L4") {
  const std::vector<std::uint64_t> mirrors = {1, 4, 12, 40};
  for (int n = 1; n <= 4; ++n) {
    auto inv = short_vectors(a_lattice(n), Integer(3), default_threads());
    CHECK(inv.mirror_count() == mirrors[n - 1]);
    CHECK(inv.count_by_norm[Integer(3)] == 6 * mirrors[n - 1]);
    CHECK(mirror_count(a_lattice(n)) == mirrors[n - 1]);
  }
  // the unit group permutes the norm-3 vectors of L2
  auto inv = short_vectors(a_lattice(2), Integer(3));
  std::set<std::string> seen;
  for (const auto& v : inv.vectors) seen.insert(to_string(v(0)) + "," + to_string(v(1)));
  for (const auto& v : inv.vectors)
    for (const auto& u : RingTraits<EisensteinInt>::units())
      CHECK(seen.count(to_string(EisensteinInt(u * v(0))) + "," + to_string(EisensteinInt(u * v(1)))) == 1);
}

TEST_CASE("Gauss short vectors") {
  auto l = gram_from_diagram<GaussInt>(family(Family::A, 2));
  auto inv = short_vectors(l, Integer(2));
  CHECK(inv.count_by_norm == box_count(realify(l.gram), 2));
}

TEST_CASE("short vectors refuse indefinite lattices") {
  CHECK_THROWS_AS(short_vectors(a_lattice(7), Integer(3)), LatticeError);
  CHECK_THROWS_AS(short_vectors(a_lattice(5), Integer(3)), LatticeError);
}

TEST_CASE("lemma expression and determinant") {
  using E = EisensteinInt;
  CHECK(lemma_expression({E(0), E(0), E(0), E(0)}) == E(3));
  CHECK(lemma_expression({E(1), E(0), E(0), E(0)}) == E(0));
  CHECK(gram_determinant(lemma_gram({E(0), E(0), E(0), E(0)})) == 27);  // det L4 = 9, times 3

  std::mt19937_64 rng(51);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int trial = 0; trial < 1000; ++trial) {
    std::array<E, 4> x;
    for (auto& c : x) c = E{Integer(d(rng)), Integer(d(rng))};
    EisensteinQ det = determinant(cast_exact<EisensteinQ>(lemma_gram(x)));
    EisensteinInt e = lemma_expression(x);
    CHECK(e.b == 0);
    CHECK(det == EisensteinQ(E(9) * e));
  }
}

TEST_CASE("rank-5 lemma sweep at norm bound 3") {
  CHECK(eisenstein_ball(Integer(3)).size() == 13);
  LemmaResult r = lemma_search(Integer(3), default_threads());
  CHECK(r.candidates == 13 * 13 * 13 * 13);
  CHECK(r.determinant_mismatches == 0);
  CHECK(r.inequality_violations == 0);
  CHECK(r.only_trivial());
  REQUIRE(r.positive_definite.size() == 1);

  // numerical oracle over the same candidates
  auto ball = eisenstein_ball(Integer(3));
  std::uint64_t numeric = 0;
  for (const auto& x : ball)
    for (const auto& y : ball)
      for (const auto& z : ball)
        for (const auto& w : ball) numeric += numerically_positive_definite(lemma_gram({x, y, z, w}));
  CHECK(numeric == 1);
}

TEST_CASE("rank-5 lemma sweep at norm bound 4 agrees") {
  LemmaResult r = lemma_search(Integer(4), default_threads());
  CHECK(r.candidates == 19ull * 19 * 19 * 19);
  CHECK(r.determinant_mismatches == 0);
  CHECK(r.only_trivial());
}

TEST_CASE("complement of the free 12-gon") {
  CoxeterDiagram d = builtin_diagram("I26");
  Quotient<EisensteinInt> q = quotient_by_radical(gram_from_diagram<EisensteinInt>(d));
  NodeSet gon = d.nodes({"a", "b1", "c1", "d1", "e1", "f1", "a3", "f2", "e2", "d2", "c2", "b2"});
  Mat<EisensteinInt> sub(q.lattice.rank(), static_cast<Index>(gon.size()));
  for (std::size_t k = 0; k < gon.size(); ++k) sub.col(k) = q.projection.col(gon[k]);
  Complement<EisensteinInt> c = ortho_complement(q.lattice, sub);
  CHECK(c.basis.cols() == 4);
  CHECK(c.signature == Signature{4, 0, 0});
  CHECK(c.positive_definite);
  CHECK(c.mirrors == 40);
  CHECK(c.determinant == invariants(a_lattice(4)).determinant);
  for (Index k = 0; k < c.basis.cols(); ++k)
    for (int v : gon) CHECK(q.lattice.inner(c.basis.col(k), q.projection.col(v)) == EisensteinInt(0));
}

TEST_CASE("complement of a degenerate sublattice is refused") {
  Mat<EisensteinInt> g(2, 2);
  g << EisensteinInt(0), EisensteinInt::theta(), conj(EisensteinInt::theta()), EisensteinInt(0);
  EisensteinLattice plane{g};
  Mat<EisensteinInt> sub(2, 1);
  sub << EisensteinInt(1), EisensteinInt(0);
  CHECK_THROWS(ortho_complement(plane, sub));
}
