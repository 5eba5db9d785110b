#include <doctest.h>

#include "hyperlat/herm.hpp"

#include <Eigen/Eigenvalues>

#include <complex>
#include <numeric>
#include <random>

using namespace hyperlat;

namespace {

using cd = std::complex<double>;

cd to_complex(const EisensteinInt& x) {
  return cd(x.a.convert_to<double>(), 0) + x.b.convert_to<double>() * cd(-0.5, std::sqrt(3.0) / 2);
}
cd to_complex(const GaussInt& x) { return cd(x.a.convert_to<double>(), x.b.convert_to<double>()); }

// Floating point oracle: eigenvalue signs of the Gram matrix and its determinant.
struct NumericForm {
  int positive = 0, negative = 0, zero = 0;
  double det = 0;
};

template <class R>
NumericForm numeric_form(const Mat<R>& g) {
  Eigen::MatrixXcd m(g.rows(), g.cols());
  for (Index i = 0; i < g.rows(); ++i)
    for (Index j = 0; j < g.cols(); ++j) m(i, j) = to_complex(g(i, j));
  REQUIRE((m - m.adjoint()).norm() < 1e-12);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
  NumericForm f;
  f.det = 1;
  for (double ev : es.eigenvalues()) {
    if (std::abs(ev) < 1e-8)
      ++f.zero;
    else
      (ev > 0 ? f.positive : f.negative)++;
    f.det *= ev;
  }
  return f;
}

CoxeterDiagram family(Family f, int n) { return build_family(DiagramType{f, n, 0, 0, 0}); }
CoxeterDiagram y_shape(int p, int q, int r) { return build_family(DiagramType{Family::Y, 0, p, q, r}); }

template <class R>
void check_against_oracle(const CoxeterDiagram& d) {
  auto l = gram_from_diagram<R>(d);
  NumericForm f = numeric_form(l.gram);
  LatticeInvariants inv = invariants(l);
  CHECK(inv.rank == d.size());
  CHECK(inv.radical_dimension == f.zero);
  CHECK(inv.signature.positive == f.positive);
  CHECK(inv.signature.negative == f.negative);
  if (f.zero == 0) CHECK(std::abs(gram_determinant(l.gram).template convert_to<double>() - f.det) < 1e-6 * std::abs(f.det));
}

}  // namespace

TEST_CASE("Gram of A2 and the bond convention") {
  auto l = gram_from_diagram<EisensteinInt>(family(Family::A, 2));
  const EisensteinInt t = EisensteinInt::theta();
  CHECK(l.gram(0, 0) == EisensteinInt(3));
  CHECK(l.gram(0, 1) == t);
  CHECK(l.gram(1, 0) == conj(t));
  CHECK(is_hermitian(l.gram));
  CHECK(gram_determinant(l.gram) == 6);
  Vec<EisensteinInt> x(2), y(2);
  x << EisensteinInt(1), EisensteinInt(0);
  y << EisensteinInt(0), EisensteinInt(1);
  CHECK(l.inner(x, y) == t);
  CHECK(l.inner(y, x) == conj(t));
  CHECK(l.norm(x + y) == EisensteinInt(6));  // 3 + 3 + theta + conj(theta)

  auto g = gram_from_diagram<GaussInt>(builtin_diagram("I14"));
  int bonds = 0;
  for (Index i = 0; i < 14; ++i) {
    CHECK(g.gram(i, i) == GaussInt(2));
    for (Index j = 0; j < 14; ++j) bonds += g.gram(i, j) == GaussInt::one_plus_i();
  }
  CHECK(bonds == 21);
}

TEST_CASE("invariants agree with a numerical eigenvalue oracle") {
  for (int n = 1; n <= 12; ++n) check_against_oracle<EisensteinInt>(family(Family::A, n));
  check_against_oracle<EisensteinInt>(family(Family::affine_A, 11));
  check_against_oracle<EisensteinInt>(family(Family::affine_A, 5));
  check_against_oracle<EisensteinInt>(y_shape(5, 5, 5));
  check_against_oracle<EisensteinInt>(y_shape(5, 4, 4));
  check_against_oracle<EisensteinInt>(builtin_diagram("I26"));
  check_against_oracle<GaussInt>(y_shape(3, 3, 3));
  check_against_oracle<GaussInt>(y_shape(3, 2, 2));
  check_against_oracle<GaussInt>(builtin_diagram("I14"));
}

TEST_CASE("invariant table") {
  auto inv = [](const CoxeterDiagram& d) { return invariants(gram_from_diagram<EisensteinInt>(d)); };
  const std::vector<std::pair<int, Index>> a_radicals = {{1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 1},  {6, 0},
                                                         {7, 0}, {8, 0}, {9, 0}, {10, 0}, {11, 1}};
  for (auto [n, rad] : a_radicals) CHECK(inv(family(Family::A, n)).radical_dimension == rad);
  CHECK(inv(family(Family::affine_A, 11)).radical_dimension == 2);
  LatticeInvariants y555 = inv(y_shape(5, 5, 5)), i26 = inv(builtin_diagram("I26"));
  CHECK(y555.radical_dimension == 2);
  CHECK(i26.radical_dimension == 12);
  CHECK(i26.signature == Signature{13, 1, 0});
  CHECK(invariants_match(i26, y555).match);
  CHECK(invariants_match(y555, inv(y_shape(5, 4, 4))).match);
  CHECK(invariants_match(inv(family(Family::affine_A, 11)), inv(family(Family::A, 10))).match);
  CHECK(inv(family(Family::A, 7)).signature == Signature{6, 1, 0});

  auto gauss = [](const CoxeterDiagram& d) { return invariants(gram_from_diagram<GaussInt>(d)); };
  CHECK(gauss(y_shape(3, 3, 3)).radical_dimension == 2);
  CHECK(gauss(builtin_diagram("I14")).radical_dimension == 6);
  CHECK(gauss(y_shape(3, 2, 2)).signature == Signature{7, 1, 0});
}

TEST_CASE("A3 and A2+A1 are told apart by the determinant") {
  auto a3 = invariants(gram_from_diagram<EisensteinInt>(family(Family::A, 3)));
  auto sum = invariants(direct_sum(gram_from_diagram<EisensteinInt>(family(Family::A, 2)),
                                   gram_from_diagram<EisensteinInt>(family(Family::A, 1))));
  CHECK(a3.signature == sum.signature);
  CHECK(a3.determinant == 9);
  CHECK(sum.determinant == 18);
  auto cmp = invariants_match(a3, sum);
  CHECK_FALSE(cmp.match);
  CHECK(cmp.mismatches.size() == 1);
}

TEST_CASE("signature is invariant under relabeling and color flips") {
  std::mt19937_64 rng(41);
  for (const char* name : {"I26", "Y555", "tildeA11"}) {
    CoxeterDiagram d = builtin_diagram(name);
    LatticeInvariants base = invariants(gram_from_diagram<EisensteinInt>(d));
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<int> perm(d.size());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      LatticeInvariants r = invariants(gram_from_diagram<EisensteinInt>(reorder(d, perm)));
      CHECK(r.signature == base.signature);
      CHECK(r.radical_dimension == base.radical_dimension);
      CHECK(r.determinant == base.determinant);
    }
    LatticeInvariants f = invariants(gram_from_diagram<EisensteinInt>(flip_colors(d)));
    CHECK(f.signature == base.signature);
    CHECK(f.radical_dimension == base.radical_dimension);
  }
}

TEST_CASE("radical and quotient of I26") {
  auto l = gram_from_diagram<EisensteinInt>(builtin_diagram("I26"));
  Radical<EisensteinInt> rad = radical(l);
  REQUIRE(rad.dimension() == 12);
  for (Index k = 0; k < rad.basis.cols(); ++k)
    for (Index i = 0; i < 26; ++i) {
      Vec<EisensteinInt> e = Vec<EisensteinInt>::Constant(26, EisensteinInt(0));
      e(i) = EisensteinInt(1);
      CHECK(l.inner(e, rad.basis.col(k)) == EisensteinInt(0));
    }
  Quotient<EisensteinInt> q = quotient_by_radical(l);
  CHECK(q.lattice.rank() == 14);
  CHECK(signature(q.lattice) == Signature{13, 1, 0});
  for (Index i = 0; i < 26; ++i) CHECK(q.lattice.norm(q.projection.col(i)) == EisensteinInt(3));
  // inner products of images equal the original ones
  for (Index i = 0; i < 26; ++i)
    for (Index j = 0; j < 26; ++j) CHECK(q.lattice.inner(q.projection.col(i), q.projection.col(j)) == l.gram(i, j));
  // lifts map to the quotient basis
  for (Index k = 0; k < 14; ++k) {
    Vec<EisensteinInt> img = multiply(q.projection, Mat<EisensteinInt>(q.lift.col(k)));
    for (Index i = 0; i < 14; ++i) CHECK(img(i) == EisensteinInt(i == k ? 1 : 0));
  }
}

TEST_CASE("realification") {
  auto l = gram_from_diagram<EisensteinInt>(family(Family::A, 4));
  Mat<Rational> s = realify(l.gram);
  CHECK(s.rows() == 8);
  CHECK(symmetric_signature(s) == Signature{8, 0, 0});
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    Vec<EisensteinInt> x(4);
    Mat<Rational> c(8, 1);
    for (Index i = 0; i < 4; ++i) {
      int a = d(rng), b = d(rng);
      x(i) = EisensteinInt{Integer(a), Integer(b)};  // a e_i + b omega e_i
      c(2 * i, 0) = a;
      c(2 * i + 1, 0) = b;
    }
    Mat<Rational> v = multiply(Mat<Rational>(c.transpose()), multiply(s, c));
    CHECK(v(0, 0) == Rational(l.norm(x).a));
  }
  Mat<Sqrt3> rg = real_gram(family(Family::A, 3));
  CHECK(rg(0, 0) == Sqrt3(3));
  CHECK(rg(0, 1) == -Sqrt3::root3());
  CHECK(rg(0, 2) == Sqrt3(0));
}

TEST_CASE("null vector identities") {
  NullIdentityReport q3 = incidence_null_identities(3);
  CHECK(q3.ok());
  CHECK(q3.real_checked);
  CHECK(q3.span_dimension == 12);
  CHECK(q3.radical_dimension == 12);
  NullIdentityReport q2 = incidence_null_identities(2);
  CHECK(q2.ok());
  CHECK(q2.span_dimension == 6);
  CHECK_THROWS_AS(incidence_null_identities(5), LatticeError);
}

TEST_CASE("reduction modulo (1+i)") {
  auto l = gram_from_diagram<GaussInt>(y_shape(3, 2, 2));
  BinaryQuadraticSpace s = reduce_mod_two(l);
  REQUIRE(s.dimension == 8);
  CHECK(s.well_defined);
  CHECK(s.polar_rank == 8);
  CHECK(s.type == QuadraticType::minus);
  // minus type in dimension 2m has (2^m + 1)(2^(m-1) - 1) nonzero singular vectors
  CHECK(s.nonzero_singular() == (16 + 1) * (8 - 1));
  // q(v) = <v, v> / 2 mod 2 for 0/1 coordinate vectors
  for (std::uint32_t v = 0; v < 256; ++v) {
    Vec<GaussInt> x(8);
    for (int k = 0; k < 8; ++k) x(k) = GaussInt((v >> k) & 1);
    GaussInt n = l.norm(x);
    REQUIRE(n.b == 0);
    CHECK(s.value(v) == static_cast<int>(((n.a / 2) % 2 + 2) % 2));
  }
  HermitianLattice<GaussInt> one{Mat<GaussInt>::Constant(1, 1, GaussInt(2))};
  BinaryQuadraticSpace r1 = reduce_mod_two(one);
  CHECK(r1.dimension == 1);
  CHECK(r1.value(1) == 1);
  CHECK(r1.type == QuadraticType::odd);
  HermitianLattice<GaussInt> odd{Mat<GaussInt>::Constant(1, 1, GaussInt(3))};
  CHECK_THROWS_AS(reduce_mod_two(odd), LatticeError);
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(gram_from_diagram<EisensteinInt>(family(Family::affine_A, 4)), LatticeError);
  CoxeterDiagram partial = family(Family::A, 3);
  partial.set_color(1, Color::black);
  CHECK_THROWS_AS(gram_from_diagram<EisensteinInt>(partial), LatticeError);
}
