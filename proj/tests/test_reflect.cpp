#include <doctest.h>

#include "hyperlat/reflect.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

using namespace hyperlat;

namespace {

CoxeterDiagram family(Family f, int n) { return build_family(DiagramType{f, n, 0, 0, 0}); }

template <class R>
std::string key(const Mat<R>& m) {
  std::ostringstream os;
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) os << m(i, j);
  return os.str();
}

// Closure by plain BFS over string keys, no hashing or threads.
template <class R>
std::size_t naive_order(const std::vector<Mat<R>>& gens) {
  const Index n = gens.front().rows();
  std::set<std::string> seen{key(identity<R>(n))};
  std::deque<Mat<R>> queue{identity<R>(n)};
  while (!queue.empty()) {
    Mat<R> g = queue.front();
    queue.pop_front();
    for (const auto& s : gens) {
      Mat<R> h = multiply(g, s);
      if (seen.insert(key(h)).second) queue.push_back(h);
    }
  }
  return seen.size();
}

// x -> x + (zeta - 1) <x, e> / <e, e> e in the fraction field.
template <class R>
Mat<typename RingTraits<R>::Field> field_reflection(const HermitianLattice<R>& l, const Vec<R>& e) {
  using F = typename RingTraits<R>::Field;
  const Index n = l.rank();
  Mat<F> g = cast_exact<F>(l.gram);
  Vec<F> ef(n);
  for (Index i = 0; i < n; ++i) ef(i) = F(e(i));
  auto inner = [&](const Vec<F>& x, const Vec<F>& y) {
    F s(0);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) s += x(i) * g(i, j) * conj(y(j));
    return s;
  };
  F c = (F(RingTraits<R>::zeta()) - F(1)) / inner(ef, ef);
  Mat<F> m(n, n);
  for (Index k = 0; k < n; ++k) {
    Vec<F> x = Vec<F>::Constant(n, F(0));
    x(k) = F(1);
    F coeff = c * inner(x, ef);
    for (Index i = 0; i < n; ++i) m(i, k) = x(i) + coeff * ef(i);
  }
  return m;
}

template <class R>
void check_generators(const ReflectionRep<R>& rep) {
  const int order = RingTraits<R>::reflection_order;
  const Index n = rep.lattice.rank();
  for (std::size_t k = 0; k < rep.size(); ++k) {
    const Mat<R>& m = rep.generators[k];
    CHECK(is_unitary(m, rep.lattice.gram));
    CHECK(matrix_power(m, order) == identity<R>(n));
    CHECK(m != identity<R>(n));
    CHECK(cast_exact<typename RingTraits<R>::Field>(m) == field_reflection(rep.lattice, rep.roots[k]));
    // the root is scaled by zeta
    Vec<R> image = multiply(m, Mat<R>(rep.roots[k]));
    for (Index i = 0; i < n; ++i) CHECK(image(i) == RingTraits<R>::zeta() * rep.roots[k](i));
  }
}

template <class R>
void check_relations_directly(const ReflectionRep<R>& rep, const CoxeterDiagram& d) {
  for (int i = 0; i < d.size(); ++i)
    for (int j = i + 1; j < d.size(); ++j) {
      const Mat<R>& a = rep.generator(d.label(i));
      const Mat<R>& b = rep.generator(d.label(j));
      if (d.adjacent(i, j))
        CHECK(multiply(multiply(a, b), a) == multiply(multiply(b, a), b));
      else
        CHECK(multiply(a, b) == multiply(b, a));
    }
}

}  // namespace

TEST_CASE("A2 generators") {
  auto rep = rep_from_diagram<EisensteinInt>(family(Family::A, 2));
  REQUIRE(rep.size() == 2);
  check_generators(rep);
  const EisensteinInt w = EisensteinInt::omega();
  // first generator: e1 -> w e1, e2 -> e2 + (w - 1) <e2, e1> / 3 e1
  const Mat<EisensteinInt>& r1 = rep.generators[0];
  CHECK(r1(0, 0) == w);
  CHECK(r1(1, 0) == EisensteinInt(0));
  CHECK(r1(1, 1) == EisensteinInt(1));
  CHECK(r1(0, 1) == *exact_div((w - EisensteinInt(1)) * conj(EisensteinInt::theta()), EisensteinInt(3)));
}

TEST_CASE("reflection_matrix rejects non-roots") {
  auto l = gram_from_diagram<EisensteinInt>(family(Family::A, 2));
  Vec<EisensteinInt> v(2);
  v << EisensteinInt(1), EisensteinInt(1);  // norm 6
  CHECK_THROWS_AS(reflection_matrix(l, v), ReflectionError);
}

TEST_CASE("Allcock representation on the I26 quotient") {
  CoxeterDiagram d = builtin_diagram("I26");
  auto rep = rep_from_diagram<EisensteinInt>(d);
  REQUIRE(rep.size() == 26);
  CHECK(rep.lattice.rank() == 14);
  check_generators(rep);
  RelationReport r = verify_relations(rep, d, 2);
  CHECK(r.ok());
  CHECK(r.pairs_checked == 325);
  CHECK(r.braid_pairs == 52);
  CHECK(r.commuting_pairs == 273);
  check_relations_directly(rep, d);
}

TEST_CASE("tildeA11 and Gauss Y322 relations") {
  CoxeterDiagram c = builtin_diagram("tildeA11");
  auto rep = rep_from_diagram<EisensteinInt>(c);
  CHECK(rep.lattice.rank() == 10);
  check_generators(rep);
  RelationReport r = verify_relations(rep, c);
  CHECK(r.ok());
  CHECK(r.pairs_checked == 66);
  CHECK(r.braid_pairs == 12);

  CoxeterDiagram y = build_family(DiagramType{Family::Y, 0, 3, 2, 2});
  auto g = rep_from_diagram<GaussInt>(y);
  REQUIRE(g.size() == 8);
  check_generators(g);
  RelationReport rg = verify_relations(g, y);
  CHECK(rg.ok());
  CHECK(rg.pairs_checked == 28);
  CHECK(rg.braid_pairs == 7);
  check_relations_directly(g, y);
}

TEST_CASE("finite closure orders") {
  auto a2 = rep_from_diagram<EisensteinInt>(family(Family::A, 2));
  auto a3 = rep_from_diagram<EisensteinInt>(family(Family::A, 3));
  ClosureResult c2 = group_closure(a2), c3 = group_closure(a3);
  CHECK(c2.complete);
  CHECK(c2.order == 24);
  CHECK(c3.order == 648);
  CHECK(naive_order(a2.generators) == 24);
  CHECK(naive_order(a3.generators) == 648);
  CHECK(group_closure(rep_from_diagram<EisensteinInt>(family(Family::A, 1))).order == 3);

  // generator order and thread count do not matter
  ReflectionRep<EisensteinInt> rev = a3;
  std::reverse(rev.generators.begin(), rev.generators.end());
  CHECK(group_closure(rev).order == 648);
  CHECK(group_closure(a3, 2'000'000, 2).order == 648);
  CHECK(group_closure(rev, 2'000'000, 3).order == 648);

  ClosureResult partial = group_closure(a3, 100);
  CHECK_FALSE(partial.complete);
  CHECK(partial.order <= 648);
}

TEST_CASE("closure of the L4 group") {
  auto a4 = rep_from_diagram<EisensteinInt>(family(Family::A, 4));
  ClosureResult c = group_closure(a4, 2'000'000, 2);
  CHECK(c.complete);
  CHECK(c.order == 155520);
  CHECK(c.order == 12 * 18 * 24 * 30);
}

TEST_CASE("closure refuses indefinite lattices") {
  auto a7 = rep_from_diagram<EisensteinInt>(family(Family::A, 7));
  CHECK_THROWS(group_closure(a7, 1000));
}

TEST_CASE("word orders") {
  auto a2 = rep_from_diagram<EisensteinInt>(family(Family::A, 2));
  ElementOrder single = word_order(a2, {"1"}, 100);
  REQUIRE(single.order.has_value());
  CHECK(*single.order == 3);
  // a b against direct powering
  ElementOrder cox = word_order(a2, {"1", "2"}, 100);
  REQUIRE(cox.order.has_value());
  Mat<EisensteinInt> g = multiply(a2.generators[0], a2.generators[1]);
  std::uint64_t k = 1;
  for (Mat<EisensteinInt> p = g; p != identity<EisensteinInt>(2); p = multiply(p, g)) ++k;
  CHECK(*cox.order == k);
  CHECK(spider_word().size() == 9);
}
