#include "hyperlat/definite.hpp"

#include "hyperlat/parallel.hpp"

#include <algorithm>
#include <cmath>

namespace hyperlat {

template <class R>
std::uint64_t RootInventory<R>::mirror_count() const {
  auto it = count_by_norm.find(RingTraits<R>::root_norm());
  if (it == count_by_norm.end()) return 0;
  return it->second / RingTraits<R>::unit_count;
}

namespace {

// Fincke-Pohst coefficients: Q(c) = sum_i q(i,i) (c_i + sum_{j>i} q(i,j) c_j)^2
Mat<Rational> pohst_form(const Mat<Rational>& a) {
  const Index m = a.rows();
  Mat<Rational> q = a;
  for (Index i = 0; i < m; ++i) {
    if (sign(q(i, i)) <= 0) throw LatticeError("short vectors need a positive definite lattice");
    for (Index j = i + 1; j < m; ++j) {
      q(j, i) = q(i, j);
      q(i, j) = q(i, j) / q(i, i);
    }
    for (Index k = i + 1; k < m; ++k)
      for (Index l = k; l < m; ++l) q(k, l) -= q(k, i) * q(i, l);
  }
  return q;
}

struct Enumerator {
  const Mat<Rational>& q;
  Index m;
  std::vector<Integer> c;
  std::vector<std::pair<std::vector<Integer>, Rational>> found;  // coordinates, remaining budget

  void range(Index i, const Rational& budget, Rational& center, Integer& lo, Integer& hi) const {
    center = 0;
    for (Index j = i + 1; j < m; ++j)
      if (c[j] != 0) center -= q(i, j) * c[j];
    double r = std::sqrt(std::max(0.0, (budget / q(i, i)).convert_to<double>()));
    double u = center.convert_to<double>();
    lo = Integer(static_cast<long long>(std::floor(u - r))) - 1;
    hi = Integer(static_cast<long long>(std::ceil(u + r))) + 1;
  }

  void recurse(Index i, const Rational& budget) {
    Rational center;
    Integer lo, hi;
    range(i, budget, center, lo, hi);
    for (Integer x = lo; x <= hi; ++x) {
      Rational t = Rational(x) - center;
      Rational rest = budget - q(i, i) * t * t;
      if (sign(rest) < 0) continue;
      c[i] = x;
      if (i == 0)
        found.emplace_back(c, rest);
      else
        recurse(i - 1, rest);
    }
    c[i] = 0;
  }
};

template <class R>
bool coordinate_less(const Vec<R>& x, const Vec<R>& y) {
  for (Index k = 0; k < x.size(); ++k) {
    if (x(k).a != y(k).a) return x(k).a < y(k).a;
    if (x(k).b != y(k).b) return x(k).b < y(k).b;
  }
  return false;
}

}  // namespace

template <class R>
RootInventory<R> short_vectors(const HermitianLattice<R>& l, const Integer& bound, unsigned threads) {
  if (bound < 1) throw LatticeError("short vector bound must be at least 1");
  RootInventory<R> inv;
  inv.bound = bound;
  const Index n = l.rank();
  if (n == 0) return inv;
  Mat<Rational> q = pohst_form(realify(l.gram));
  const Index m = 2 * n;

  // split on the last coordinate for parallelism
  Enumerator top{q, m, std::vector<Integer>(m, 0), {}};
  Rational center;
  Integer lo, hi;
  top.range(m - 1, Rational(bound), center, lo, hi);
  std::vector<Integer> tops;
  for (Integer x = lo; x <= hi; ++x) tops.push_back(x);
  std::vector<std::vector<std::pair<std::vector<Integer>, Rational>>> parts(tops.size());
  parallel_for(tops.size(), threads, [&](std::size_t k) {
    Rational t = Rational(tops[k]) - center;
    Rational rest = Rational(bound) - q(m - 1, m - 1) * t * t;
    if (sign(rest) < 0) return;
    Enumerator e{q, m, std::vector<Integer>(m, 0), {}};
    e.c[m - 1] = tops[k];
    if (m == 1)
      e.found.emplace_back(e.c, rest);
    else
      e.recurse(m - 2, rest);
    parts[k] = std::move(e.found);
  });

  std::vector<std::pair<Integer, Vec<R>>> all;
  for (auto& part : parts)
    for (auto& [coords, rest] : part) {
      Rational nr = Rational(bound) - rest;
      if (sign(nr) == 0) continue;  // the zero vector
      Vec<R> v(n);
      for (Index j = 0; j < n; ++j) v(j) = R(coords[2 * j], coords[2 * j + 1]);
      Integer ni = boost::multiprecision::numerator(nr);
      if (boost::multiprecision::denominator(nr) != 1 || R(ni, Integer(0)) != l.norm(v))
        throw std::logic_error("short vector norm bookkeeping mismatch");
      all.emplace_back(ni, std::move(v));
    }
  std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first < y.first;
    return coordinate_less(x.second, y.second);
  });
  for (auto& [nr, v] : all) {
    ++inv.count_by_norm[nr];
    inv.norms.push_back(nr);
    inv.vectors.push_back(std::move(v));
  }
  return inv;
}

template <class R>
std::uint64_t mirror_count(const HermitianLattice<R>& l) {
  return short_vectors(l, RingTraits<R>::root_norm()).mirror_count();
}

// ---------------------------------------------------------------------------

Mat<EisensteinInt> lemma_gram(const std::array<EisensteinInt, 4>& v) {
  const EisensteinInt theta = EisensteinInt::theta();
  Mat<EisensteinInt> g = zeros<EisensteinInt>(5, 5);
  for (int i = 0; i < 5; ++i) g(i, i) = EisensteinInt(3);
  for (int i = 0; i < 3; ++i) {
    g(i, i + 1) = theta;
    g(i + 1, i) = conj(theta);
  }
  for (int i = 0; i < 4; ++i) {
    g(i, 4) = v[i] * theta;
    g(4, i) = conj(g(i, 4));
  }
  return g;
}

EisensteinInt lemma_expression(const std::array<EisensteinInt, 4>& v) {
  const EisensteinInt theta = EisensteinInt::theta();
  const auto& [x, y, z, w] = v;
  EisensteinInt a = y * theta - x;
  EisensteinInt b = z * theta + w;
  return EisensteinInt(3) - x * conj(x) - w * conj(w) - EisensteinInt(2) * a * conj(a) -
         EisensteinInt(2) * b * conj(b) - theta * a * conj(b) + theta * b * conj(a);
}

std::vector<EisensteinInt> eisenstein_ball(const Integer& bound) {
  // norm >= 3/4 max(a,b)^2 bounds both coordinates
  long r = static_cast<long>(std::ceil(std::sqrt(4.0 * bound.convert_to<double>() / 3.0))) + 1;
  std::vector<EisensteinInt> out;
  for (long a = -r; a <= r; ++a)
    for (long b = -r; b <= r; ++b) {
      EisensteinInt x{Integer(a), Integer(b)};
      if (norm(x) <= bound) out.push_back(x);
    }
  return out;
}

bool LemmaResult::only_trivial() const {
  return positive_definite.size() == 1 &&
         std::all_of(positive_definite[0].begin(), positive_definite[0].end(),
                     [](const EisensteinInt& x) { return x == EisensteinInt(0); }) &&
         determinant_mismatches == 0 && inequality_violations == 0;
}

namespace {

// Hermitian positive definiteness by leading principal minors.
bool positive_definite_minors(const Mat<EisensteinInt>& g) {
  for (Index k = 1; k <= g.rows(); ++k) {
    EisensteinQ d = determinant(cast_exact<EisensteinQ>(Mat<EisensteinInt>(g.topLeftCorner(k, k))));
    if (d.b != 0) throw std::logic_error("non-real Hermitian minor");
    if (sign(d.a) <= 0) return false;
  }
  return true;
}

}  // namespace

LemmaResult lemma_search(const Integer& bound, unsigned threads) {
  LemmaResult res;
  res.bound = bound;
  const std::vector<EisensteinInt> ball = eisenstein_ball(bound);
  const std::size_t b = ball.size();
  res.candidates = static_cast<std::uint64_t>(b * b * b * b);
  const EisensteinInt theta = EisensteinInt::theta();
  const EisensteinInt omega = EisensteinInt::omega();

  // one slot per leading coordinate x
  struct Slot {
    std::vector<std::array<EisensteinInt, 4>> pd;
    std::uint64_t mismatches = 0, violations = 0;
  };
  std::vector<Slot> slots(b);
  parallel_for(b, threads, [&](std::size_t ix) {
    Slot& s = slots[ix];
    for (const auto& y : ball)
      for (const auto& z : ball)
        for (const auto& w : ball) {
          std::array<EisensteinInt, 4> v{ball[ix], y, z, w};
          Mat<EisensteinInt> g = lemma_gram(v);
          EisensteinQ det = determinant(cast_exact<EisensteinQ>(g));
          EisensteinInt e = lemma_expression(v);
          if (det != EisensteinQ(EisensteinInt(EisensteinInt(9) * e))) ++s.mismatches;
          if (!positive_definite_minors(g)) continue;
          s.pd.push_back(v);
          EisensteinInt a = y * theta - ball[ix];
          EisensteinInt bb = z * theta + w;
          if (norm(ball[ix]) > 1 || norm(w) > 1 || norm(EisensteinInt(a - bb * omega)) > 1 ||
              norm(EisensteinInt(a + bb * omega)) > 1)
            ++s.violations;
        }
  });
  for (auto& s : slots) {
    res.positive_definite.insert(res.positive_definite.end(), s.pd.begin(), s.pd.end());
    res.determinant_mismatches += s.mismatches;
    res.inequality_violations += s.violations;
  }
  return res;
}

// ---------------------------------------------------------------------------

template <class R>
Complement<R> ortho_complement(const HermitianLattice<R>& ambient, const Mat<R>& sub) {
  using F = typename RingTraits<R>::Field;
  const Index n = ambient.rank();
  if (sub.rows() != n) throw LatticeError("sublattice vectors do not match the ambient rank");
  // Gram of the sublattice must be nondegenerate on its span
  Mat<R> sg = multiply(multiply(Mat<R>(sub.transpose()), ambient.gram), conjugate(sub));
  if (rank(cast_exact<F>(sg)) != rank(cast_exact<F>(sub)))
    throw LatticeError("degenerate sublattice: its Gram matrix has a radical");

  // v is orthogonal to s iff v^T (G conj(s)) = 0: left kernel of G conj(S)
  Mat<R> pairing = multiply(ambient.gram, conjugate(sub));  // n x k
  Hermite<R> h = hermite_rows(pairing);
  Complement<R> c;
  c.basis = Mat<R>(n, n - h.rank);
  for (Index k = h.rank; k < n; ++k) c.basis.col(k - h.rank) = h.transform.row(k).transpose();
  c.lattice.gram = multiply(multiply(Mat<R>(c.basis.transpose()), ambient.gram), conjugate(c.basis));
  c.signature = signature(c.lattice);
  c.positive_definite = c.signature.negative == 0 && c.signature.zero == 0;
  c.determinant = gram_determinant(c.lattice.gram);
  if (c.positive_definite && c.lattice.rank() > 0) c.mirrors = mirror_count(c.lattice);
  return c;
}

#define HYPERLAT_INSTANTIATE(R)                                                                  \
  template struct RootInventory<R>;                                                              \
  template RootInventory<R> short_vectors<R>(const HermitianLattice<R>&, const Integer&, unsigned); \
  template std::uint64_t mirror_count<R>(const HermitianLattice<R>&);                            \
  template Complement<R> ortho_complement<R>(const HermitianLattice<R>&, const Mat<R>&);

HYPERLAT_INSTANTIATE(EisensteinInt)
HYPERLAT_INSTANTIATE(GaussInt)

#undef HYPERLAT_INSTANTIATE

}  // namespace hyperlat
