#include "hyperlat/herm.hpp"

#include <bit>
#include <sstream>

namespace hyperlat {

template <class R>
R HermitianLattice<R>::inner(const Vec<R>& x, const Vec<R>& y) const {
  R s(0);
  for (Index i = 0; i < rank(); ++i) {
    if (is_zero(x(i))) continue;
    R row(0);
    for (Index j = 0; j < rank(); ++j)
      if (!is_zero(y(j)) && !is_zero(gram(i, j))) row += gram(i, j) * conj(y(j));
    s += x(i) * row;
  }
  return s;
}

template <class R>
HermitianLattice<R> gram_from_diagram(const CoxeterDiagram& d) {
  if (!d.is_properly_colored())
    throw LatticeError("lattice construction needs a proper black/white coloring of the diagram");
  const Index n = d.size();
  HermitianLattice<R> l{zeros<R>(n, n)};
  const R bond = RingTraits<R>::bond();
  for (Index i = 0; i < n; ++i) l.gram(i, i) = R(RingTraits<R>::root_norm(), Integer(0));
  for (auto [i, j] : d.edges()) {
    bool i_black = d.color(i) == Color::black;
    l.gram(i, j) = i_black ? bond : conj(bond);
    l.gram(j, i) = conj(l.gram(i, j));
  }
  return l;
}

template <class R>
HermitianLattice<R> direct_sum(const HermitianLattice<R>& a, const HermitianLattice<R>& b) {
  const Index n = a.rank(), m = b.rank();
  HermitianLattice<R> s{zeros<R>(n + m, n + m)};
  s.gram.topLeftCorner(n, n) = a.gram;
  s.gram.bottomRightCorner(m, m) = b.gram;
  return s;
}

template <class R>
bool is_hermitian(const Mat<R>& g) {
  if (g.rows() != g.cols()) return false;
  for (Index i = 0; i < g.rows(); ++i)
    for (Index j = i; j < g.cols(); ++j)
      if (g(i, j) != conj(g(j, i))) return false;
  return true;
}

template <class R>
Radical<R> radical(const HermitianLattice<R>& l) {
  // v is in the radical iff v^T G = 0; the last rows of the Hermite transform
  // are a saturated basis of that left kernel.
  Hermite<R> h = hermite_rows(l.gram);
  const Index n = l.rank();
  Radical<R> r{Mat<R>(n, n - h.rank)};
  for (Index k = h.rank; k < n; ++k) r.basis.col(k - h.rank) = h.transform.row(k).transpose();
  return r;
}

namespace {

template <class R>
using FieldOf = typename RingTraits<R>::Field;

// Integral coefficients C (rows x n) with C^T * basis_rows = target_rows, or nullopt.
template <class R>
std::optional<Mat<R>> integral_coordinates(const Mat<R>& basis_rows, const Mat<R>& target_rows) {
  using F = FieldOf<R>;
  Mat<F> a = cast_exact<F>(Mat<R>(basis_rows.transpose()));
  Mat<F> b = cast_exact<F>(Mat<R>(target_rows.transpose()));
  auto x = solve(a, b);
  if (!x) throw std::logic_error("quotient coordinates: inconsistent system");
  Mat<R> out(x->rows(), x->cols());
  for (Index i = 0; i < x->rows(); ++i)
    for (Index j = 0; j < x->cols(); ++j) {
      auto v = to_integral((*x)(i, j));
      if (!v) return std::nullopt;
      out(i, j) = *v;
    }
  return out;
}

}  // namespace

template <class R>
Quotient<R> quotient_by_radical(const HermitianLattice<R>& l) {
  using F = FieldOf<R>;
  const Index n = l.rank();
  Quotient<R> q;
  std::vector<Index> rows = independent_rows(cast_exact<F>(l.gram));
  const Index r = static_cast<Index>(rows.size());

  Mat<R> basis_rows(r, n);
  for (Index k = 0; k < r; ++k) basis_rows.row(k) = l.gram.row(rows[k]);
  if (auto c = integral_coordinates<R>(basis_rows, l.gram)) {
    q.projection = *c;
    q.lattice.gram = Mat<R>(r, r);
    q.lift = zeros<R>(n, r);
    for (Index j = 0; j < r; ++j) {
      q.lift(rows[j], j) = R(1);
      for (Index k = 0; k < r; ++k) q.lattice.gram(j, k) = l.gram(rows[j], rows[k]);
    }
    q.basis_nodes = rows;
    return q;
  }

  // The images of the basis vectors generate a module isomorphic to the row
  // module of G; its Hermite basis h_j = u_j G gives lifts u_j.
  Hermite<R> h = hermite_rows(l.gram);
  Mat<R> hrows = h.form.topRows(h.rank);
  auto c = integral_coordinates<R>(hrows, l.gram);
  if (!c) throw std::logic_error("Hermite basis does not generate the row module");
  q.projection = *c;
  q.lift = Mat<R>(n, h.rank);
  for (Index j = 0; j < h.rank; ++j) q.lift.col(j) = h.transform.row(j).transpose();
  q.lattice.gram = Mat<R>(h.rank, h.rank);
  for (Index j = 0; j < h.rank; ++j)
    for (Index k = 0; k < h.rank; ++k) {
      R s(0);
      for (Index m = 0; m < n; ++m) s += hrows(j, m) * conj(q.lift(m, k));
      q.lattice.gram(j, k) = s;
    }
  return q;
}

template <class R>
Mat<Rational> realify(const Mat<R>& g) {
  const Index n = g.rows();
  const R zeta = RingTraits<R>::zeta();
  const R powers[2] = {R(1), zeta};
  Mat<Rational> s(2 * n, 2 * n);
  for (Index j = 0; j < n; ++j)
    for (Index k = 0; k < n; ++k)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) s(2 * j + a, 2 * k + b) = real_part(R(powers[a] * conj(powers[b]) * g(j, k)));
  return s;
}

template <class R>
Signature signature(const HermitianLattice<R>& l) {
  Signature s = symmetric_signature(realify(l.gram));
  return {s.positive / 2, s.negative / 2, s.zero / 2};
}

template <class R>
Integer gram_determinant(const Mat<R>& g) {
  using F = FieldOf<R>;
  if (g.rows() == 0) return Integer(1);
  F d = determinant(cast_exact<F>(g));
  auto v = to_integral(d);
  if (!v || v->b != 0) throw std::logic_error("Hermitian determinant is not a rational integer");
  return v->a;
}

template <class R>
LatticeInvariants invariants(const HermitianLattice<R>& l) {
  LatticeInvariants inv;
  inv.rank = l.rank();
  Quotient<R> q = quotient_by_radical(l);
  inv.radical_dimension = l.rank() - q.lattice.rank();
  inv.signature = signature(q.lattice);
  inv.determinant = gram_determinant(q.lattice.gram);
  return inv;
}

InvariantComparison invariants_match(const LatticeInvariants& a, const LatticeInvariants& b, bool compare_radical) {
  InvariantComparison c;
  auto note = [&](const std::string& what, const std::string& x, const std::string& y) {
    c.match = false;
    c.mismatches.push_back(what + ": " + x + " vs " + y);
  };
  auto qa = a.rank - a.radical_dimension, qb = b.rank - b.radical_dimension;
  if (qa != qb) note("quotient rank", std::to_string(qa), std::to_string(qb));
  if (compare_radical && a.radical_dimension != b.radical_dimension)
    note("radical dimension", std::to_string(a.radical_dimension), std::to_string(b.radical_dimension));
  if (a.signature.positive != b.signature.positive || a.signature.negative != b.signature.negative)
    note("signature", std::to_string(a.signature.positive) + "," + std::to_string(a.signature.negative),
         std::to_string(b.signature.positive) + "," + std::to_string(b.signature.negative));
  if (a.determinant != b.determinant) note("determinant", a.determinant.str(), b.determinant.str());
  return c;
}

Mat<Sqrt3> real_gram(const CoxeterDiagram& d) {
  const Index n = d.size();
  Mat<Sqrt3> g = zeros<Sqrt3>(n, n);
  for (Index i = 0; i < n; ++i) g(i, i) = Sqrt3(3);
  for (auto [i, j] : d.edges()) g(i, j) = g(j, i) = -Sqrt3::root3();
  return g;
}

// ---------------------------------------------------------------------------

namespace {

template <class R>
void check_null_identities(const CoxeterDiagram& d, NullIdentityReport& rep) {
  using F = FieldOf<R>;
  HermitianLattice<R> l = gram_from_diagram<R>(d);
  const Index n = d.size();
  const R bond = RingTraits<R>::bond();
  std::vector<Index> lines;
  for (Index i = 0; i < n; ++i)
    if (d.color(i) == Color::white) lines.push_back(i);

  std::vector<Mat<R>> pairings;  // row vectors delta_l^T G
  std::vector<Vec<R>> deltas;
  for (Index li : lines) {
    Vec<R> delta = Vec<R>::Constant(n, R(0));
    delta(li) = -bond;
    for (int p : d.neighbors(li)) delta(p) = R(1);
    Mat<R> pr = multiply(Mat<R>(delta.transpose()), l.gram);
    for (Index j = 0; j < n; ++j) {
      if (d.color(j) == Color::black && !is_zero(pr(0, j))) ++rep.point_failures;
      if (d.color(j) == Color::white && pr(0, j) != bond) ++rep.line_failures;
    }
    pairings.push_back(pr);
    deltas.push_back(delta);
  }
  rep.differences_in_radical = true;
  Mat<F> diffs(static_cast<Index>(lines.size()) - 1, n);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    Mat<R> pr = pairings[k] - pairings[0];
    for (Index j = 0; j < n; ++j)
      if (!is_zero(pr(0, j))) rep.differences_in_radical = false;
    for (Index j = 0; j < n; ++j) diffs(static_cast<Index>(k) - 1, j) = F(deltas[k](j) - deltas[0](j));
  }
  rep.span_dimension = rank(diffs);
  rep.radical_dimension = radical(l).dimension();
}

}  // namespace

NullIdentityReport incidence_null_identities(int q) {
  NullIdentityReport rep;
  rep.q = q;
  CoxeterDiagram d = build_incidence(q);
  if (q == 3) {
    check_null_identities<EisensteinInt>(d, rep);
    // d_l = sqrt3 e_l + sum_{p ~ l} e_p in the real form
    rep.real_checked = true;
    Mat<Sqrt3> g = real_gram(d);
    for (int li = 0; li < d.size(); ++li) {
      if (d.color(li) != Color::white) continue;
      Vec<Sqrt3> dl = Vec<Sqrt3>::Constant(d.size(), Sqrt3(0));
      dl(li) = Sqrt3::root3();
      for (int p : d.neighbors(li)) dl(p) = Sqrt3(1);
      for (int j = 0; j < d.size(); ++j) {
        Sqrt3 s(0);
        for (int k = 0; k < d.size(); ++k) s += dl(k) * g(k, j);
        if (d.color(j) == Color::black && sign(s) != 0) ++rep.real_point_failures;
        if (d.color(j) == Color::white && s != -Sqrt3::root3()) ++rep.real_line_failures;
      }
    }
  } else if (q == 2) {
    check_null_identities<GaussInt>(d, rep);
  } else {
    throw LatticeError("null identities are provided for q = 2 and q = 3");
  }
  return rep;
}

// ---------------------------------------------------------------------------

std::string to_string(QuadraticType t) {
  switch (t) {
    case QuadraticType::plus: return "plus";
    case QuadraticType::minus: return "minus";
    case QuadraticType::odd: return "odd";
    case QuadraticType::degenerate: return "degenerate";
  }
  return "?";
}

namespace {

int f2_rank(std::vector<std::uint32_t> rows) {
  int r = 0;
  for (int bit = 31; bit >= 0; --bit) {
    auto it = std::find_if(rows.begin() + r, rows.end(), [&](std::uint32_t x) { return (x >> bit) & 1u; });
    if (it == rows.end()) continue;
    std::swap(rows[r], *it);
    for (std::size_t k = 0; k < rows.size(); ++k)
      if (static_cast<int>(k) != r && ((rows[k] >> bit) & 1u)) rows[k] ^= rows[r];
    ++r;
  }
  return r;
}

}  // namespace

BinaryQuadraticSpace reduce_mod_two(const GaussLattice& l, const std::vector<Mat<GaussInt>>& generators) {
  const int d = static_cast<int>(l.rank());
  if (d > 20) throw LatticeError("mod (1+i) reduction is limited to rank 20");
  for (int k = 0; k < d; ++k)
    if (l.gram(k, k).b != 0 || l.gram(k, k).a % 2 != 0)
      throw LatticeError("mod (1+i) reduction needs an even diagonal");

  BinaryQuadraticSpace s;
  s.dimension = d;
  const std::uint32_t size = 1u << d;
  auto rep = [&](std::uint32_t v) {
    Vec<GaussInt> x(d);
    for (int k = 0; k < d; ++k) x(k) = GaussInt((v >> k) & 1u ? 1 : 0);
    return x;
  };
  auto qvalue = [&](const Vec<GaussInt>& x) -> int {
    GaussInt n = l.norm(x);
    if (n.b != 0 || n.a % 2 != 0) throw std::logic_error("odd norm in an even Gauss lattice");
    Integer h = n.a / 2;
    return static_cast<int>(((h % 2) + 2) % 2);
  };
  s.q.resize(size);
  for (std::uint32_t v = 0; v < size; ++v) s.q[v] = static_cast<std::uint8_t>(qvalue(rep(v)));

  // q(v + (1+i) y) == q(v) for y running over the basis and i times the basis
  s.well_defined = true;
  for (std::uint32_t v = 0; v < size && s.well_defined; ++v)
    for (int k = 0; k < d && s.well_defined; ++k)
      for (const GaussInt& c : {GaussInt::one_plus_i(), GaussInt(GaussInt::one_plus_i() * GaussInt::i())}) {
        Vec<GaussInt> x = rep(v);
        x(k) += c;
        if (qvalue(x) != s.q[v]) s.well_defined = false;
      }

  std::vector<std::uint32_t> polar(d, 0);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) {
      std::uint32_t ej = 1u << j, ek = 1u << k;
      int b = (s.q[ej ^ ek] + s.q[ej] + s.q[ek]) & 1;
      if (b) polar[j] |= 1u << k;
    }
  s.polar_rank = f2_rank(polar);

  // radical of the polar form; q must be nonzero on its nonzero vectors
  std::vector<std::uint32_t> singular_radical;
  for (std::uint32_t v = 1; v < size; ++v) {
    bool in_rad = true;
    for (int k = 0; k < d && in_rad; ++k)
      if (std::popcount(polar[k] & v) & 1) in_rad = false;
    if (in_rad && s.q[v] == 0) singular_radical.push_back(v);
  }
  if (!singular_radical.empty()) {
    std::ostringstream msg;
    msg << "degenerate reduction: singular radical vectors";
    for (auto v : singular_radical) msg << " 0x" << std::hex << v;
    throw LatticeError(msg.str());
  }

  for (std::uint32_t v = 0; v < size; ++v)
    if (s.q[v] == 0) ++s.zeros;
  if (s.polar_rank < d) {
    s.type = QuadraticType::odd;
  } else {
    const std::uint64_t half = std::uint64_t(1) << (d - 1);
    const std::uint64_t delta = d >= 2 ? std::uint64_t(1) << (d / 2 - 1) : 0;
    if (s.zeros == half + delta)
      s.type = QuadraticType::plus;
    else if (s.zeros == half - delta)
      s.type = QuadraticType::minus;
    else
      s.type = QuadraticType::degenerate;
  }

  for (const auto& m : generators) {
    if (m.rows() != d || m.cols() != d) throw LatticeError("generator size differs from lattice rank");
    std::vector<std::uint32_t> cols(d, 0);
    for (int k = 0; k < d; ++k)
      for (int j = 0; j < d; ++j) {
        Integer t = m(j, k).a + m(j, k).b;
        if (t % 2 != 0) cols[k] |= 1u << j;
      }
    bool ok = true;
    for (std::uint32_t v = 0; v < size && ok; ++v) {
      std::uint32_t image = 0;
      for (int k = 0; k < d; ++k)
        if ((v >> k) & 1u) image ^= cols[k];
      if (s.q[image] != s.q[v]) ok = false;
    }
    s.generator_preserves.push_back(ok);
    s.generator_images.push_back(std::move(cols));
  }
  return s;
}

#define HYPERLAT_INSTANTIATE(R)                                                          \
  template struct HermitianLattice<R>;                                                   \
  template HermitianLattice<R> gram_from_diagram<R>(const CoxeterDiagram&);              \
  template HermitianLattice<R> direct_sum<R>(const HermitianLattice<R>&, const HermitianLattice<R>&); \
  template bool is_hermitian<R>(const Mat<R>&);                                          \
  template Radical<R> radical<R>(const HermitianLattice<R>&);                            \
  template Quotient<R> quotient_by_radical<R>(const HermitianLattice<R>&);               \
  template Mat<Rational> realify<R>(const Mat<R>&);                                      \
  template Signature signature<R>(const HermitianLattice<R>&);                           \
  template Integer gram_determinant<R>(const Mat<R>&);                                   \
  template LatticeInvariants invariants<R>(const HermitianLattice<R>&);

HYPERLAT_INSTANTIATE(EisensteinInt)
HYPERLAT_INSTANTIATE(GaussInt)

#undef HYPERLAT_INSTANTIATE

}  // namespace hyperlat
