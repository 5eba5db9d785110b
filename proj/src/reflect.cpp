#include "hyperlat/reflect.hpp"

#include "hyperlat/parallel.hpp"

#include <unordered_set>

namespace hyperlat {

template <class R>
const Mat<R>& ReflectionRep<R>::generator(std::string_view label) const {
  for (std::size_t k = 0; k < labels.size(); ++k)
    if (labels[k] == label) return generators[k];
  throw ReflectionError("no generator labeled '" + std::string(label) + "'");
}

template <class R>
Mat<R> reflection_matrix(const HermitianLattice<R>& l, const Vec<R>& root, const R& zeta) {
  const Index n = l.rank();
  if (root.size() != n) throw ReflectionError("root size differs from lattice rank");
  R nr = l.norm(root);
  if (nr != R(RingTraits<R>::root_norm(), Integer(0)))
    throw ReflectionError("root norm " + to_string(nr) + " differs from " + RingTraits<R>::root_norm().str());
  // <b_k, e> = (G conj(e))_k
  Mat<R> m = identity<R>(n);
  for (Index k = 0; k < n; ++k) {
    R pairing(0);
    for (Index j = 0; j < n; ++j) pairing += l.gram(k, j) * conj(root(j));
    auto c = exact_div(R((zeta - R(1)) * pairing), nr);
    if (!c) throw ReflectionError("reflection coefficient is not integral");
    for (Index i = 0; i < n; ++i) m(i, k) += root(i) * *c;
  }
  return m;
}

template <class R>
ReflectionRep<R> rep_from_quotient(const Quotient<R>& q, const CoxeterDiagram& d) {
  if (q.projection.cols() != d.size()) throw ReflectionError("projection does not match the diagram");
  ReflectionRep<R> rep;
  rep.lattice = q.lattice;
  for (int i = 0; i < d.size(); ++i) {
    Vec<R> root = q.projection.col(i);
    rep.labels.push_back(d.label(i));
    rep.generators.push_back(reflection_matrix(q.lattice, root));
    rep.roots.push_back(std::move(root));
  }
  return rep;
}

template <class R>
ReflectionRep<R> rep_from_diagram(const CoxeterDiagram& d) {
  return rep_from_quotient(quotient_by_radical(gram_from_diagram<R>(d)), d);
}

template <class R>
bool is_unitary(const Mat<R>& m, const Mat<R>& gram) {
  return multiply(multiply(Mat<R>(m.transpose()), gram), conjugate(m)) == gram;
}

template <class R>
Mat<R> matrix_power(const Mat<R>& m, int k) {
  Mat<R> p = identity<R>(m.rows());
  for (int i = 0; i < k; ++i) p = multiply(p, m);
  return p;
}

bool RelationReport::ok() const {
  for (const auto& g : generators)
    if (!g.unitary || !g.order_ok) return false;
  return failures.empty();
}

template <class R>
RelationReport verify_relations(const ReflectionRep<R>& rep, const CoxeterDiagram& d, unsigned threads) {
  RelationReport report;
  const int n = d.size();
  if (static_cast<int>(rep.size()) != n) throw ReflectionError("representation does not match the diagram");
  const Mat<R> id = identity<R>(rep.lattice.rank());
  report.generators.resize(n);
  parallel_for(static_cast<std::size_t>(n), threads, [&](std::size_t i) {
    const Mat<R>& m = rep.generators[i];
    GeneratorCheck& c = report.generators[i];
    c.label = rep.labels[i];
    c.unitary = is_unitary(m, rep.lattice.gram);
    c.order_ok = m != id && matrix_power(m, RingTraits<R>::reflection_order) == id;
  });

  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<char> passed(pairs.size(), 0);
  parallel_for(pairs.size(), threads, [&](std::size_t k) {
    auto [i, j] = pairs[k];
    const Mat<R>& a = rep.generators[i];
    const Mat<R>& b = rep.generators[j];
    Mat<R> ab = multiply(a, b);
    Mat<R> ba = multiply(b, a);
    passed[k] = d.adjacent(i, j) ? multiply(ab, a) == multiply(ba, b) : ab == ba;
  });
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    auto [i, j] = pairs[k];
    bool bonded = d.adjacent(i, j);
    ++(bonded ? report.braid_pairs : report.commuting_pairs);
    if (!passed[k]) report.failures.push_back({d.label(i), d.label(j), bonded});
  }
  report.pairs_checked = pairs.size();
  return report;
}

// ---------------------------------------------------------------------------
// Closure with machine integers

namespace {

using Word = std::vector<std::int64_t>;  // row-major (a, b) pairs

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (std::int64_t x : w) {
      h ^= static_cast<std::uint64_t>(x);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("closure entry overflow");
  return r;
}

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("closure entry overflow");
  return r;
}

template <class R>
Word encode(const Mat<R>& m) {
  Word w;
  w.reserve(2 * m.size());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) {
      if (boost::multiprecision::abs(m(i, j).a) > Integer(INT64_MAX) ||
          boost::multiprecision::abs(m(i, j).b) > Integer(INT64_MAX))
        throw std::overflow_error("generator entry exceeds 64 bits");
      w.push_back(m(i, j).a.template convert_to<std::int64_t>());
      w.push_back(m(i, j).b.template convert_to<std::int64_t>());
    }
  return w;
}

// (a + b u)(c + d u) with u = omega (u^2 = -1 - u) or u = i (u^2 = -1)
template <RingTag tag>
void mul_entry(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t& re, std::int64_t& im) {
  std::int64_t ac = checked_mul(a, c), bd = checked_mul(b, d);
  std::int64_t ad = checked_mul(a, d), bc = checked_mul(b, c);
  re = checked_add(ac, -bd);
  im = checked_add(ad, bc);
  if constexpr (tag == RingTag::eisenstein) im = checked_add(im, -bd);
}

template <RingTag tag>
Word multiply_words(const Word& x, const Word& y, int n) {
  Word out(2 * n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      std::int64_t a = x[2 * (i * n + k)], b = x[2 * (i * n + k) + 1];
      if (a == 0 && b == 0) continue;
      for (int j = 0; j < n; ++j) {
        std::int64_t c = y[2 * (k * n + j)], d = y[2 * (k * n + j) + 1];
        if (c == 0 && d == 0) continue;
        std::int64_t re, im;
        mul_entry<tag>(a, b, c, d, re, im);
        out[2 * (i * n + j)] = checked_add(out[2 * (i * n + j)], re);
        out[2 * (i * n + j) + 1] = checked_add(out[2 * (i * n + j) + 1], im);
      }
    }
  return out;
}

}  // namespace

template <class R>
ClosureResult group_closure(const ReflectionRep<R>& rep, std::uint64_t max_elements, unsigned threads) {
  Signature s = signature(rep.lattice);
  if (s.negative != 0 || s.zero != 0)
    throw ReflectionError("group closure needs a positive definite lattice (the group is infinite otherwise)");
  constexpr RingTag tag = RingTraits<R>::tag;
  const int n = static_cast<int>(rep.lattice.rank());
  std::vector<Word> gens;
  for (const auto& g : rep.generators) gens.push_back(encode(g));

  ClosureResult result;
  std::unordered_set<Word, WordHash> seen;
  std::vector<Word> frontier{encode(identity<R>(n))};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    const std::size_t g = gens.size();
    std::vector<Word> products(frontier.size() * g);
    parallel_for(frontier.size(), threads, [&](std::size_t i) {
      for (std::size_t k = 0; k < g; ++k) products[i * g + k] = multiply_words<tag>(gens[k], frontier[i], n);
    });
    std::vector<Word> next;
    for (auto& p : products) {
      if (seen.insert(p).second) {
        next.push_back(std::move(p));
        if (seen.size() > max_elements) {
          result.order = seen.size();
          return result;
        }
      }
    }
    if (!next.empty()) ++result.depth;
    frontier = std::move(next);
  }
  result.order = seen.size();
  result.complete = true;
  return result;
}

template <class R>
ElementOrder word_order(const ReflectionRep<R>& rep, const std::vector<std::string>& word, std::uint64_t budget) {
  const Index n = rep.lattice.rank();
  Mat<R> s = identity<R>(n);
  for (const auto& label : word) s = multiply(s, rep.generator(label));
  ElementOrder out;
  const Mat<R> id = identity<R>(n);
  Mat<R> p = s;
  for (std::uint64_t k = 1; k <= budget; ++k) {
    out.tried = k;
    if (!out.projective_order) {
      bool scalar = true;
      for (Index i = 0; i < n && scalar; ++i)
        for (Index j = 0; j < n && scalar; ++j)
          if (i == j ? p(i, j) != p(0, 0) : !is_zero(p(i, j))) scalar = false;
      if (scalar && norm(p(0, 0)) == 1) out.projective_order = k;
    }
    if (p == id) {
      out.order = k;
      break;
    }
    p = multiply(p, s);
  }
  return out;
}

std::vector<std::string> spider_word() { return {"a", "b1", "c1", "a", "b2", "c2", "a", "b3", "c3"}; }

#define HYPERLAT_INSTANTIATE(R)                                                                        \
  template struct ReflectionRep<R>;                                                                    \
  template Mat<R> reflection_matrix<R>(const HermitianLattice<R>&, const Vec<R>&, const R&);           \
  template ReflectionRep<R> rep_from_quotient<R>(const Quotient<R>&, const CoxeterDiagram&);           \
  template ReflectionRep<R> rep_from_diagram<R>(const CoxeterDiagram&);                                \
  template bool is_unitary<R>(const Mat<R>&, const Mat<R>&);                                           \
  template Mat<R> matrix_power<R>(const Mat<R>&, int);                                                 \
  template RelationReport verify_relations<R>(const ReflectionRep<R>&, const CoxeterDiagram&, unsigned); \
  template ClosureResult group_closure<R>(const ReflectionRep<R>&, std::uint64_t, unsigned);           \
  template ElementOrder word_order<R>(const ReflectionRep<R>&, const std::vector<std::string>&, std::uint64_t);

HYPERLAT_INSTANTIATE(EisensteinInt)
HYPERLAT_INSTANTIATE(GaussInt)

#undef HYPERLAT_INSTANTIATE

}  // namespace hyperlat
