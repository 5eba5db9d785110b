#include "hyperlat/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <tuple>

namespace hyperlat {

GaussJacobi gauss_jacobi(int n, double alpha, double beta) {
  if (n < 1) throw PolygonError("Gauss-Jacobi needs at least one node");
  if (alpha <= -1 || beta <= -1) throw PolygonError("Jacobi exponents must exceed -1");
  const double ab = alpha + beta;
  Eigen::VectorXd diag(n), sub(std::max(n - 1, 1));
  for (int k = 0; k < n; ++k) {
    double s = 2.0 * k + ab;
    diag(k) = k == 0 ? (beta - alpha) / (ab + 2) : (beta * beta - alpha * alpha) / (s * (s + 2));
  }
  for (int k = 1; k < n; ++k) {
    double s = 2.0 * k + ab;
    double b2 = k == 1 ? 4 * (1 + alpha) * (1 + beta) / ((2 + ab) * (2 + ab) * (3 + ab))
                       : 4 * k * (k + alpha) * (k + beta) * (k + ab) / (s * s * (s + 1) * (s - 1));
    sub(k - 1) = std::sqrt(b2);
  }
  GaussJacobi g;
  const double mu0 = std::exp((ab + 1) * std::log(2.0) + std::lgamma(alpha + 1) + std::lgamma(beta + 1) -
                              std::lgamma(ab + 2));
  if (n == 1) {
    g.nodes = {diag(0)};
    g.weights = {mu0};
    return g;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub.head(n - 1), Eigen::ComputeEigenvectors);
  for (int k = 0; k < n; ++k) {
    g.nodes.push_back(es.eigenvalues()(k));
    double v = es.eigenvectors()(0, k);
    g.weights.push_back(mu0 * v * v);
  }
  return g;
}

namespace {

constexpr double pi = std::numbers::pi;
constexpr int panel_nodes = 24;

const GaussJacobi& cached_rule(int n, double alpha, double beta) {
  static std::mutex m;
  static std::map<std::tuple<int, double, double>, GaussJacobi> cache;
  std::lock_guard lock(m);
  auto key = std::make_tuple(n, alpha, beta);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, gauss_jacobi(n, alpha, beta)).first;
  return it->second;
}

// Integrand prod_k |scale_k (t - p_k)|^{-e_k}; the factors at the two
// endpoints of [a, b] are taken into the Jacobi weight.
struct Edge {
  double a, b;
  std::vector<double> p, e, scale;
  int at_a, at_b;  // indices of the endpoint singularities
};

double smooth_part(const Edge& edge, double t, int skip_a, int skip_b) {
  double log_sum = 0;
  for (std::size_t k = 0; k < edge.p.size(); ++k) {
    if (static_cast<int>(k) == skip_a || static_cast<int>(k) == skip_b) continue;
    log_sum -= edge.e[k] * std::log(std::abs(edge.scale[k] * (t - edge.p[k])));
  }
  return std::exp(log_sum);
}

// One panel [lo, hi] of the edge with an `nodes`-point rule; Jacobi weights
// at the ends that are edge endpoints.
double panel(const Edge& edge, double lo, double hi, int nodes) {
  const bool first = lo == edge.a, last = hi == edge.b;
  const double h = hi - lo;
  const double beta = first ? -edge.e[edge.at_a] : 0.0;   // weight (1 + x)^beta at lo
  const double alpha = last ? -edge.e[edge.at_b] : 0.0;   // weight (1 - x)^alpha at hi
  const GaussJacobi& rule = cached_rule(nodes, alpha, beta);
  double sum = 0;
  for (int k = 0; k < nodes; ++k) {
    double t = lo + (rule.nodes[k] + 1) * h / 2;
    double f = smooth_part(edge, t, first ? edge.at_a : -1, last ? edge.at_b : -1);
    // constant factors left over from the endpoint singularities
    if (first) f *= std::pow(std::abs(edge.scale[edge.at_a]) * h / 2, -edge.e[edge.at_a]);
    if (last) f *= std::pow(std::abs(edge.scale[edge.at_b]) * h / 2, -edge.e[edge.at_b]);
    sum += rule.weights[k] * f;
  }
  return sum * h / 2;
}

struct EdgeValue {
  double value = 0, error = 0;
  int nodes = 0;
};

// Full rule against the half rule; bisect while they disagree by more than
// the panel's share of the tolerance.
void refine(const Edge& edge, double lo, double hi, double tol, int max_nodes, EdgeValue& out) {
  const double fine = panel(edge, lo, hi, panel_nodes), coarse = panel(edge, lo, hi, panel_nodes / 2);
  out.nodes += panel_nodes + panel_nodes / 2;
  if (out.nodes > max_nodes) throw PolygonError("edge integral did not converge within the node budget");
  const double diff = std::abs(fine - coarse);
  if (diff <= tol * (hi - lo) / (edge.b - edge.a) || hi - lo < 1e-14 * (edge.b - edge.a)) {
    out.value += fine;
    out.error += diff;
    return;
  }
  const double mid = (lo + hi) / 2;
  refine(edge, lo, mid, tol, max_nodes, out);
  refine(edge, mid, hi, tol, max_nodes, out);
}

// Panels graded geometrically toward each endpoint, starting at the distance
// of the nearest singularity outside the edge.
std::vector<double> breakpoints(const Edge& edge) {
  const double len = edge.b - edge.a, mid = (edge.a + edge.b) / 2;
  double da = len, db = len;
  for (std::size_t k = 0; k < edge.p.size(); ++k) {
    if (static_cast<int>(k) == edge.at_a || static_cast<int>(k) == edge.at_b) continue;
    da = std::min(da, std::abs(edge.p[k] - edge.a));
    db = std::min(db, std::abs(edge.p[k] - edge.b));
  }
  std::vector<double> left{edge.a}, right{edge.b};
  for (double d = da; edge.a + d < mid; d *= 2) left.push_back(edge.a + d);
  for (double d = db; edge.b - d > mid; d *= 2) right.push_back(edge.b - d);
  left.push_back(mid);
  left.insert(left.end(), right.rbegin(), right.rend());
  return left;
}

EdgeValue integrate(const Edge& edge, double tol, int max_nodes) {
  // tolerance relative once the edge integral exceeds 1
  const double scale = std::max(1.0, std::abs(panel(edge, edge.a, edge.b, panel_nodes)));
  EdgeValue out;
  std::vector<double> cuts = breakpoints(edge);
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) refine(edge, cuts[k], cuts[k + 1], tol * scale, max_nodes, out);
  return out;
}

}  // namespace

void validate_weights(const std::vector<double>& mu) {
  if (mu.size() < 4) throw PolygonError("need at least 4 weights");
  for (double m : mu)
    if (!(m > 0 && m < 1)) throw PolygonError("weights must lie in (0, 1)");
  double s = std::accumulate(mu.begin(), mu.end(), 0.0);
  if (std::abs(s - 2) > 1e-12) throw PolygonError("weights must sum to 2");
}

void validate_points(const std::vector<double>& z) {
  for (std::size_t k = 1; k < z.size(); ++k)
    if (!(z[k] > z[k - 1])) throw PolygonError("points must be strictly increasing");
}

std::vector<cplx> phases(const std::vector<double>& mu) {
  std::vector<cplx> om;
  double s = 0;
  for (std::size_t j = 0; j < mu.size(); ++j) {
    s += mu[j];
    om.push_back(std::polar(1.0, pi * s));
  }
  om.back() = 1.0;  // exp(2 pi i)
  return om;
}

PolygonData polygon_from_lengths(const std::vector<double>& mu, const std::vector<double>& l) {
  if (mu.size() != l.size()) throw PolygonError("weights and lengths differ in size");
  const std::size_t n = mu.size();
  PolygonData d;
  d.mu = mu;
  d.l = l;
  d.omega = phases(mu);
  for (std::size_t j = 0; j < n; ++j) d.w.push_back(d.omega[j] * l[j]);
  // v_n = 0, v_1 = l_n, v_{j+1} = v_j + omega_j l_j
  d.vertices.resize(n);
  d.vertices[0] = l[n - 1];
  for (std::size_t j = 0; j + 1 < n; ++j) d.vertices[j + 1] = d.vertices[j] + d.w[j];
  for (std::size_t j = 0; j < n; ++j) {
    cplx prev = d.vertices[(j + n - 1) % n] - d.vertices[j];
    cplx next = d.vertices[(j + 1) % n] - d.vertices[j];
    double cross = prev.real() * next.imag() - prev.imag() * next.real();
    double dot = prev.real() * next.real() + prev.imag() * next.imag();
    d.angles.push_back(std::atan2(std::abs(cross), dot));
  }
  d.area = shoelace_area(d.vertices);
  return d;
}

PolygonData edge_integrals(const std::vector<double>& z, const std::vector<double>& mu, double tol, int max_nodes) {
  validate_weights(mu);
  if (z.size() != mu.size()) throw PolygonError("points and weights differ in size");
  validate_points(z);
  if (tol < 1e-14) throw PolygonError("tolerance below 1e-14 is not attainable");
  const int n = static_cast<int>(z.size());
  std::vector<double> l(n);
  std::vector<double> err(n);
  std::vector<int> used(n);
  for (int j = 0; j + 1 < n; ++j) {
    Edge e{z[j], z[j + 1], z, mu, std::vector<double>(n, 1.0), j, j + 1};
    EdgeValue v = integrate(e, tol, max_nodes);
    l[j] = v.value;
    err[j] = v.error;
    used[j] = v.nodes;
  }
  // (z_n, inf) and (-inf, z_1) through t = -1/(s - c): the product becomes
  // prod_k |(c - z_k) t - 1|^{-mu_k} on [-1/(z_n - c), 1/(c - z_1)].
  const double middle = (z.front() + z.back()) / 2;
  int gap = 0;
  while (gap + 2 < n && z[gap + 1] < middle) ++gap;
  const double c = (z[gap] + z[gap + 1]) / 2;
  Edge outer;
  outer.a = -1 / (z[n - 1] - c);
  outer.b = 1 / (c - z[0]);
  for (int k = 0; k < n; ++k) {
    outer.p.push_back(1 / (c - z[k]));
    outer.e.push_back(mu[k]);
    outer.scale.push_back(c - z[k]);
  }
  outer.at_a = n - 1;
  outer.at_b = 0;
  EdgeValue v = integrate(outer, tol, max_nodes);
  l[n - 1] = v.value;
  err[n - 1] = v.error;
  used[n - 1] = v.nodes;

  PolygonData d = polygon_from_lengths(mu, l);
  d.z = z;
  d.error_estimate = err;
  d.nodes_used = used;
  return d;
}

Residuals closure_residuals(const std::vector<double>& mu, const std::vector<double>& l) {
  std::vector<cplx> om = phases(mu);
  cplx s1 = 0, s2 = 0;
  for (std::size_t j = 0; j < l.size(); ++j) {
    s1 += om[j] * l[j];
    s2 += std::conj(om[j]) * l[j];
  }
  return {std::abs(s1), std::abs(s2)};
}

Residuals closure_residuals(const PolygonData& d) { return closure_residuals(d.mu, d.l); }

Eigen::MatrixXd area_matrix(const std::vector<double>& mu) {
  std::vector<cplx> om = phases(mu);
  const int n = static_cast<int>(mu.size());
  Eigen::MatrixXd q = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < n; ++k)
    for (int j = k + 1; j < n; ++j) q(k, j) = q(j, k) = 0.25 * std::imag(std::conj(om[k]) * om[j]);
  return q;
}

double shoelace_area(const std::vector<cplx>& v) {
  double s = 0;
  for (std::size_t j = 0; j < v.size(); ++j) {
    const cplx& a = v[j];
    const cplx& b = v[(j + 1) % v.size()];
    s += a.real() * b.imag() - a.imag() * b.real();
  }
  return s / 2;
}

AreaSignature area_form(const std::vector<double>& mu, int samples, std::uint64_t seed) {
  validate_weights(mu);
  if (samples < 200) throw PolygonError("area form needs at least 200 samples");
  const int n = static_cast<int>(mu.size());
  std::vector<cplx> om = phases(mu);
  Eigen::MatrixXd c(2, n);
  for (int j = 0; j < n; ++j) {
    c(0, j) = om[j].real();
    c(1, j) = om[j].imag();
  }
  // projector onto ker C
  Eigen::MatrixXd p = Eigen::MatrixXd::Identity(n, n) - c.transpose() * (c * c.transpose()).ldlt().solve(c);

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::vector<Eigen::VectorXd> basis;
  for (int s = 0; s < samples && static_cast<int>(basis.size()) < n; ++s) {
    Eigen::VectorXd x(n);
    for (int j = 0; j < n; ++j) x(j) = normal(rng);
    x = p * x;
    for (const auto& b : basis) x -= b.dot(x) * b;
    for (const auto& b : basis) x -= b.dot(x) * b;
    double nx = x.norm();
    if (nx > 1e-8) basis.push_back(x / nx);
  }
  AreaSignature sig;
  sig.dimension = static_cast<int>(basis.size());
  if (sig.dimension != n - 2) throw PolygonError("degenerate sampling of the closure subspace");
  Eigen::MatrixXd b(n, sig.dimension);
  for (int k = 0; k < sig.dimension; ++k) b.col(k) = basis[k];
  Eigen::MatrixXd form = -(b.transpose() * area_matrix(mu) * b);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(form);
  const double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
  for (int k = 0; k < sig.dimension; ++k) {
    double e = es.eigenvalues()(k);
    sig.eigenvalues.push_back(e);
    if (e > 1e-10 * scale) ++sig.positive;
    else if (e < -1e-10 * scale) ++sig.negative;
    else ++sig.zero;
  }
  return sig;
}

std::vector<double> regular_prevertices(int n) {
  std::vector<double> z;
  for (int k = 1; k <= n; ++k) z.push_back(-1 / std::tan(pi * (k - 0.5) / n));
  return z;
}

RegularSearch find_regular(int n, double perturbation, std::uint64_t seed, double tol) {
  std::vector<double> mu(n, 2.0 / n);
  std::vector<double> z = regular_prevertices(n);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-perturbation, perturbation);
  // perturb the free points only, keeping the order
  std::vector<int> free;
  for (int k = 2; k < n - 1; ++k) free.push_back(k);
  for (int k : free) z[k] += uni(rng) * std::min(z[k] - z[k - 1], z[k + 1] - z[k]);

  auto residual = [&](const std::vector<double>& zz) {
    PolygonData d = edge_integrals(zz, mu, 1e-13);
    double mean = std::accumulate(d.l.begin(), d.l.end(), 0.0) / n;
    Eigen::VectorXd r(n);
    for (int j = 0; j < n; ++j) r(j) = d.l[j] / mean - 1;
    return r;
  };

  RegularSearch out;
  Eigen::VectorXd r = residual(z);
  for (int it = 0; it < 50 && r.cwiseAbs().maxCoeff() > tol; ++it) {
    Eigen::MatrixXd jac(n, static_cast<Eigen::Index>(free.size()));
    for (std::size_t c = 0; c < free.size(); ++c) {
      int k = free[c];
      double h = 1e-6 * std::max(1.0, std::abs(z[k]));
      std::vector<double> zp = z, zm = z;
      zp[k] += h;
      zm[k] -= h;
      jac.col(static_cast<Eigen::Index>(c)) = (residual(zp) - residual(zm)) / (2 * h);
    }
    Eigen::VectorXd step = jac.colPivHouseholderQr().solve(-r);
    double damping = 1;
    for (int tries = 0; tries < 30; ++tries, damping /= 2) {
      std::vector<double> trial = z;
      for (std::size_t c = 0; c < free.size(); ++c) trial[free[c]] += damping * step(static_cast<Eigen::Index>(c));
      if (!std::is_sorted(trial.begin(), trial.end()) ||
          std::adjacent_find(trial.begin(), trial.end()) != trial.end())
        continue;
      Eigen::VectorXd rt = residual(trial);
      if (rt.norm() < r.norm()) {
        z = trial;
        r = rt;
        break;
      }
    }
    out.iterations = it + 1;
  }
  out.z = z;
  out.spread = r.cwiseAbs().maxCoeff();
  return out;
}

std::string polygon_svg(const PolygonData& d, double size) {
  double minx = 1e300, maxx = -1e300, miny = 1e300, maxy = -1e300;
  for (const auto& v : d.vertices) {
    minx = std::min(minx, v.real());
    maxx = std::max(maxx, v.real());
    miny = std::min(miny, v.imag());
    maxy = std::max(maxy, v.imag());
  }
  double span = std::max({maxx - minx, maxy - miny, 1e-12});
  double k = 0.9 * size / span;
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\">\n"
      << "<polygon fill=\"#ddd\" stroke=\"black\" points=\"";
  for (const auto& v : d.vertices)
    svg << 0.05 * size + k * (v.real() - minx) << "," << 0.95 * size - k * (v.imag() - miny) << " ";
  svg << "\"/>\n</svg>\n";
  return svg.str();
}

}  // namespace hyperlat
