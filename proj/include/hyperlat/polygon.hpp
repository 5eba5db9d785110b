#pragma once

// Schwarz-Christoffel edge integrals for polygons with interior angles
// (1 - mu_j) pi, closure relations and the area form on polygon space.
// Floating point, unlike the rest of the library.

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperlat {

struct PolygonError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

using cplx = std::complex<double>;

/// Gauss-Jacobi rule for (1 - t)^alpha (1 + t)^beta on [-1, 1] (Golub-Welsch).
struct GaussJacobi {
  std::vector<double> nodes, weights;
};
GaussJacobi gauss_jacobi(int n, double alpha, double beta);

/// Weights mu_j in (0, 1) summing to 2, n >= 4.
void validate_weights(const std::vector<double>& mu);
/// Strictly increasing points.
void validate_points(const std::vector<double>& z);

struct PolygonData {
  std::vector<double> mu, z;
  std::vector<cplx> omega;   // exp(pi i (mu_1 + ... + mu_j)); omega_n = 1
  std::vector<double> l;     // edge lengths; l_n covers (z_n, inf) and (-inf, z_1)
  std::vector<cplx> w;       // omega_j l_j
  std::vector<cplx> vertices;  // v_n = 0, v_1 = l_n, v_{j+1} = v_j + w_j
  std::vector<double> angles;  // interior angle at v_j (vertex of z_j)
  std::vector<double> error_estimate;  // per edge, summed 24- vs 12-node differences
  std::vector<int> nodes_used;
  double area = 0;
};

/// l_j = integral of prod_k |s - z_k|^{-mu_k} over the j-th edge. Panels are
/// graded toward both endpoints, the end panels carry Jacobi weights matched
/// to the endpoint singularities, and a panel is bisected until its 24- and
/// 12-node values agree to its share of `tol` (relative above 1). Throws past
/// `max_nodes` nodes per edge.
PolygonData edge_integrals(const std::vector<double>& z, const std::vector<double>& mu, double tol = 1e-8,
                           int max_nodes = 2048);

/// Polygon data for given lengths (no integration).
PolygonData polygon_from_lengths(const std::vector<double>& mu, const std::vector<double>& l);

struct Residuals {
  double r1 = 0, r2 = 0;  // |sum omega_j l_j|, |sum conj(omega_j) l_j|
};
Residuals closure_residuals(const PolygonData& d);
Residuals closure_residuals(const std::vector<double>& mu, const std::vector<double>& l);

std::vector<cplx> phases(const std::vector<double>& mu);

/// Area as the quadratic form l^T Q l on length vectors.
Eigen::MatrixXd area_matrix(const std::vector<double>& mu);
double shoelace_area(const std::vector<cplx>& vertices);

struct AreaSignature {
  int dimension = 0;  // of the closure subspace
  int positive = 0, negative = 0, zero = 0;  // of -Q on it
  std::vector<double> eigenvalues;
};

/// Signature of -Q on the closure subspace, using an orthonormal basis from
/// Gram-Schmidt on `samples` random closure-satisfying vectors.
AreaSignature area_form(const std::vector<double>& mu, int samples = 200, std::uint64_t seed = 1);

/// Prevertices of the regular n-gon with equal weights 2/n: -cot(pi (k - 1/2) / n).
std::vector<double> regular_prevertices(int n);

struct RegularSearch {
  std::vector<double> z;
  double spread = 0;  // max |l_j / mean - 1|
  int iterations = 0;
};

/// Gauss-Newton on l_j = mean(l) from a perturbed symmetric start, with
/// z_1, z_2 and z_n fixed to remove the Moebius freedom.
RegularSearch find_regular(int n, double perturbation = 0.05, std::uint64_t seed = 7, double tol = 1e-12);

std::string polygon_svg(const PolygonData& d, double size = 400);

}  // namespace hyperlat
