#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace maur {

// Coefficient convention used throughout:
//   X_t = Z_t + c_1 Z_{t-1} + ... + c_q Z_{t-q},
// so the MA polynomial is 1 + c_1 B + ... + c_q B^q = prod_j (1 - r_j B)
// with r_j the reciprocal roots.  An MA(1) with root theta has c_1 = -theta.

struct MAModel {
  int q = 1;
  std::vector<double> coeffs;  // c_1..c_q
  double sigma = 1.0;

  MAModel() = default;
  MAModel(std::vector<double> c, double sigma_in = 1.0);
  void validate() const;  // throws std::invalid_argument on violation
};

// Reciprocal roots of the MA polynomial, sorted by (modulus, argument).
// Complex roots must occur in conjugate pairs for the induced coefficients
// to be real.
struct RootSet {
  std::vector<std::complex<double>> roots;
  bool conjugate_closed = true;

  int q() const { return static_cast<int>(roots.size()); }
  bool all_real(double tol = 1e-12) const;
  std::vector<double> real_parts() const;
};

// Where a coefficient pair sits in the closed MA(2) invertibility triangle
//   { -c1 - c2 <= 1,  c1 - c2 <= 1,  |c2| <= 1 }.
// Each edge/vertex corresponds to unit roots:
//   edge_root_plus   : a reciprocal root at +1          (-c1 - c2 = 1)
//   edge_root_minus  : a reciprocal root at -1          ( c1 - c2 = 1)
//   edge_complex_unit: conjugate pair on the unit circle ( c2 = 1, |c1|<2)
//   vertex_double_plus : double root at +1   (c1,c2) = (-2, 1)
//   vertex_double_minus: double root at -1   (c1,c2) = ( 2, 1)
//   vertex_plus_minus  : roots at +1 and -1  (c1,c2) = ( 0,-1)
enum class RegionSegment {
  interior,
  edge_root_plus,
  edge_root_minus,
  edge_complex_unit,
  vertex_double_plus,
  vertex_double_minus,
  vertex_plus_minus,
};

enum class RootKind { real_distinct, real_repeated, complex_pair };

struct RegionLabel {
  RegionSegment segment = RegionSegment::interior;
  RootKind kind = RootKind::real_distinct;

  bool interior() const { return segment == RegionSegment::interior; }
  bool on_segment(RegionSegment s) const { return segment == s; }
};

const char* to_string(RegionSegment s);

// Observed series x_1..x_n plus optional regressor columns f_k(t/n).
// Simulated samples retain the generating noise Z_{1-q}..Z_n and sigma0 so
// that simulation studies can evaluate objectives against the truth.
struct Sample {
  std::vector<double> x;                       // x[t-1] = X_t
  std::optional<Eigen::MatrixXd> regressors;   // n x (p+1), column k = f_k(t/n)
  std::vector<double> noise;                   // Z_{1-gen_q}..Z_n when simulated
  int gen_q = 0;                               // order of the generating model
  double sigma0 = 0.0;                         // generating noise scale
  std::uint64_t seed = 0;
  std::string provenance;

  int n() const { return static_cast<int>(x.size()); }
  bool has_regressors() const { return regressors.has_value(); }
  bool has_noise() const { return !noise.empty(); }
  void validate() const;
};

// Tolerance for deciding that a point sits on a region boundary; chosen a
// decade above the optimizer parameter tolerance (1e-8).
inline constexpr double kRegionTol = 1e-9;

// Expand prod_j (1 - r_j B) into c_1..c_q.  Throws "complex coefficients"
// if the root set is not closed under conjugation (imaginary residue above
// 1e-12 of the coefficient scale).
std::vector<double> coeffs_from_roots(const RootSet& roots);
std::vector<double> coeffs_from_roots(const std::vector<std::complex<double>>& roots);

// Reciprocal roots of 1 + c_1 B + ... + c_q B^q, i.e. the eigenvalues of the
// companion matrix of z^q + c_1 z^{q-1} + ... + c_q, sorted by
// (modulus, argument).  Round-trips with coeffs_from_roots to 1e-10.
RootSet roots_from_coeffs(const std::vector<double>& coeffs);

// Classify (c1,c2) against the closed triangle with boundary tolerance tol.
// Throws "non-invertible beyond unit root" outside the closed region.
RegionLabel classify_region(double c1, double c2, double tol = kRegionTol);

// X_t = Z_t + sum_j c_j Z_{t-j}, Z iid N(0, sigma^2) from the seeded
// generator.  Pure function of (model, n, seed).
Sample simulate_ma(const MAModel& model, int n, std::uint64_t seed);

// X_t = sum_k b_k f_k(t/n) + Z_t - theta0 Z_{t-1}.
Sample simulate_regression_ma1(const std::vector<double>& b,
                               const Eigen::MatrixXd& regressors,
                               double theta0, int n, std::uint64_t seed,
                               double sigma = 1.0);

// y_t = x_t - x_{t-1}; length n-1.  Regressors and noise provenance are
// dropped: differencing changes what both would mean.
Sample difference(const Sample& sample);

// Polynomial covariates f_k(t/n) = (t/n)^k for k = 0..p, t = 1..n.
Eigen::MatrixXd polynomial_regressors(int n, int p);

}  // namespace maur
