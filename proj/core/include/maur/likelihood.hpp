#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "maur/model.hpp"
#include "maur/residuals.hpp"

namespace maur {

struct LikelihoodValue {
  double profile_loglik = 0.0;      // includes the -(n/2)log(2*pi) constant
  double sigma2_hat = 0.0;          // s_min / n
  double s_min = 0.0;               // minimized sum of squared residuals
  double logdet = 0.0;              // log det of the initial-value Gram matrix
  Eigen::VectorXd linear_estimates; // fitted initial values, then regression coefficients
};

// Exact Gaussian profile log-likelihood of an MA(q) (optionally with
// regression covariates), computed by integrating the q augmented initial
// values out of the joint residual density in closed form:
//
//   f(x) = (2 pi sigma^2)^{-n/2} det(Bv'Bv)^{-1/2} exp(-S_min / (2 sigma^2)),
//
// where z(u) = a + Bv v + Bb b is the affine residual expansion, S_min is
// the least-squares minimum over all linear parameters, and the determinant
// involves only the initial-value block (regression coefficients are
// concentrated by minimization, not integration).  Profiling sigma^2 gives
// sigma2_hat = S_min / n and
//
//   profile_loglik = -(n/2)(1 + log(2 pi sigma2_hat)) - (1/2) log det(Bv'Bv).
//
// The least-squares step uses a column-pivoted QR with an explicitly formed
// residual vector rather than normal equations; near the boundary the design
// columns can be large and the quadratic-form route loses precision.
class ProfileLikelihood {
 public:
  explicit ProfileLikelihood(const Sample& sample, bool use_regressors = true);

  // Any real coefficient vector, real or complex roots.
  LikelihoodValue eval_coeffs(const std::vector<double>& coeffs) const;
  LikelihoodValue eval_roots(const RootSet& roots) const;
  LikelihoodValue eval_roots(const std::vector<double>& real_roots) const;

  const Sample& sample() const { return sample_; }

 private:
  LikelihoodValue from_expansion(const AffineResiduals& e) const;

  Sample sample_;
  bool use_regressors_;
};

// One-shot conveniences.
LikelihoodValue exact_profile_loglik(const Sample& sample, const RootSet& roots);
LikelihoodValue exact_profile_loglik(const Sample& sample,
                                     const std::vector<double>& coeffs);

double sum_squares(std::span<const double> residuals);

// Local coordinates around a one-unit-root MA(2): theta = 1 + beta/n,
// alpha = alpha0 + gamma/sqrt(n), initial values offset by
// sigma0 * eta_k / sqrt(n) from their true values.  For MA(1), gamma is
// ignored and eta has one entry.
struct LocalParams {
  double beta = 0.0;
  double gamma = 0.0;
  std::vector<double> eta;  // length q
};

// Simulation-study objective U_n = -2 sum r_i Z_i / sigma0^2
//                                  + sum r_i^2 / sigma0^2,  r_i = Z_i - z_i,
// evaluated at the local parameterization above.  Requires the sample to
// carry its generating noise; true_roots are the generating reciprocal
// roots (first entry the unit root for q = 2).
double joint_objective_un(const Sample& sample, const LocalParams& local,
                          const std::vector<double>& true_roots);

}  // namespace maur
