#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "maur/model.hpp"

namespace maur {

// One value per augmented initial variable; length equals the model order q.
using InitValues = std::vector<double>;

// Residual sequences are indexed by time i = 1-q .. n and stored in a plain
// vector with offset q-1, so z[q-1+i] holds z_i and the first q entries are
// the initial-value block.

// MA(1) recursion  z_i = Y_i + theta z_{i-1},  z_0 = z_init,  where Y_i is
// the series after subtracting the regression part (when b is given).
// Returns z_0..z_n (n+1 values).  No powers of theta are formed explicitly.
std::vector<double> residuals_ma1(const Sample& sample, double theta, double z_init,
                                  const std::vector<double>* b = nullptr);

// Root-wise cascade for real roots r_1..r_q: stage s inverts (1 - r_s B),
// carrying its own seed.  Stage s output v^(s) lives on indices 1-s..n with
//     v^(s)_{1-s} = inits[s-1],
//     v^(s)_i     = v^(s-1)_i + r_s v^(s)_{i-1}   for i = 2-s..n,
// where stage 0 is the data.  Seeded this way, stage s estimates the
// partially inverted process prod_{m>s}(1 - r_m B) Z_t, and at the true
// roots with true seeds the final stage reproduces the generating noise
// exactly.  Verified against the explicit geometric-sum solutions for q=2
// and q=3 in the test suite; the recursion never divides by root
// differences, so repeated roots are handled natively.
// Returns z_{1-q}..z_n (n+q values).
std::vector<double> residuals_cascade(const Sample& sample,
                                      const std::vector<double>& real_roots,
                                      const InitValues& inits);
std::vector<double> residuals_cascade(const Sample& sample, const RootSet& roots,
                                      const InitValues& inits);

// Residuals as an affine function of the linear parameters u:
//     z(u) = base + cols * u,
// where u stacks the q initial values first and then the p+1 regression
// coefficients (when built with regressors).  Exact, not a linearization.
struct AffineResiduals {
  Eigen::VectorXd base;           // residuals at u = 0
  Eigen::MatrixXd cols;           // (n+q) x m sensitivity matrix
  int q = 0;                      // number of initial-value columns
  int n = 0;
  std::vector<std::string> labels;
  bool rank_deficient = false;    // set when the regressor block is degenerate

  int m() const { return static_cast<int>(cols.cols()); }
  Eigen::VectorXd at(const Eigen::VectorXd& u) const { return base + cols * u; }
};

// Expansion in the cascade's stage seeds (real roots only), built from m+1
// cascade passes.
AffineResiduals affine_expansion(const Sample& sample,
                                 const std::vector<double>& real_roots,
                                 bool with_regressors);
AffineResiduals affine_expansion(const Sample& sample, const RootSet& roots,
                                 bool with_regressors);

// Expansion in the leading residuals (z_{1-q}..z_0) via the coefficient
// recursion  z_t = Y_t - sum_j c_j z_{t-j}.  Spans the same affine family as
// the cascade expansion through a unimodular change of seeds, so sum-of-
// squares minima and initial-block Gram determinants agree; unlike the
// cascade it covers complex conjugate root pairs, since only the (real)
// coefficients enter.
AffineResiduals affine_from_coeffs(const Sample& sample,
                                   const std::vector<double>& coeffs,
                                   bool with_regressors);

}  // namespace maur
