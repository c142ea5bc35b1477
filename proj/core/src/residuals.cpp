#include "maur/residuals.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace maur {

namespace {

// Series minus regression part: Y_t = x_t - sum_k b_k f_k(t/n).
std::vector<double> detrended(const Sample& sample, const std::vector<double>* b) {
  if (b == nullptr) return sample.x;
  if (!sample.has_regressors())
    throw std::invalid_argument("residuals: coefficients given but sample has no regressors");
  const auto& f = *sample.regressors;
  if (f.cols() != static_cast<Eigen::Index>(b->size()))
    throw std::invalid_argument("residuals: regressor/coefficient mismatch");
  std::vector<double> y = sample.x;
  for (int t = 0; t < sample.n(); ++t)
    for (Eigen::Index k = 0; k < f.cols(); ++k) y[t] -= (*b)[k] * f(t, k);
  return y;
}

// The cascade on an arbitrary driving sequence (index 1..n at offset q-1 in
// a length n+q buffer).  `drive` is consumed as stage 0.
void run_cascade(std::vector<double>& drive, const std::vector<double>& roots,
                 const InitValues& inits, int n) {
  const int q = static_cast<int>(roots.size());
  std::vector<double> cur(n + q);
  std::vector<double>* prev = &drive;
  for (int s = 1; s <= q; ++s) {
    const double r = roots[s - 1];
    const int lo = 1 - s;  // seed index
    cur.assign(n + q, 0.0);
    cur[q - 1 + lo] = inits[s - 1];
    for (int i = lo + 1; i <= n; ++i)
      cur[q - 1 + i] = (*prev)[q - 1 + i] + r * cur[q - 1 + i - 1];
    std::swap(*prev, cur);
  }
}

}  // namespace

std::vector<double> residuals_ma1(const Sample& sample, double theta, double z_init,
                                  const std::vector<double>* b) {
  const int n = sample.n();
  const std::vector<double> y = detrended(sample, b);
  std::vector<double> z(n + 1);
  z[0] = z_init;
  for (int i = 1; i <= n; ++i) z[i] = y[i - 1] + theta * z[i - 1];
  return z;
}

std::vector<double> residuals_cascade(const Sample& sample,
                                      const std::vector<double>& real_roots,
                                      const InitValues& inits) {
  const int q = static_cast<int>(real_roots.size());
  const int n = sample.n();
  if (static_cast<int>(inits.size()) != q)
    throw std::invalid_argument("residuals_cascade: inits length must equal q");
  for (double r : real_roots)
    if (!std::isfinite(r)) throw std::invalid_argument("residuals_cascade: non-finite root");

  std::vector<double> buf(n + q, 0.0);
  for (int t = 1; t <= n; ++t) buf[q - 1 + t] = sample.x[t - 1];
  run_cascade(buf, real_roots, inits, n);
  return buf;
}

std::vector<double> residuals_cascade(const Sample& sample, const RootSet& roots,
                                      const InitValues& inits) {
  if (!roots.all_real())
    throw std::invalid_argument(
        "residuals_cascade: stage recursion needs real roots; "
        "use affine_from_coeffs for complex conjugate pairs");
  return residuals_cascade(sample, roots.real_parts(), inits);
}

namespace {

AffineResiduals assemble_expansion(
    const Sample& sample, int q, bool with_regressors,
    const std::function<std::vector<double>(const std::vector<double>& y,
                                            const InitValues&)>& residuals_of) {
  const int n = sample.n();
  const int p1 = with_regressors && sample.has_regressors()
                     ? static_cast<int>(sample.regressors->cols())
                     : 0;
  if (with_regressors && !sample.has_regressors())
    throw std::invalid_argument("affine expansion: sample has no regressors");

  AffineResiduals out;
  out.q = q;
  out.n = n;
  out.cols.resize(n + q, q + p1);
  InitValues zero(q, 0.0);

  const std::vector<double> base = residuals_of(sample.x, zero);
  out.base = Eigen::Map<const Eigen::VectorXd>(base.data(), n + q);

  // one extra pass per linear parameter: unit seed columns ...
  for (int k = 0; k < q; ++k) {
    InitValues e(q, 0.0);
    e[k] = 1.0;
    const std::vector<double> zk = residuals_of(sample.x, e);
    for (int i = 0; i < n + q; ++i) out.cols(i, k) = zk[i] - base[i];
    out.labels.push_back("init" + std::to_string(k));
  }
  // ... then regression columns, driven by -f_k with zero seeds.
  for (int k = 0; k < p1; ++k) {
    std::vector<double> mf(n);
    for (int t = 0; t < n; ++t) mf[t] = -(*sample.regressors)(t, k);
    const std::vector<double> zk = residuals_of(mf, zero);
    for (int i = 0; i < n + q; ++i) out.cols(i, q + k) = zk[i];
    out.labels.push_back("b" + std::to_string(k));
  }

  if (p1 > 0) {
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(out.cols);
    out.rank_deficient = qr.rank() < out.cols.cols();
  }
  return out;
}

}  // namespace

AffineResiduals affine_expansion(const Sample& sample,
                                 const std::vector<double>& real_roots,
                                 bool with_regressors) {
  const int q = static_cast<int>(real_roots.size());
  const int n = sample.n();
  auto residuals_of = [&](const std::vector<double>& y, const InitValues& u) {
    std::vector<double> buf(n + q, 0.0);
    for (int t = 1; t <= n; ++t) buf[q - 1 + t] = y[t - 1];
    run_cascade(buf, real_roots, u, n);
    return buf;
  };
  return assemble_expansion(sample, q, with_regressors, residuals_of);
}

AffineResiduals affine_expansion(const Sample& sample, const RootSet& roots,
                                 bool with_regressors) {
  if (!roots.all_real())
    throw std::invalid_argument(
        "affine_expansion: stage recursion needs real roots; "
        "use affine_from_coeffs for complex conjugate pairs");
  return affine_expansion(sample, roots.real_parts(), with_regressors);
}

AffineResiduals affine_from_coeffs(const Sample& sample,
                                   const std::vector<double>& coeffs,
                                   bool with_regressors) {
  const int q = static_cast<int>(coeffs.size());
  const int n = sample.n();
  auto residuals_of = [&](const std::vector<double>& y, const InitValues& seeds) {
    std::vector<double> z(n + q);
    for (int k = 0; k < q; ++k) z[k] = seeds[k];  // z_{1-q}..z_0
    for (int t = 1; t <= n; ++t) {
      double acc = y[t - 1];
      for (int j = 1; j <= q; ++j) acc -= coeffs[j - 1] * z[q - 1 + t - j];
      z[q - 1 + t] = acc;
    }
    return z;
  };
  return assemble_expansion(sample, q, with_regressors, residuals_of);
}

}  // namespace maur
