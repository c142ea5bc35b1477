#include "maur/model.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "maur/rng.hpp"

namespace maur {

MAModel::MAModel(std::vector<double> c, double sigma_in)
    : q(static_cast<int>(c.size())), coeffs(std::move(c)), sigma(sigma_in) {
  validate();
}

void MAModel::validate() const {
  if (q < 1) throw std::invalid_argument("MAModel: order q must be >= 1");
  if (static_cast<int>(coeffs.size()) != q)
    throw std::invalid_argument("MAModel: coeffs size must equal q");
  if (!(sigma > 0.0)) throw std::invalid_argument("MAModel: sigma must be > 0");
  for (double c : coeffs)
    if (!std::isfinite(c)) throw std::invalid_argument("MAModel: non-finite coefficient");
}

bool RootSet::all_real(double tol) const {
  for (const auto& r : roots)
    if (std::abs(r.imag()) > tol * std::max(1.0, std::abs(r.real()))) return false;
  return true;
}

std::vector<double> RootSet::real_parts() const {
  std::vector<double> out(roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i) out[i] = roots[i].real();
  return out;
}

const char* to_string(RegionSegment s) {
  switch (s) {
    case RegionSegment::interior: return "interior";
    case RegionSegment::edge_root_plus: return "edge_root_plus";
    case RegionSegment::edge_root_minus: return "edge_root_minus";
    case RegionSegment::edge_complex_unit: return "edge_complex_unit";
    case RegionSegment::vertex_double_plus: return "vertex_double_plus";
    case RegionSegment::vertex_double_minus: return "vertex_double_minus";
    case RegionSegment::vertex_plus_minus: return "vertex_plus_minus";
  }
  return "unknown";
}

void Sample::validate() const {
  for (double v : x)
    if (!std::isfinite(v)) throw std::invalid_argument("Sample: non-finite value");
  if (regressors) {
    if (regressors->rows() != n())
      throw std::invalid_argument("Sample: regressor rows must equal n");
    if (!regressors->allFinite())
      throw std::invalid_argument("Sample: non-finite regressor value");
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(*regressors);
    if (qr.rank() < regressors->cols())
      throw std::invalid_argument("Sample: regressor matrix is rank deficient");
  }
}

std::vector<double> coeffs_from_roots(const std::vector<std::complex<double>>& roots) {
  const int q = static_cast<int>(roots.size());
  std::vector<std::complex<double>> poly{1.0};
  poly.reserve(q + 1);
  for (const auto& r : roots) {
    // multiply by (1 - r B)
    poly.push_back(0.0);
    for (int k = static_cast<int>(poly.size()) - 1; k >= 1; --k)
      poly[k] -= r * poly[k - 1];
  }
  double scale = 1.0;
  for (const auto& p : poly) scale = std::max(scale, std::abs(p));
  std::vector<double> out(q);
  for (int k = 1; k <= q; ++k) {
    if (std::abs(poly[k].imag()) > 1e-12 * scale)
      throw std::invalid_argument(
          "coeffs_from_roots: complex coefficients (root set not closed under conjugation)");
    out[k - 1] = poly[k].real();
  }
  return out;
}

std::vector<double> coeffs_from_roots(const RootSet& roots) {
  return coeffs_from_roots(roots.roots);
}

RootSet roots_from_coeffs(const std::vector<double>& coeffs) {
  const int q = static_cast<int>(coeffs.size());
  if (q < 1) throw std::invalid_argument("roots_from_coeffs: empty coefficients");
  for (double c : coeffs)
    if (!std::isfinite(c)) throw std::invalid_argument("roots_from_coeffs: non-finite coefficient");

  RootSet out;
  if (q == 1) {
    out.roots = {std::complex<double>(-coeffs[0], 0.0)};
    return out;
  }
  // Companion matrix of z^q + c_1 z^{q-1} + ... + c_q; robust for repeated
  // and near-repeated roots, no closed form needed.
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(q, q);
  for (int i = 1; i < q; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < q; ++i) comp(0, i) = -coeffs[i];
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp, /*computeEigenvectors=*/false);
  out.roots.resize(q);
  for (int i = 0; i < q; ++i) out.roots[i] = es.eigenvalues()[i];
  std::sort(out.roots.begin(), out.roots.end(),
            [](const std::complex<double>& a, const std::complex<double>& b) {
              const double ma = std::abs(a), mb = std::abs(b);
              if (ma != mb) return ma < mb;
              return std::arg(a) < std::arg(b);
            });
  return out;
}

RegionLabel classify_region(double c1, double c2, double tol) {
  if (!std::isfinite(c1) || !std::isfinite(c2))
    throw std::invalid_argument("classify_region: non-finite input");
  const double g_plus = 1.0 + c1 + c2;   // 0 on the +1-root edge
  const double g_minus = 1.0 - c1 + c2;  // 0 on the -1-root edge
  const double g_top = 1.0 - c2;         // 0 on the c2 = 1 edge
  if (g_plus < -tol || g_minus < -tol || g_top < -tol)
    throw std::invalid_argument("classify_region: non-invertible beyond unit root");

  const double disc = c1 * c1 - 4.0 * c2;
  RootKind kind = RootKind::real_distinct;
  if (disc < -tol) kind = RootKind::complex_pair;
  else if (disc <= tol) kind = RootKind::real_repeated;

  RegionLabel label;
  label.kind = kind;
  const bool on_plus = g_plus <= tol;
  const bool on_minus = g_minus <= tol;
  const bool on_top = g_top <= tol;
  if (on_plus && on_top) label.segment = RegionSegment::vertex_double_plus;
  else if (on_minus && on_top) label.segment = RegionSegment::vertex_double_minus;
  else if (on_plus && on_minus) label.segment = RegionSegment::vertex_plus_minus;
  else if (on_plus) label.segment = RegionSegment::edge_root_plus;
  else if (on_minus) label.segment = RegionSegment::edge_root_minus;
  else if (on_top) label.segment = RegionSegment::edge_complex_unit;
  else label.segment = RegionSegment::interior;
  return label;
}

Sample simulate_ma(const MAModel& model, int n, std::uint64_t seed) {
  model.validate();
  const int q = model.q;
  if (n < q + 1) throw std::invalid_argument("simulate_ma: n must be >= q+1");

  Rng rng(seed);
  Sample s;
  s.gen_q = q;
  s.sigma0 = model.sigma;
  s.seed = seed;
  s.noise.resize(n + q);  // Z_{1-q}..Z_n in time order
  for (auto& z : s.noise) z = model.sigma * rng.gaussian();
  s.x.resize(n);
  for (int t = 1; t <= n; ++t) {
    double acc = s.noise[q - 1 + t];
    for (int j = 1; j <= q; ++j) acc += model.coeffs[j - 1] * s.noise[q - 1 + t - j];
    s.x[t - 1] = acc;
  }
  return s;
}

Sample simulate_regression_ma1(const std::vector<double>& b,
                               const Eigen::MatrixXd& regressors,
                               double theta0, int n, std::uint64_t seed,
                               double sigma) {
  if (regressors.rows() != n)
    throw std::invalid_argument("simulate_regression_ma1: regressor rows must equal n");
  if (regressors.cols() != static_cast<Eigen::Index>(b.size()))
    throw std::invalid_argument("simulate_regression_ma1: coefficient/regressor mismatch");
  if (!(sigma > 0.0)) throw std::invalid_argument("simulate_regression_ma1: sigma must be > 0");

  Rng rng(seed);
  Sample s;
  s.gen_q = 1;
  s.sigma0 = sigma;
  s.seed = seed;
  s.regressors = regressors;
  s.noise.resize(n + 1);  // Z_0..Z_n
  for (auto& z : s.noise) z = sigma * rng.gaussian();
  s.x.resize(n);
  for (int t = 1; t <= n; ++t) {
    double mean = 0.0;
    for (Eigen::Index k = 0; k < regressors.cols(); ++k)
      mean += b[k] * regressors(t - 1, k);
    s.x[t - 1] = mean + s.noise[t] - theta0 * s.noise[t - 1];
  }
  return s;
}

Sample difference(const Sample& sample) {
  const int n = sample.n();
  if (n < 2) throw std::invalid_argument("difference: need at least two observations");
  Sample out;
  out.x.resize(n - 1);
  for (int t = 1; t < n; ++t) out.x[t - 1] = sample.x[t] - sample.x[t - 1];
  out.seed = sample.seed;
  out.provenance = sample.provenance.empty() ? "differenced" : sample.provenance + ";differenced";
  return out;
}

Eigen::MatrixXd polynomial_regressors(int n, int p) {
  Eigen::MatrixXd f(n, p + 1);
  for (int t = 1; t <= n; ++t) {
    double v = 1.0;
    const double u = static_cast<double>(t) / n;
    for (int k = 0; k <= p; ++k) {
      f(t - 1, k) = v;
      v *= u;
    }
  }
  return f;
}

}  // namespace maur
