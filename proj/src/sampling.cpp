#include "entrobound/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace entrobound {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

double SplitMix64::uniform() { return (next() >> 11) * 0x1.0p-53; }

InverseCdfTable::InverseCdfTable(const std::function<double(double)>& density,
                                 double a, double b, int intervals) {
  if (intervals < 2 || intervals % 2 != 0)
    throw std::invalid_argument("InverseCdfTable: intervals must be even, >= 2");
  if (!(b > a)) throw std::invalid_argument("InverseCdfTable: empty domain");
  a_ = a;
  h_ = (b - a) / intervals;
  std::vector<double> f(intervals + 1);
  for (int i = 0; i <= intervals; ++i) {
    f[i] = density(a + i * h_);
    if (!(f[i] >= 0.0) || !std::isfinite(f[i]))
      throw std::invalid_argument(
          "InverseCdfTable: density must be finite and nonnegative");
  }
  cdf_.assign(intervals + 1, 0.0);
  for (int i = 0; i + 2 <= intervals; i += 2) {
    // Simpson over the pair, quadratic fit for the half-panel point.
    cdf_[i + 1] = cdf_[i] + h_ * (5.0 * f[i] + 8.0 * f[i + 1] - f[i + 2]) / 12.0;
    cdf_[i + 2] = cdf_[i] + h_ * (f[i] + 4.0 * f[i + 1] + f[i + 2]) / 3.0;
  }
  const double total = cdf_.back();
  if (!(total > 0.0) || !std::isfinite(total))
    throw std::invalid_argument("InverseCdfTable: density integrates to zero");
  double prev = 0.0;
  for (double& c : cdf_) {
    c = std::max(c / total, prev);  // quadratic fit can dip below machine zero
    prev = c;
  }
  cdf_.back() = 1.0;
}

double InverseCdfTable::sample(double u) const {
  if (u <= 0.0) return a_;
  if (u >= 1.0) return a_ + h_ * (cdf_.size() - 1);
  const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  const std::size_t k = static_cast<std::size_t>(it - cdf_.begin()) - 1;
  const double span = cdf_[k + 1] - cdf_[k];
  const double frac = span > 0.0 ? (u - cdf_[k]) / span : 0.0;
  return a_ + h_ * (k + frac);
}

PointCloud sample_state(const RadialState& state,
                        const QuantumNumberChain& chain, std::size_t count,
                        std::uint64_t seed) {
  state.validate();
  chain.validate();
  if (state.d != chain.d)
    throw std::invalid_argument("sample_state: state and chain dimensions differ");
  if (count < 1) throw std::invalid_argument("sample_state: count must be >= 1");
  const int d = state.d;

  // Radial CDF over the transform variable; the map endpoint t = 1 sits at
  // r = infinity where the amplitude vanishes.
  const RadialTransform transform = QuadratureSpec{}.radial_transform;
  const auto radial_density_t = [&](double t) {
    const double r = radial_map(transform, t);
    if (!std::isfinite(r)) return 0.0;
    const double v = state.eval(r);
    if (v == 0.0) return 0.0;
    return v * v * std::pow(r, d - 1) * radial_map_jacobian(transform, t);
  };
  const InverseCdfTable radial_cdf(radial_density_t, 0.0, 1.0, 8192);

  std::vector<InverseCdfTable> angle_cdf;
  angle_cdf.reserve(d - 2);
  for (int j = 1; j <= d - 2; ++j)
    angle_cdf.emplace_back(
        [&](double theta) { return angle_marginal(chain, j, theta); }, 0.0,
        M_PI, 4096);

  SplitMix64 rng(seed);
  PointCloud cloud;
  cloud.d = d;
  cloud.coords.resize(count * d);
  std::vector<double> angles(d - 1, 0.0);
  for (std::size_t i = 0; i < count; ++i) {
    const double r = radial_map(transform, radial_cdf.sample(rng.uniform()));
    for (int j = 0; j < d - 2; ++j) angles[j] = angle_cdf[j].sample(rng.uniform());
    angles[d - 2] = 2.0 * M_PI * rng.uniform();
    double* x = &cloud.coords[i * d];
    double sin_prod = r;
    for (int k = 0; k < d - 2; ++k) {
      x[k] = sin_prod * std::cos(angles[k]);
      sin_prod *= std::sin(angles[k]);
    }
    x[d - 2] = sin_prod * std::cos(angles[d - 2]);
    x[d - 1] = sin_prod * std::sin(angles[d - 2]);
  }
  return cloud;
}

std::vector<double> CovarianceEstimate::normalized_diagonal() const {
  std::vector<double> diag(d);
  for (int i = 0; i < d; ++i) diag[i] = normalized[i * d + i];
  return diag;
}

CovarianceEstimate empirical_covariance(const PointCloud& points) {
  const int d = points.d;
  const std::size_t n = points.size();
  if (d < 1) throw std::domain_error("empirical_covariance: empty cloud");
  if (n < 2) throw std::domain_error("empirical_covariance: needs >= 2 points");
  CovarianceEstimate est;
  est.d = d;
  est.second_moment.assign(d * d, 0.0);
  // Fixed-size chunks accumulated in index order: the reduction order, and
  // with it the result, stays identical under any future parallel split.
  const std::size_t chunk = 4096;
  std::vector<double> partial(d * d);
  for (std::size_t start = 0; start < n; start += chunk) {
    const std::size_t stop = std::min(n, start + chunk);
    std::fill(partial.begin(), partial.end(), 0.0);
    for (std::size_t p = start; p < stop; ++p) {
      const double* x = &points.coords[p * d];
      for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) partial[i * d + j] += x[i] * x[j];
    }
    for (int i = 0; i < d * d; ++i) est.second_moment[i] += partial[i];
  }
  double trace = 0.0;
  for (int i = 0; i < d; ++i) {
    for (int j = i; j < d; ++j) {
      est.second_moment[i * d + j] /= n;
      est.second_moment[j * d + i] = est.second_moment[i * d + j];
    }
    trace += est.second_moment[i * d + i];
  }
  if (!(trace > 0.0))
    throw std::domain_error("empirical_covariance: degenerate cloud, zero trace");
  est.normalized.resize(d * d);
  for (int i = 0; i < d * d; ++i) est.normalized[i] = est.second_moment[i] / trace;
  return est;
}

}  // namespace entrobound
