#include "entrobound/angular.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace entrobound {
namespace {

// mu_i with the conventions mu_{d-1} -> |m| and mu_d = 0.
int mu_at(const QuantumNumberChain& chain, int i) {
  if (i == chain.d) return 0;
  if (i == chain.d - 1) return chain.abs_m();
  return chain.mu[i - 1];
}

void check_angle(double theta, double upper, const char* what) {
  if (!(theta >= 0.0) || !(theta <= upper))
    throw std::domain_error(std::string(what) + ": angle out of range");
}

// Squared normalized Gegenbauer factor of theta_j, no measure weight:
// f_j = [C_{n_j}^{lam_j}(cos t) (sin t)^{mu_{j+1}}]^2 / Z(lam_j, n_j).
double factor_density(const QuantumNumberChain& chain, int j, double theta) {
  const PolyIndex idx = derived_indices(chain, j);
  const double c = gegenbauer(idx, std::cos(theta));
  const double s = std::sin(theta);
  return c * c * std::pow(s, 2 * mu_at(chain, j + 1)) / gegenbauer_norm(idx);
}

// rho^lambda - rho without cancellation near lambda = 1; tends to
// (lambda-1) rho ln rho there.
double power_excess(double v, double lambda) {
  if (v <= 0.0) return 0.0;
  const double log_v = std::log(v);
  const double x = (lambda - 1.0) * log_v;
  if (x >= 700.0) return std::exp(lambda * log_v);  // v itself is negligible
  return v * std::expm1(x);
}

}  // namespace

void QuantumNumberChain::validate() const {
  if (d < 2) throw std::invalid_argument("QuantumNumberChain: requires d >= 2");
  if (mu.size() != static_cast<std::size_t>(d - 1))
    throw std::invalid_argument("QuantumNumberChain: expected " +
                                std::to_string(d - 1) + " quantum numbers, got " +
                                std::to_string(mu.size()));
  if (d == 2) return;  // single magnetic number, unconstrained
  for (int i = 0; i + 2 < d - 1; ++i)
    if (mu[i] < mu[i + 1])
      throw std::invalid_argument("QuantumNumberChain: mu must be nonincreasing");
  if (mu[d - 3] < std::abs(mu[d - 2]))
    throw std::invalid_argument("QuantumNumberChain: mu_{d-2} must be >= |m|");
}

int QuantumNumberChain::abs_m() const { return std::abs(mu.back()); }

int QuantumNumberChain::l() const { return d == 2 ? abs_m() : mu.front(); }

void CorrelationDiagonal::validate() const {
  if (entries.empty())
    throw std::invalid_argument("CorrelationDiagonal: no entries");
  double sum = 0.0;
  for (double e : entries) {
    if (!(e >= 0.0) || e > 1.0 + 1e-12)
      throw std::invalid_argument("CorrelationDiagonal: entry outside [0, 1]");
    sum += e;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("CorrelationDiagonal: trace is " +
                                std::to_string(sum) + ", expected 1");
}

PolyIndex derived_indices(const QuantumNumberChain& chain, int j) {
  chain.validate();
  if (j < 1 || j > chain.d - 1)
    throw std::invalid_argument("derived_indices: j must be in 1..d-1");
  PolyIndex idx;
  idx.n = mu_at(chain, j) - mu_at(chain, j + 1);
  idx.lam = 0.5 * (chain.d - 1 - j) + mu_at(chain, j + 1);
  return idx;
}

double angular_density(const QuantumNumberChain& chain,
                       const std::vector<double>& angles) {
  chain.validate();
  if (angles.size() != static_cast<std::size_t>(chain.d - 1))
    throw std::invalid_argument("angular_density: expected " +
                                std::to_string(chain.d - 1) + " angles");
  for (int j = 1; j <= chain.d - 2; ++j)
    check_angle(angles[j - 1], M_PI, "angular_density");
  check_angle(angles.back(), 2.0 * M_PI, "angular_density");
  double value = 1.0 / (2.0 * M_PI);
  for (int j = 1; j <= chain.d - 2; ++j)
    value *= factor_density(chain, j, angles[j - 1]);
  return value;
}

double angle_marginal(const QuantumNumberChain& chain, int j, double theta) {
  chain.validate();
  if (j < 1 || j > chain.d - 1)
    throw std::invalid_argument("angle_marginal: j must be in 1..d-1");
  if (j == chain.d - 1) {
    check_angle(theta, 2.0 * M_PI, "angle_marginal");
    return 1.0 / (2.0 * M_PI);
  }
  check_angle(theta, M_PI, "angle_marginal");
  return factor_density(chain, j, theta) *
         std::pow(std::sin(theta), chain.d - 1 - j);
}

std::vector<double> angle_marginal_zeros(const QuantumNumberChain& chain, int j) {
  chain.validate();
  if (j < 1 || j > chain.d - 1)
    throw std::invalid_argument("angle_marginal_zeros: j must be in 1..d-1");
  if (j == chain.d - 1) return {};
  const PolyIndex idx = derived_indices(chain, j);
  if (idx.n == 0) return {};
  // Node angles of C_n^lam(cos t) are nearly uniform in t; the scan cannot
  // skip a pair of them at this resolution.
  return find_sign_changes(
      [&](double t) { return gegenbauer(idx, std::cos(t)); }, 0.0, M_PI,
      32 * (idx.n + 2));
}

double cos2_moment(const QuantumNumberChain& chain, int k) {
  chain.validate();
  if (k < 1 || k > chain.d - 1)
    throw std::invalid_argument("cos2_moment: k must be in 1..d-1");
  if (k == chain.d - 1) return 0.5;  // uniform azimuthal angle
  const PolyIndex idx = derived_indices(chain, k);
  const double n = idx.n;
  const double lam = idx.lam;
  const double s = n + lam;
  if (s == 1.0) {
    // The closed form is 0/0 here; Beta-function moments of the marginal
    // give the limits.
    return idx.n == 0 ? 0.25 : 0.5;
  }
  return (n * n + 2.0 * lam * n + lam - 1.0) / (2.0 * (s + 1.0) * (s - 1.0));
}

CorrelationDiagonal correlation_diagonal(const QuantumNumberChain& chain) {
  chain.validate();
  CorrelationDiagonal diag;
  diag.entries.resize(chain.d);
  double sin_prod = 1.0;
  for (int i = 1; i <= chain.d - 1; ++i) {
    const double c2 = cos2_moment(chain, i);
    diag.entries[i - 1] = sin_prod * c2;
    sin_prod *= 1.0 - c2;
  }
  // x_d carries every sine and no cosine; the trace telescopes to 1.
  diag.entries[chain.d - 1] = sin_prod;
  diag.validate();
  return diag;
}

double entropy_loss(const QuantumNumberChain& chain) {
  const CorrelationDiagonal diag = correlation_diagonal(chain);
  double log_sum = 0.0;
  for (double e : diag.entries) log_sum += std::log(e);
  const double loss = 0.5 * log_sum + 0.5 * chain.d * std::log(double(chain.d));
  return std::min(loss, 0.0);
}

double kl_loss(const CorrelationDiagonal& diag) {
  diag.validate();
  const double dd = static_cast<double>(diag.entries.size());
  double kl = 0.0;
  for (double e : diag.entries) {
    if (e == 0.0) return -std::numeric_limits<double>::infinity();
    kl += (1.0 / dd) * std::log((1.0 / dd) / e);
  }
  return std::min(-(dd / 2.0) * kl, 0.0);
}

double angular_renyi(const QuantumNumberChain& chain, double lambda,
                     const QuadratureSpec& spec, double* est_error) {
  chain.validate();
  spec.validate();
  if (!(lambda > 0.0))
    throw std::domain_error("angular_renyi: lambda must be > 0");
  const double log_2pi = std::log(2.0 * M_PI);
  if (chain.d == 2) {
    // Uniform density 1/(2 pi): every Renyi order gives ln(2 pi) exactly.
    if (est_error) *est_error = 0.0;
    return log_2pi;
  }

  struct Factor {
    int j;
    PolyIndex idx;
    double z;
    int sin_pow;
    int weight_pow;
    std::vector<double> breaks;
  };
  std::vector<Factor> factors;
  for (int j = 1; j <= chain.d - 2; ++j) {
    Factor f;
    f.j = j;
    f.idx = derived_indices(chain, j);
    f.z = gegenbauer_norm(f.idx);
    f.sin_pow = 2 * mu_at(chain, j + 1);
    f.weight_pow = chain.d - 1 - j;
    f.breaks = angle_marginal_zeros(chain, j);
    factors.push_back(std::move(f));
  }

  const bool shannon = (lambda == 1.0);
  const auto at_order = [&](int order) {
    double h = log_2pi;  // azimuthal factor, exact for every order
    for (const Factor& f : factors) {
      const auto density = [&](double theta) {
        const double c = gegenbauer(f.idx, std::cos(theta));
        return c * c * std::pow(std::sin(theta), f.sin_pow) / f.z;
      };
      if (shannon) {
        const auto integrand = [&](double theta) {
          const double fv = density(theta);
          if (fv <= 0.0) return 0.0;  // 0 ln 0 = 0 at density nodes
          return -fv * std::log(fv) * std::pow(std::sin(theta), f.weight_pow);
        };
        h += integrate_segmented(integrand, 0.0, M_PI, f.breaks, order);
      } else {
        // Each factor is a normalized marginal, so its power moment is 1 plus
        // the integral of f^lambda - f; the log1p form survives lambda -> 1.
        const auto integrand = [&](double theta) {
          return power_excess(density(theta), lambda) *
                 std::pow(std::sin(theta), f.weight_pow);
        };
        const double ej = integrate_segmented(integrand, 0.0, M_PI, f.breaks, order);
        if (!(1.0 + ej > 0.0) || !std::isfinite(ej))
          throw NonconvergenceError("angular_renyi: factor integral of theta_" +
                                    std::to_string(f.j) +
                                    " is not positive and finite");
        h += std::log1p(ej) / (1.0 - lambda);
      }
    }
    return h;
  };
  const double value = refine(at_order, spec, 1e-12, est_error, "angular_renyi");
  if (!std::isfinite(value))
    throw NonconvergenceError("angular_renyi: entropy did not evaluate finite");
  return value;
}

}  // namespace entrobound
