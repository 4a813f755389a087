#include "entrobound/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include "entrobound/special_functions.hpp"

namespace entrobound {
namespace {

// rho^lambda - rho without cancellation: the direct difference loses every
// digit as lambda -> 1, while v * expm1((lambda-1) ln v) keeps full relative
// precision and tends smoothly to (lambda-1) v ln v.
double power_excess(double v, double lambda) {
  if (v <= 0.0) return 0.0;
  const double log_v = std::log(v);
  const double x = (lambda - 1.0) * log_v;
  if (x >= 700.0) return std::exp(lambda * log_v);  // v itself is negligible
  return v * std::expm1(x);
}

void check_pair(const RadialState& state, const QuantumNumberChain& chain) {
  state.validate();
  chain.validate();
  if (state.d != chain.d)
    throw std::invalid_argument("state dimension " + std::to_string(state.d) +
                                " does not match chain dimension " +
                                std::to_string(chain.d));
  if (state.l != chain.l())
    throw std::invalid_argument("state angular momentum " +
                                std::to_string(state.l) +
                                " does not match chain mu_1 = " +
                                std::to_string(chain.l()));
}

// Pointwise |Y_mu|^2 evaluator with the per-factor constants precomputed;
// the tensor oracles call it once per grid tuple.
class HarmonicEval {
 public:
  explicit HarmonicEval(const QuantumNumberChain& chain) : d_(chain.d) {
    for (int j = 1; j <= d_ - 2; ++j) {
      Factor f;
      f.idx = derived_indices(chain, j);
      f.z = gegenbauer_norm(f.idx);
      f.sin_pow = static_cast<int>(2.0 * (f.idx.lam - 0.5 * (d_ - 1 - j)));
      factors_.push_back(f);
    }
  }

  // angles = (theta_1, ..., theta_{d-1}); the azimuth contributes 1/(2 pi).
  double operator()(const std::vector<double>& angles) const {
    double value = 1.0 / (2.0 * M_PI);
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      const Factor& f = factors_[i];
      const double c = gegenbauer(f.idx, std::cos(angles[i]));
      value *= c * c * std::pow(std::sin(angles[i]), f.sin_pow) / f.z;
    }
    return value;
  }

 private:
  struct Factor {
    PolyIndex idx;
    double z = 1.0;
    int sin_pow = 0;
  };
  int d_;
  std::vector<Factor> factors_;
};

struct Axis {
  std::vector<double> x;
  std::vector<double> w;  // includes the measure factor of this coordinate
};

// One Gauss panel per subinterval between the edges. Fractional powers of
// the density are kinked where the amplitude vanishes; with those points as
// panel ends the rule keeps its endpoint convergence rate.
void composite_panels(Axis& axis, std::vector<double> edges, int order,
                      double lo, double hi,
                      const std::function<double(double)>& weight) {
  edges.erase(std::remove_if(edges.begin(), edges.end(),
                             [&](double e) { return !(e > lo && e < hi); }),
              edges.end());
  edges.push_back(lo);
  edges.push_back(hi);
  std::sort(edges.begin(), edges.end());
  const GaussLegendreRule rule = gauss_legendre(order);
  for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
    const double half = 0.5 * (edges[p + 1] - edges[p]);
    if (!(half > 0.0)) continue;
    const double mid = 0.5 * (edges[p + 1] + edges[p]);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double x = mid + half * rule.nodes[i];
      const double w = weight(x);
      if (w == 0.0) continue;
      axis.x.push_back(x);
      axis.w.push_back(half * rule.weights[i] * w);
    }
  }
}

Axis radial_axis(const RadialState& state, int order) {
  std::vector<double> edges;
  for (double rn : state.nodes) edges.push_back(rn / (1.0 + rn));
  Axis axis;
  composite_panels(axis, std::move(edges), order, 0.0, 1.0, [&](double t) {
    const double r = radial_map(RadialTransform::rational, t);
    if (!std::isfinite(r)) return 0.0;
    const double jac = radial_map_jacobian(RadialTransform::rational, t);
    return jac * std::pow(r, state.d - 1);
  });
  // The axis carries r, not t; the weight already holds the map jacobian.
  for (double& t : axis.x) t = radial_map(RadialTransform::rational, t);
  return axis;
}

Axis polar_axis(int d, int j, int order, const std::vector<double>& zeros) {
  Axis axis;
  composite_panels(axis, zeros, order, 0.0, M_PI, [&](double theta) {
    return std::pow(std::sin(theta), d - 1 - j);
  });
  return axis;
}

Axis azimuth_axis(int points) {
  Axis axis;
  for (int i = 0; i < points; ++i) {
    axis.x.push_back(2.0 * M_PI * (i + 0.5) / points);
    axis.w.push_back(2.0 * M_PI / points);
  }
  return axis;
}

// Full-grid accumulation of the entropy integrand of rho over the axes
// (radial first, then the d-1 angles); rho is evaluated per tuple.
template <typename Density>
double tensor_entropy(const std::vector<Axis>& axes, double lambda,
                      const Density& rho, const std::string& what) {
  const std::size_t dims = axes.size();
  std::vector<std::size_t> index(dims, 0);
  std::vector<double> point(dims, 0.0);
  const bool shannon = (lambda == 1.0);
  double acc = 0.0;
  for (;;) {
    double w = 1.0;
    for (std::size_t k = 0; k < dims; ++k) {
      point[k] = axes[k].x[index[k]];
      w *= axes[k].w[index[k]];
    }
    const double v = rho(point);
    if (shannon) {
      if (v > 0.0) acc -= v * std::log(v) * w;
    } else {
      acc += power_excess(v, lambda) * w;
    }
    std::size_t k = 0;
    while (k < dims && ++index[k] == axes[k].x.size()) {
      index[k] = 0;
      ++k;
    }
    if (k == dims) break;
  }
  if (shannon) return acc;
  // acc is the integral of rho^lambda - rho, so the power moment is 1 + acc.
  if (!(1.0 + acc > 0.0) || !std::isfinite(acc))
    throw NonconvergenceError(what + ": density power integral did not "
                                     "evaluate positive and finite");
  return std::log1p(acc) / (1.0 - lambda);
}

std::vector<Axis> tensor_axes(const RadialState& state,
                              const QuantumNumberChain& chain) {
  const int d = chain.d;
  std::vector<Axis> axes;
  axes.push_back(radial_axis(state, d <= 3 ? 192 : 160));
  const int polar_order = d <= 3 ? 64 : 48;
  for (int j = 1; j <= d - 2; ++j)
    axes.push_back(polar_axis(d, j, polar_order, angle_marginal_zeros(chain, j)));
  return axes;
}

}  // namespace

EntropyValue renyi_radial(const RadialState& state, double lambda,
                          const QuadratureSpec& spec) {
  state.validate();
  if (!(lambda > 0.0))
    throw std::domain_error("renyi_radial: lambda must be > 0");
  EntropyValue out;
  out.lambda = lambda;
  out.method = EntropyMethod::quadrature_1d;
  if (lambda == 1.0) {
    const auto integrand = [&](double r) {
      const double v = state.eval(r);
      const double rho = v * v;
      if (rho <= 0.0) return 0.0;  // 0 ln 0 = 0 at nodes
      return -rho * std::log(rho) * std::pow(r, state.d - 1);
    };
    out.value = integrate_radial(integrand, state.nodes, spec, &out.est_error,
                                 "radial Shannon term of " + state.label.text());
    return out;
  }
  // Integrate rho^lambda - rho rather than rho^lambda: the density is unit
  // normalized, so the moment is 1 plus this excess, and the log1p form stays
  // accurate arbitrarily close to the Shannon order.
  const auto integrand = [&](double r) {
    const double v = state.eval(r);
    return power_excess(v * v, lambda) * std::pow(r, state.d - 1);
  };
  double est = 0.0;
  const double excess =
      integrate_radial(integrand, state.nodes, spec, &est,
                       "radial Renyi moment of " + state.label.text());
  if (!(1.0 + excess > 0.0) || !std::isfinite(excess))
    throw NonconvergenceError("renyi_radial: density power integral of " +
                              state.label.text() + " did not evaluate positive");
  out.value = std::log1p(excess) / (1.0 - lambda);
  out.est_error = est / (std::abs(1.0 - lambda) * (1.0 + excess));
  return out;
}

EntropyValue renyi_total(const RadialState& state,
                         const QuantumNumberChain& chain, double lambda,
                         const QuadratureSpec& spec) {
  check_pair(state, chain);
  const EntropyValue radial = renyi_radial(state, lambda, spec);
  double angular_est = 0.0;
  const double angular = angular_renyi(chain, lambda, spec, &angular_est);
  EntropyValue out;
  out.lambda = lambda;
  out.method = EntropyMethod::quadrature_1d;
  out.value = radial.value + angular;
  out.est_error = radial.est_error + angular_est;
  return out;
}

EntropyValue renyi_total_tensor(const RadialState& state,
                                const QuantumNumberChain& chain, double lambda,
                                const QuadratureSpec& spec) {
  (void)spec;  // fixed grids: the oracle must not share the refinement path
  check_pair(state, chain);
  if (!(lambda > 0.0))
    throw std::domain_error("renyi_total_tensor: lambda must be > 0");
  if (chain.d < 2 || chain.d > 4)
    throw std::invalid_argument(
        "renyi_total_tensor: supported for d in {2, 3, 4}, got d = " +
        std::to_string(chain.d));
  const HarmonicEval harmonic(chain);
  std::vector<Axis> axes = tensor_axes(state, chain);
  axes.push_back(azimuth_axis(8));  // the density has no azimuthal dependence

  std::vector<double> angles(chain.d - 1, 0.0);
  const auto rho = [&](const std::vector<double>& point) {
    const double amp = state.eval(point[0]);
    for (int k = 1; k < chain.d; ++k) angles[k - 1] = point[k];
    return amp * amp * harmonic(angles);
  };
  EntropyValue out;
  out.lambda = lambda;
  out.method = EntropyMethod::quadrature_tensor;
  out.value = tensor_entropy(axes, lambda, rho,
                             "tensor entropy of " + state.label.text());
  out.est_error = 0.0;  // fixed-grid oracle, no running estimate
  return out;
}

double scaling_check(const RadialState& state, const QuantumNumberChain& chain,
                     const std::vector<double>& diag_scale, double lambda,
                     const QuadratureSpec& spec) {
  check_pair(state, chain);
  if (chain.d < 2 || chain.d > 4)
    throw std::invalid_argument(
        "scaling_check: supported for d in {2, 3, 4}, got d = " +
        std::to_string(chain.d));
  if (diag_scale.size() != static_cast<std::size_t>(chain.d))
    throw std::invalid_argument("scaling_check: expected " +
                                std::to_string(chain.d) + " scale factors");
  double log_det = 0.0;
  for (double s : diag_scale) {
    if (!(s > 0.0) || !std::isfinite(s))
      throw std::domain_error("scaling_check: scale factors must be positive");
    log_det += std::log(s);
  }
  const int d = chain.d;
  const HarmonicEval harmonic(chain);

  std::vector<Axis> axes = tensor_axes(state, chain);
  // The stretch breaks rotational symmetry, so the azimuth needs real
  // resolution here (periodic midpoint rule, geometric convergence).
  axes.push_back(azimuth_axis(64));

  std::vector<double> x(d, 0.0), y(d, 0.0), angles(d - 1, 0.0);
  const auto rho_stretched = [&](const std::vector<double>& point) {
    // Cartesian x from its hyperspherical coordinates.
    double sin_prod = point[0];  // r running product of sines
    for (int i = 1; i <= d - 2; ++i) {
      x[i - 1] = sin_prod * std::cos(point[i]);
      sin_prod *= std::sin(point[i]);
    }
    x[d - 2] = sin_prod * std::cos(point[d - 1]);
    x[d - 1] = sin_prod * std::sin(point[d - 1]);
    for (int i = 0; i < d; ++i) y[i] = x[i] / diag_scale[i];
    // Hyperspherical coordinates of y = S^{-1} x.
    double tail2 = 0.0;
    for (int i = d - 1; i >= 0; --i) {
      if (i <= d - 3) angles[i] = std::atan2(std::sqrt(tail2), y[i]);
      tail2 += y[i] * y[i];
    }
    double phi = std::atan2(y[d - 1], y[d - 2]);
    if (phi < 0.0) phi += 2.0 * M_PI;
    angles[d - 2] = phi;
    const double r_y = std::sqrt(tail2);
    const double amp = state.eval(r_y);
    return amp * amp * harmonic(angles) / std::exp(log_det);
  };
  const double h_stretched = tensor_entropy(
      axes, lambda, rho_stretched, "stretched entropy of " + state.label.text());
  const EntropyValue h_base = renyi_total(state, chain, lambda, spec);
  return h_stretched - (h_base.value + log_det);
}

}  // namespace entrobound
