#include "entrobound/maxent_bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "entrobound/special_functions.hpp"

namespace entrobound {

void RenyiOrder::validate() const {
  if (d < 1) throw std::domain_error("RenyiOrder: requires d >= 1");
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw std::domain_error("RenyiOrder: lambda must be positive and finite");
}

void RenyiOrder::validate_bound() const {
  validate();
  const double edge = static_cast<double>(d) / (d + 2.0);
  if (lambda <= edge)
    throw std::domain_error(
        "bound undefined: the covariance-constrained Renyi maximum is finite "
        "only for lambda > d/(d+2) = " +
        std::to_string(edge) + " at d = " + std::to_string(d));
}

const char* to_string(ExtremalKind kind) {
  switch (kind) {
    case ExtremalKind::student_r: return "student_r";
    case ExtremalKind::gaussian: return "gaussian";
    case ExtremalKind::student_t: return "student_t";
  }
  return "unknown";
}

double ExtremalDensity::density(double r) const {
  switch (kind) {
    case ExtremalKind::student_r: {
      const double t = 1.0 - (r / scale) * (r / scale);
      if (t <= 0.0) return 0.0;
      return std::exp(log_norm + shape * std::log(t));
    }
    case ExtremalKind::gaussian:
      return std::exp(log_norm - 0.5 * r * r);
    case ExtremalKind::student_t: {
      const double u = r / scale;
      return std::exp(log_norm - shape * std::log1p(u * u));
    }
  }
  return 0.0;
}

double ExtremalDensity::support_radius() const {
  return kind == ExtremalKind::student_r
             ? scale
             : std::numeric_limits<double>::infinity();
}

double bd_lambda(const RenyiOrder& order) {
  order.validate_bound();
  const double lam = order.lambda;
  const double d = order.d;
  if (lam == 1.0) return 0.5 * d * std::log(2.0 * M_PI * M_E);
  const double x = (2.0 + d) * lam - d;
  if (lam > 1.0) {
    const double e = lam - 1.0;
    return 0.5 * d * std::log(M_PI * x / e) + std::log(x / (2.0 * lam)) / e +
           log_gamma(lam / e) - log_gamma(x / (2.0 * e));
  }
  const double e = 1.0 - lam;
  return 0.5 * d * std::log(M_PI * x / e) -
         ((lam / e) * std::log(x / (2.0 * lam)) + log_gamma(lam / e) -
          log_gamma(x / (2.0 * e)));
}

double bd_lambda_paper_printed(const RenyiOrder& order) {
  const double value = bd_lambda(order);
  if (order.lambda <= 1.0) return value;
  // The lambda > 1 power term with the exponent read as 1/(1-lambda) instead
  // of 1/(lambda-1); differs from bd_lambda by twice that term.
  const double x = (2.0 + order.d) * order.lambda - order.d;
  return value -
         2.0 * std::log(x / (2.0 * order.lambda)) / (order.lambda - 1.0);
}

double shannon_bound(int d, double r2) {
  if (d < 1) throw std::domain_error("shannon_bound: requires d >= 1");
  if (!(r2 > 0.0) || !std::isfinite(r2))
    throw std::domain_error("shannon_bound: requires r2 > 0");
  return 0.5 * d * std::log(2.0 * M_PI * M_E * r2 / d);
}

double baseline_renyi_bound(const RenyiOrder& order, double r2) {
  if (!(r2 > 0.0) || !std::isfinite(r2))
    throw std::domain_error("baseline_renyi_bound: requires r2 > 0");
  return bd_lambda(order) + 0.5 * order.d * std::log(r2 / order.d);
}

ExtremalDensity extremal_density(const RenyiOrder& order) {
  order.validate_bound();
  const double lam = order.lambda;
  const double d = order.d;
  ExtremalDensity rho;
  rho.d = order.d;
  if (lam == 1.0) {
    rho.kind = ExtremalKind::gaussian;
    rho.shape = 0.0;
    rho.scale = 1.0;
    rho.log_norm = -0.5 * d * std::log(2.0 * M_PI);
    return rho;
  }
  const double x = (2.0 + d) * lam - d;
  if (lam > 1.0) {
    rho.kind = ExtremalKind::student_r;
    rho.shape = 1.0 / (lam - 1.0);  // p
    rho.scale = std::sqrt(x / (lam - 1.0));
    rho.log_norm = -d * std::log(rho.scale) - 0.5 * d * std::log(M_PI) +
                   log_gamma(rho.shape + 1.0 + 0.5 * d) -
                   log_gamma(rho.shape + 1.0);
    return rho;
  }
  rho.kind = ExtremalKind::student_t;
  rho.shape = 1.0 / (1.0 - lam);  // q
  rho.scale = std::sqrt(x / (1.0 - lam));
  rho.log_norm = -d * std::log(rho.scale) - 0.5 * d * std::log(M_PI) +
                 log_gamma(rho.shape) - log_gamma(rho.shape - 0.5 * d);
  return rho;
}

double extremal_renyi(const RenyiOrder& order, const QuadratureSpec& spec) {
  const ExtremalDensity rho = extremal_density(order);
  const double lam = order.lambda;
  const int d = order.d;
  const double log_surface =
      std::log(2.0) + 0.5 * d * std::log(M_PI) - log_gamma(0.5 * d);
  std::vector<double> breaks;
  if (rho.kind == ExtremalKind::student_r) breaks.push_back(rho.scale);
  double est = 0.0;
  if (lam == 1.0) {
    const auto integrand = [&](double r) {
      const double v = rho.density(r);
      if (v <= 0.0) return 0.0;
      return -v * std::log(v) * std::pow(r, d - 1);
    };
    return std::exp(log_surface) *
           integrate_radial(integrand, breaks, spec, &est,
                            "extremal Shannon entropy");
  }
  const auto integrand = [&](double r) {
    return std::pow(rho.density(r), lam) * std::pow(r, d - 1);
  };
  const double moment = integrate_radial(integrand, breaks, spec, &est,
                                         "extremal Renyi moment");
  if (!(moment > 0.0) || !std::isfinite(moment))
    throw NonconvergenceError(
        "extremal_renyi: density power integral did not evaluate positive");
  return (log_surface + std::log(moment)) / (1.0 - lam);
}

}  // namespace entrobound
