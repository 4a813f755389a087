#include "entrobound/special_functions.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace entrobound {

void PolyIndex::validate() const {
  if (n < 0) throw std::domain_error("PolyIndex: degree n must be >= 0");
  if (lam < 0.0 || !std::isfinite(lam))
    throw std::domain_error("PolyIndex: parameter lam must be finite and >= 0");
}

double log_gamma(double x) {
  if (!(x > 0.0))
    throw std::domain_error("log_gamma: argument must be positive, got " +
                            std::to_string(x));
  return std::lgamma(x);
}

double gegenbauer(const PolyIndex& idx, double x) {
  idx.validate();
  if (std::abs(x) > 1.0 + 1e-12)
    throw std::domain_error("gegenbauer: argument outside [-1, 1]");
  if (idx.n == 0) return 1.0;
  if (idx.lam == 0.0)
    throw std::domain_error(
        "gegenbauer: lam = 0 with n >= 1 is degenerate; use the uniform-angle "
        "special case");
  double cm1 = 1.0;             // C_0
  double c = 2.0 * idx.lam * x; // C_1
  for (int k = 2; k <= idx.n; ++k) {
    const double next =
        (2.0 * (k + idx.lam - 1.0) * x * c - (k + 2.0 * idx.lam - 2.0) * cm1) / k;
    cm1 = c;
    c = next;
  }
  return c;
}

double laguerre(int n, double alpha, double x) {
  if (n < 0) throw std::domain_error("laguerre: degree must be >= 0");
  if (alpha <= -1.0) throw std::domain_error("laguerre: alpha must be > -1");
  if (x < 0.0) throw std::domain_error("laguerre: argument must be >= 0");
  if (n == 0) return 1.0;
  double lm1 = 1.0;             // L_0
  double l = 1.0 + alpha - x;   // L_1
  for (int k = 2; k <= n; ++k) {
    const double next =
        ((2.0 * k - 1.0 + alpha - x) * l - (k - 1.0 + alpha) * lm1) / k;
    lm1 = l;
    l = next;
  }
  return l;
}

double gegenbauer_norm(const PolyIndex& idx) {
  idx.validate();
  if (idx.lam <= 0.0)
    throw std::domain_error("gegenbauer_norm: requires lam > 0");
  const double lam = idx.lam;
  const int n = idx.n;
  // Gamma ratios as log differences; the direct form overflows for large n or lam.
  const double log_z = std::log(M_PI) + (1.0 - 2.0 * lam) * std::log(2.0) +
                       log_gamma(n + 2.0 * lam) - std::log(lam + n) -
                       log_gamma(n + 1.0) - 2.0 * log_gamma(lam);
  return std::exp(log_z);
}

}  // namespace entrobound
