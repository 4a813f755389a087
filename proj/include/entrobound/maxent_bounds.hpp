#ifndef ENTROBOUND_MAXENT_BOUNDS_HPP
#define ENTROBOUND_MAXENT_BOUNDS_HPP

#include "entrobound/quadrature.hpp"

namespace entrobound {

// A Renyi order lambda paired with the dimension d it applies to.  The
// covariance-constrained maximum entropy is finite only for
// lambda > d/(d+2); the boundary itself is excluded.
struct RenyiOrder {
  double lambda = 1.0;
  int d = 1;

  void validate() const;        // lambda > 0, d >= 1
  void validate_bound() const;  // additionally lambda > d/(d+2)
};

enum class ExtremalKind { student_r, gaussian, student_t };
const char* to_string(ExtremalKind kind);

// The density attaining the covariance-constrained Renyi maximum, with
// covariance fixed to the identity:
//   lambda > 1:  A (1 - r^2/a^2)_+^p  with p = 1/(lambda-1)   (student_r)
//   lambda = 1:  standard Gaussian                            (gaussian)
//   lambda < 1:  A (1 + r^2/c^2)^{-q} with q = 1/(1-lambda)   (student_t)
// `shape` holds p or q, `scale` holds a or c, `log_norm` is ln A.
struct ExtremalDensity {
  ExtremalKind kind = ExtremalKind::gaussian;
  int d = 1;
  double shape = 0.0;
  double scale = 1.0;
  double log_norm = 0.0;

  double density(double r) const;     // isotropic value at radius r
  double support_radius() const;      // a for student_r, +infinity otherwise
};

// Maximum Renyi entropy B_d(lambda) over d-dimensional densities with
// identity covariance, in nats.  The general-covariance bound adds
// (d/2) ln(r2/d).  The lambda > 1 branch carries the power-term exponent
// 1/(lambda-1); see bd_lambda_paper_printed for the variant with the
// opposite exponent sign kept for comparison output.
double bd_lambda(const RenyiOrder& order);

// Same expression but with the lambda > 1 power-term exponent flipped to
// 1/(1-lambda).  For lambda <= 1 identical to bd_lambda.  This variant falls
// below the entropy of feasible densities (e.g. 0.87 < 1.42 for d=1,
// lambda=2), so it is reported for comparison only, never used in bounds.
double bd_lambda_paper_printed(const RenyiOrder& order);

// Shannon bound (d/2) ln(2 pi e r2 / d) for a density with total second
// moment r2.
double shannon_bound(int d, double r2);

// Renyi bound B_d(lambda) + (d/2) ln(r2/d).
double baseline_renyi_bound(const RenyiOrder& order, double r2);

// The maximizing density itself; its quadrature entropy must reproduce
// bd_lambda, which pins the exponent conventions independently.
ExtremalDensity extremal_density(const RenyiOrder& order);

// H_lambda of extremal_density(order) by radial quadrature.
double extremal_renyi(const RenyiOrder& order, const QuadratureSpec& spec = {});

}  // namespace entrobound

#endif
