#ifndef ENTROBOUND_SPECIAL_FUNCTIONS_HPP
#define ENTROBOUND_SPECIAL_FUNCTIONS_HPP

namespace entrobound {

// Index of a Gegenbauer polynomial C_n^lam.  Here lam is the ultraspherical
// superscript, not a Renyi order; lam = 0 is legal only for n = 0 (the
// recurrence degenerates, callers handle the uniform-angle case themselves).
struct PolyIndex {
  int n = 0;
  double lam = 0.0;

  void validate() const;  // throws std::domain_error
};

// ln Gamma(x) for x > 0.  Absolute error below 1e-13 on [0.5, 100].
double log_gamma(double x);

// Gegenbauer polynomial C_n^lam(x), |x| <= 1, by the three-term recurrence
//   n C_n = 2 (n + lam - 1) x C_{n-1} - (n + 2 lam - 2) C_{n-2}
// seeded with C_0 = 1, C_1 = 2 lam x.
double gegenbauer(const PolyIndex& idx, double x);

// Generalized Laguerre polynomial L_n^(alpha)(x), alpha > -1, x >= 0.
double laguerre(int n, double alpha, double x);

// Normalization constant of the Gegenbauer weight,
//   Z(lam, n) = pi 2^{1-2 lam} Gamma(n + 2 lam) / ((lam + n) n! Gamma(lam)^2),
// evaluated in the log domain.  Requires lam > 0.
double gegenbauer_norm(const PolyIndex& idx);

}  // namespace entrobound

#endif
