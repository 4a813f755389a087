#ifndef ENTROBOUND_ANGULAR_HPP
#define ENTROBOUND_ANGULAR_HPP

#include <vector>

#include "entrobound/quadrature.hpp"
#include "entrobound/special_functions.hpp"

namespace entrobound {

// Angular quantum numbers (mu_1, ..., mu_{d-1}) of a hyperspherical harmonic
// on S^{d-1}.  The last entry is the magnetic number m and may be negative;
// all others obey mu_1 >= mu_2 >= ... >= mu_{d-2} >= |m|.  For d = 2 the
// chain is the single integer m.
struct QuantumNumberChain {
  int d = 2;
  std::vector<int> mu;

  void validate() const;  // throws std::invalid_argument
  int abs_m() const;      // |mu_{d-1}|
  int l() const;          // angular momentum coupled to the radial equation
};

// The d diagonal entries of the trace-normalized second-moment matrix C_x of
// a separable state.  Entries are nonnegative and sum to 1.
struct CorrelationDiagonal {
  std::vector<double> entries;

  void validate() const;  // throws std::invalid_argument
};

// Degree and parameter (n_j, lam_j) of the Gegenbauer factor attached to
// theta_j, j in 1..d-1:  n_j = mu_j - mu_{j+1}, lam_j = (d-1-j)/2 + mu_{j+1},
// with mu_{d-1} replaced by |m| and mu_d = 0.  j = d-1 yields lam = 0 (the
// azimuthal factor is a complex exponential, never a polynomial).
PolyIndex derived_indices(const QuantumNumberChain& chain, int j);

// Probability density |Y_mu(Omega)|^2 at the given angles
// (theta_1, ..., theta_{d-1}); normalized against the surface measure
// prod_j (sin theta_j)^{d-1-j} dtheta_j.
double angular_density(const QuantumNumberChain& chain,
                       const std::vector<double>& angles);

// Normalized 1D marginal density of theta_j, surface-measure weight included:
// integrating over [0, pi] (or [0, 2 pi] for j = d-1) gives 1.
double angle_marginal(const QuantumNumberChain& chain, int j, double theta);

// Zeros of the theta_j marginal inside its domain (node angles of the
// Gegenbauer factor); empty for n_j = 0 and for the azimuth.
std::vector<double> angle_marginal_zeros(const QuantumNumberChain& chain, int j);

// Second trigonometric moment <cos^2 theta_k> of the harmonic, k in 1..d-1.
// Closed form in (n_k, lam_k); the two parameter pairs where that form is
// 0/0 have finite limits 1/4 (n=0, lam=1) and 1/2 (n=1, lam=0), and the
// azimuthal angle always gives exactly 1/2.
double cos2_moment(const QuantumNumberChain& chain, int k);

// Diagonal of C_x: entry i is (prod_{k<i} <sin^2 theta_k>) <cos^2 theta_i>,
// with no cosine factor for i = d.  Telescopes to trace 1.
CorrelationDiagonal correlation_diagonal(const QuantumNumberChain& chain);

// Angular entropy loss L(Omega_{d-1}) = (1/2) sum_i ln C_{x,i,i} + (d/2) ln d,
// always <= 0; zero when C_x = I/d.
double entropy_loss(const QuantumNumberChain& chain);

// Same loss from the diagonal alone, written as -(d/2) times the KL
// divergence of the uniform weights from the entries.  Entries equal to zero
// give -infinity.
double kl_loss(const CorrelationDiagonal& diag);

// Renyi entropy of order lambda (Shannon at lambda = 1) of |Y_mu|^2 over
// S^{d-1}, reduced to one-dimensional quadratures by the factorization of the
// density.  est_error (optional) receives the refinement-ladder estimate.
double angular_renyi(const QuantumNumberChain& chain, double lambda,
                     const QuadratureSpec& spec = {},
                     double* est_error = nullptr);

}  // namespace entrobound

#endif
