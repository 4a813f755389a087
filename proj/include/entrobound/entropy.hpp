#ifndef ENTROBOUND_ENTROPY_HPP
#define ENTROBOUND_ENTROPY_HPP

#include <vector>

#include "entrobound/angular.hpp"
#include "entrobound/quadrature.hpp"
#include "entrobound/states.hpp"

namespace entrobound {

// Radial term of the entropy split: (1/(1-lambda)) ln of the integral of
// |R|^{2 lambda} r^{d-1}, with the Shannon limit at lambda = 1.
EntropyValue renyi_radial(const RadialState& state, double lambda,
                          const QuadratureSpec& spec = {});

// Full-space Renyi entropy of the separable density R(r)^2 |Y_mu|^2,
// assembled as radial term plus angular term (the density power integral
// factorizes).
EntropyValue renyi_total(const RadialState& state,
                         const QuantumNumberChain& chain, double lambda,
                         const QuadratureSpec& spec = {});

// Same entropy by full tensor-product quadrature over (r, theta_1, ...,
// theta_{d-1}) on a plain unsmoothed Gauss-Legendre grid.  Deliberately
// shares no code path with the 1D split; serves as its oracle.  Supported
// for d in {2, 3, 4} only (cost guard).
EntropyValue renyi_total_tensor(const RadialState& state,
                                const QuantumNumberChain& chain, double lambda,
                                const QuadratureSpec& spec = {});

// Residual of the scaling identity H[rho_S] = H[rho] + sum_i ln s_i for the
// diagonal stretch rho_S(x) = rho(S^{-1} x)/det S, with the left side by
// tensor quadrature in x-space.  Target 0.
double scaling_check(const RadialState& state, const QuantumNumberChain& chain,
                     const std::vector<double>& diag_scale, double lambda,
                     const QuadratureSpec& spec = {});

}  // namespace entrobound

#endif
