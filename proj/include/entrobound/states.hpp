#ifndef ENTROBOUND_STATES_HPP
#define ENTROBOUND_STATES_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "entrobound/quadrature.hpp"

namespace entrobound {

// Provenance of a radial state: system family, quantum numbers, and the
// potential it solves, carried as metadata only.
struct StateLabel {
  std::string system;     // "oscillator", "hydrogen", "file"
  std::string detail;     // quantum numbers or source path
  std::string potential;  // V_d(r) family, e.g. "r^2/2"

  std::string text() const;  // "oscillator nr=0 l=0"
};

// Normalized radial wavefunction R(r) of a spherically symmetric state:
// integral of R^2 r^{d-1} over [0, inf) is 1.  `nodes` lists the interior
// zeros of R, used as quadrature breakpoints by the entropy integrators.
struct RadialState {
  int d = 3;
  int l = 0;
  StateLabel label;
  std::function<double(double)> eval;
  std::optional<double> r2_analytic;
  std::vector<double> nodes;

  void validate() const;  // throws std::invalid_argument
};

// Isotropic harmonic oscillator eigenstate (unit mass and frequency):
// R proportional to r^l L_{n_r}^{(l + d/2 - 1)}(r^2) exp(-r^2/2), normalized
// numerically.  <r^2> = 2 n_r + l + d/2.
RadialState oscillator_state(int n_r, int l, int d);

// Hydrogenic eigenstate (atomic units, Z = 1) with effective principal number
// nu = n + (d-3)/2: R proportional to r^l L_{n-l-1}^{(2l+d-2)}(2r/nu)
// exp(-r/nu).  The analytic <r^2> = n^2 (5 n^2 + 1 - 3 l (l+1)) / 2 is
// attached for d = 3 only.
RadialState hydrogen_state(int n, int l, int d);

// Radial state from (r, R) samples: monotone cubic interpolation on the
// table, zero outside it, renormalized to unit radial norm.  Needs at least
// 8 samples with strictly increasing r >= 0.
RadialState tabulated_state(const std::vector<std::pair<double, double>>& samples,
                            int d, int l);

// Same, reading a two-column text file: '#' starts a comment, columns are
// whitespace- or comma-separated.
RadialState tabulated_state_from_file(const std::string& path, int d, int l);

// <r^2> by radial quadrature.  When the state carries an analytic value the
// two are required to agree; a mismatch means a broken construction and
// throws.
double r2_expectation(const RadialState& state, const QuadratureSpec& spec = {});

}  // namespace entrobound

#endif
