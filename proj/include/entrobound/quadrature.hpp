#ifndef ENTROBOUND_QUADRATURE_HPP
#define ENTROBOUND_QUADRATURE_HPP

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace entrobound {

// Thrown when a refinement ladder runs out before meeting its tolerance.
struct NonconvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class RadialTransform { rational, exponential };

struct QuadratureSpec {
  int base_order = 96;
  int max_refinements = 8;
  double rel_tol = 1e-10;
  RadialTransform radial_transform = RadialTransform::rational;

  void validate() const;  // base_order >= 2, rel_tol > 0
};

enum class EntropyMethod { closed_form, quadrature_1d, quadrature_tensor, monte_carlo };
const char* to_string(EntropyMethod method);

// One computed entropy, in nats, recording how it was obtained.
struct EntropyValue {
  double lambda = 1.0;
  double value = 0.0;
  EntropyMethod method = EntropyMethod::quadrature_1d;
  double est_error = 0.0;
};

struct GaussLegendreRule {
  std::vector<double> nodes;    // ascending, on [-1, 1]
  std::vector<double> weights;  // sum to 2
};

// Standard Gauss-Legendre rule, exact for polynomials of degree <= 2n-1.
GaussLegendreRule gauss_legendre(int n);

using Integrand = std::function<double(double)>;

// Integral of f over [a, b] split at the interior breakpoints, each panel
// mapped through x = a + (b-a) sin^2(pi u / 2) so algebraic endpoint
// singularities (|x - x0|^p kinks of non-integer-power densities) converge at
// Gauss-Legendre rates.  `order` is the per-panel node count.
double integrate_segmented(const Integrand& f, double a, double b,
                           const std::vector<double>& breaks, int order);

// Plain (unsmoothed) composite Gauss-Legendre over [a, b]; used by the
// tensor-product oracle which must not share the smoothed path.
double integrate_plain(const Integrand& f, double a, double b, int order);

// Refinement ladder: evaluates `at_order` at base_order, 2x, 4x, ... until two
// consecutive values agree to rel_tol * |value| + abs_floor.  Returns the last
// value; *est_error (optional) receives the last difference.  Throws
// NonconvergenceError when max_refinements is exhausted.
double refine(const std::function<double(int)>& at_order,
              const QuadratureSpec& spec, double abs_floor,
              double* est_error, const std::string& what);

// Semi-infinite integral of g over [0, inf) through spec.radial_transform,
// split at the breakpoints (given in r).
double integrate_radial(const Integrand& g, const std::vector<double>& breaks_r,
                        const QuadratureSpec& spec, double* est_error,
                        const std::string& what);

// Same transform exposed for samplers and oracles: r(t) and dr/dt on [0, 1).
double radial_map(RadialTransform transform, double t);
double radial_map_jacobian(RadialTransform transform, double t);

// Ascending simple zeros of f inside (a, b), located by a uniform sign-change
// scan followed by bisection.  Zeros closer together than (b-a)/scan_points
// can be missed; callers choose scan_points from what they know about f.
std::vector<double> find_sign_changes(const Integrand& f, double a, double b,
                                      int scan_points);

}  // namespace entrobound

#endif
