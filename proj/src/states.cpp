#include "entrobound/states.hpp"

#include <cmath>
// boost 1.74 pchip.hpp calls isnan unqualified; give ordinary lookup a target.
using std::isnan;
#include <boost/math/interpolators/pchip.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "entrobound/special_functions.hpp"

namespace entrobound {
namespace {

// Zeros of L_n^(alpha)(x) all lie below this bound.
double laguerre_zero_cap(int n, double alpha) {
  return 4.0 * n + 2.0 * alpha + 4.0;
}

// Numerically imposes unit radial norm on a raw amplitude.
RadialState normalized(RadialState state, const std::function<double(double)>& raw) {
  const auto norm_integrand = [&](double r) {
    const double v = raw(r);
    return v * v * std::pow(r, state.d - 1);
  };
  double est = 0.0;
  const double norm2 =
      integrate_radial(norm_integrand, state.nodes, QuadratureSpec{}, &est,
                       "radial norm of " + state.label.text());
  if (!(norm2 > 0.0) || !std::isfinite(norm2))
    throw std::domain_error("radial state " + state.label.text() +
                            " has zero or non-finite norm");
  const double scale = 1.0 / std::sqrt(norm2);
  state.eval = [raw, scale](double r) { return scale * raw(r); };
  return state;
}

}  // namespace

std::string StateLabel::text() const {
  std::string out = system;
  if (!detail.empty()) out += " " + detail;
  return out;
}

void RadialState::validate() const {
  if (d < 1) throw std::invalid_argument("RadialState: requires d >= 1");
  if (l < 0) throw std::invalid_argument("RadialState: requires l >= 0");
  if (!eval) throw std::invalid_argument("RadialState: no amplitude attached");
}

RadialState oscillator_state(int n_r, int l, int d) {
  if (n_r < 0 || l < 0 || d < 1)
    throw std::invalid_argument("oscillator_state: requires n_r, l >= 0 and d >= 1");
  RadialState state;
  state.d = d;
  state.l = l;
  state.label = {"oscillator", "nr=" + std::to_string(n_r) + " l=" + std::to_string(l),
                 "r^2/2"};
  state.r2_analytic = 2.0 * n_r + l + 0.5 * d;
  const double alpha = l + 0.5 * d - 1.0;
  if (n_r > 0) {
    const double r_cap = std::sqrt(laguerre_zero_cap(n_r, alpha));
    state.nodes = find_sign_changes(
        [=](double r) { return laguerre(n_r, alpha, r * r); }, 0.0, r_cap,
        64 * (n_r + 2));
  }
  const auto raw = [=](double r) {
    const double gauss = std::exp(-0.5 * r * r);
    if (gauss == 0.0) return 0.0;
    return std::pow(r, l) * laguerre(n_r, alpha, r * r) * gauss;
  };
  return normalized(std::move(state), raw);
}

RadialState hydrogen_state(int n, int l, int d) {
  if (n < 1) throw std::invalid_argument("hydrogen_state: requires n >= 1");
  if (l < 0 || l >= n)
    throw std::domain_error("hydrogen_state: requires 0 <= l <= n-1");
  if (d < 2) throw std::invalid_argument("hydrogen_state: requires d >= 2");
  RadialState state;
  state.d = d;
  state.l = l;
  state.label = {"hydrogen", "n=" + std::to_string(n) + " l=" + std::to_string(l),
                 "-1/r"};
  if (d == 3)
    state.r2_analytic =
        0.5 * double(n) * n * (5.0 * n * n + 1.0 - 3.0 * l * (l + 1.0));
  const double nu = n + 0.5 * (d - 3.0);
  const int k = n - l - 1;         // radial node count
  const double alpha = 2.0 * l + d - 2.0;
  if (k > 0) {
    const double r_cap = 0.5 * nu * laguerre_zero_cap(k, alpha);
    state.nodes = find_sign_changes(
        [=](double r) { return laguerre(k, alpha, 2.0 * r / nu); }, 0.0, r_cap,
        64 * (k + 2));
  }
  const auto raw = [=](double r) {
    const double decay = std::exp(-r / nu);
    if (decay == 0.0) return 0.0;
    return std::pow(r, l) * laguerre(k, alpha, 2.0 * r / nu) * decay;
  };
  return normalized(std::move(state), raw);
}

RadialState tabulated_state(const std::vector<std::pair<double, double>>& samples,
                            int d, int l) {
  if (d < 1 || l < 0)
    throw std::invalid_argument("tabulated_state: requires d >= 1 and l >= 0");
  if (samples.size() < 8)
    throw std::invalid_argument("tabulated_state: needs at least 8 samples, got " +
                                std::to_string(samples.size()));
  std::vector<double> r(samples.size()), amp(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    r[i] = samples[i].first;
    amp[i] = samples[i].second;
    if (r[i] < 0.0)
      throw std::invalid_argument("tabulated_state: negative radius in sample " +
                                  std::to_string(i));
    if (i > 0 && !(r[i] > r[i - 1]))
      throw std::invalid_argument(
          "tabulated_state: radii must be strictly increasing");
  }
  const double r_lo = r.front();
  const double r_hi = r.back();

  RadialState state;
  state.d = d;
  state.l = l;
  state.label = {"file", "l=" + std::to_string(l), "tabulated"};
  // Domain edges double as quadrature breakpoints: the amplitude is cut to
  // zero outside the table.
  if (r_lo > 0.0) state.nodes.push_back(r_lo);
  state.nodes.push_back(r_hi);

  boost::math::interpolators::pchip<std::vector<double>> spline(std::move(r),
                                                                std::move(amp));
  const auto raw = [spline, r_lo, r_hi](double x) {
    if (x < r_lo || x > r_hi) return 0.0;
    return spline(x);
  };
  // Interior sign changes of the interpolant are density zeros.
  auto interior = find_sign_changes(raw, r_lo, r_hi,
                                    static_cast<int>(8 * samples.size()));
  state.nodes.insert(state.nodes.end(), interior.begin(), interior.end());
  std::sort(state.nodes.begin(), state.nodes.end());
  return normalized(std::move(state), raw);
}

RadialState tabulated_state_from_file(const std::string& path, int d, int l) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open state file: " + path);
  std::vector<std::pair<double, double>> samples;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream fields(line);
    double rv = 0.0, av = 0.0;
    if (!(fields >> rv)) continue;  // blank or comment-only line
    if (!(fields >> av))
      throw std::invalid_argument(path + ":" + std::to_string(line_no) +
                                  ": expected two columns (r, R)");
    std::string extra;
    if (fields >> extra)
      throw std::invalid_argument(path + ":" + std::to_string(line_no) +
                                  ": trailing data '" + extra + "'");
    samples.emplace_back(rv, av);
  }
  RadialState state = tabulated_state(samples, d, l);
  state.label.detail = path + " l=" + std::to_string(l);
  return state;
}

double r2_expectation(const RadialState& state, const QuadratureSpec& spec) {
  state.validate();
  const auto integrand = [&](double r) {
    const double v = state.eval(r);
    return r * r * v * v * std::pow(r, state.d - 1);
  };
  double est = 0.0;
  const double r2 = integrate_radial(integrand, state.nodes, spec, &est,
                                     "<r^2> of " + state.label.text());
  if (state.r2_analytic) {
    const double ref = *state.r2_analytic;
    if (std::abs(r2 - ref) > 1e-8 * std::max(1.0, std::abs(ref)))
      throw std::logic_error("<r^2> of " + state.label.text() + " evaluated to " +
                             std::to_string(r2) + ", analytic value is " +
                             std::to_string(ref));
  }
  return r2;
}

}  // namespace entrobound
