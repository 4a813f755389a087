#include "entrobound/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace entrobound {

void QuadratureSpec::validate() const {
  if (base_order < 2) throw std::domain_error("QuadratureSpec: base_order must be >= 2");
  if (!(rel_tol > 0.0)) throw std::domain_error("QuadratureSpec: rel_tol must be > 0");
  if (max_refinements < 0)
    throw std::domain_error("QuadratureSpec: max_refinements must be >= 0");
}

const char* to_string(EntropyMethod method) {
  switch (method) {
    case EntropyMethod::closed_form: return "closed_form";
    case EntropyMethod::quadrature_1d: return "quadrature_1d";
    case EntropyMethod::quadrature_tensor: return "quadrature_tensor";
    case EntropyMethod::monte_carlo: return "monte_carlo";
  }
  return "unknown";
}

namespace {

GaussLegendreRule compute_gauss_legendre(int n) {
  GaussLegendreRule rule;
  rule.nodes.assign(n, 0.0);
  rule.weights.assign(n, 0.0);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Newton iteration on P_n from the Chebyshev-like initial guess.
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

const GaussLegendreRule& cached_rule(int n) {
  static std::mutex mutex;
  static std::map<int, GaussLegendreRule> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_gauss_legendre(n)).first;
  return it->second;
}

// Integral over one panel [a, b] through x = a + (b-a) sin^2(pi u / 2).
double smoothed_panel(const Integrand& f, double a, double b,
                      const GaussLegendreRule& rule) {
  const double h = b - a;
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double u = 0.5 * (rule.nodes[i] + 1.0);
    const double s = std::sin(0.5 * M_PI * u);
    const double x = a + h * s * s;
    const double jac = h * 0.5 * M_PI * std::sin(M_PI * u);
    sum += 0.5 * rule.weights[i] * f(x) * jac;
  }
  return sum;
}

std::vector<double> panel_edges(double a, double b, const std::vector<double>& breaks) {
  std::vector<double> edges;
  edges.push_back(a);
  for (double x : breaks)
    if (x > a && x < b) edges.push_back(x);
  edges.push_back(b);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

}  // namespace

GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) throw std::domain_error("gauss_legendre: order must be >= 1");
  if (n == 1) return {{0.0}, {2.0}};
  return cached_rule(n);
}

double integrate_segmented(const Integrand& f, double a, double b,
                           const std::vector<double>& breaks, int order) {
  const GaussLegendreRule& rule = gauss_legendre(order);
  const std::vector<double> edges = panel_edges(a, b, breaks);
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i)
    sum += smoothed_panel(f, edges[i], edges[i + 1], rule);
  return sum;
}

double integrate_plain(const Integrand& f, double a, double b, int order) {
  const GaussLegendreRule& rule = gauss_legendre(order);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return sum * half;
}

double refine(const std::function<double(int)>& at_order,
              const QuadratureSpec& spec, double abs_floor, double* est_error,
              const std::string& what) {
  spec.validate();
  double prev = at_order(spec.base_order);
  double diff = std::abs(prev);
  int order = spec.base_order;
  for (int level = 1; level <= spec.max_refinements; ++level) {
    order *= 2;
    const double cur = at_order(order);
    diff = std::abs(cur - prev);
    if (diff <= spec.rel_tol * std::abs(cur) + abs_floor) {
      if (est_error) *est_error = diff;
      return cur;
    }
    prev = cur;
  }
  throw NonconvergenceError(what + ": refinement did not converge (last delta " +
                            std::to_string(diff) + ")");
}

double radial_map(RadialTransform transform, double t) {
  switch (transform) {
    case RadialTransform::rational: return t / (1.0 - t);
    case RadialTransform::exponential: return -std::log1p(-t);
  }
  return 0.0;
}

double radial_map_jacobian(RadialTransform transform, double t) {
  switch (transform) {
    case RadialTransform::rational: {
      const double om = 1.0 - t;
      return 1.0 / (om * om);
    }
    case RadialTransform::exponential: return 1.0 / (1.0 - t);
  }
  return 0.0;
}

std::vector<double> find_sign_changes(const Integrand& f, double a, double b,
                                      int scan_points) {
  if (scan_points < 2) throw std::domain_error("find_sign_changes: scan_points < 2");
  std::vector<double> zeros;
  const double h = (b - a) / scan_points;
  double x0 = a;
  double f0 = f(x0);
  for (int i = 1; i <= scan_points; ++i) {
    const double x1 = a + i * h;
    const double f1 = f(x1);
    if (f0 == 0.0 && x0 > a) {
      zeros.push_back(x0);
    } else if (f0 * f1 < 0.0) {
      double lo = x0, hi = x1, flo = f0;
      for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) {
          lo = hi = mid;
          break;
        }
        if (flo * fm < 0.0) {
          hi = mid;
        } else {
          lo = mid;
          flo = fm;
        }
      }
      zeros.push_back(0.5 * (lo + hi));
    }
    x0 = x1;
    f0 = f1;
  }
  return zeros;
}

double integrate_radial(const Integrand& g, const std::vector<double>& breaks_r,
                        const QuadratureSpec& spec, double* est_error,
                        const std::string& what) {
  const RadialTransform transform = spec.radial_transform;
  std::vector<double> breaks_t;
  breaks_t.reserve(breaks_r.size());
  for (double r : breaks_r) {
    if (r <= 0.0) continue;
    const double t = (transform == RadialTransform::rational)
                         ? r / (1.0 + r)
                         : -std::expm1(-r);
    breaks_t.push_back(t);
  }
  const Integrand in_t = [&](double t) {
    const double r = radial_map(transform, t);
    // The smoothed panel map can round t to 1 at very high orders; the
    // integrands here all decay, so the endpoint limit is 0, never 0 * inf.
    if (!std::isfinite(r)) return 0.0;
    const double v = g(r);
    if (v == 0.0) return 0.0;
    return v * radial_map_jacobian(transform, t);
  };
  return refine(
      [&](int order) { return integrate_segmented(in_t, 0.0, 1.0, breaks_t, order); },
      spec, 1e-14, est_error, what);
}

}  // namespace entrobound
