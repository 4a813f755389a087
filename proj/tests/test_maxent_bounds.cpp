#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "entrobound/maxent_bounds.hpp"
#include "entrobound/quadrature.hpp"
#include "entrobound/special_functions.hpp"

using entrobound::ExtremalKind;
using entrobound::RenyiOrder;

namespace {

// Renyi entropy of the standard d-dimensional Gaussian, closed form.
double gaussian_renyi(int d, double lambda) {
    if (lambda == 1.0) return 0.5 * d * std::log(2.0 * M_PI * M_E);
    return 0.5 * d * std::log(2.0 * M_PI) + 0.5 * d * std::log(lambda) / (lambda - 1.0);
}

// Radial moment int_0^inf f(r) r^{d-1} dr of an extremal density times the
// unit-sphere surface area, used to cross-check normalization and covariance.
double spherical_moment(const entrobound::ExtremalDensity& ext,
                        const std::function<double(double)>& weight) {
    const double log_surface = std::log(2.0) + 0.5 * ext.d * std::log(M_PI) -
                               entrobound::log_gamma(0.5 * ext.d);
    std::vector<double> breaks;
    if (std::isfinite(ext.support_radius())) breaks.push_back(ext.support_radius());
    entrobound::QuadratureSpec spec;
    const double radial = entrobound::integrate_radial(
        [&](double r) {
            const double v = ext.density(r);
            if (v == 0.0) return 0.0;
            return weight(r) * v * std::pow(r, ext.d - 1.0);
        },
        breaks, spec, nullptr, "extremal moment");
    return std::exp(log_surface) * radial;
}

}  // namespace

TEST_CASE("bd_lambda reference values") {
    CHECK(entrobound::bd_lambda({1.0, 3}) ==
          doctest::Approx(4.2568155996140185).epsilon(1e-12));
    CHECK(entrobound::bd_lambda({1.0, 1}) ==
          doctest::Approx(0.5 * std::log(2.0 * M_PI * M_E)).epsilon(1e-12));
    CHECK(entrobound::bd_lambda({2.0, 1}) ==
          doctest::Approx(1.3155445799830407).epsilon(1e-9));
    CHECK(entrobound::bd_lambda({0.6, 1}) ==
          doctest::Approx(1.6479184330021646).epsilon(1e-9));
}

TEST_CASE("bd_lambda is continuous through lambda = 1") {
    for (int d : {1, 2, 3, 5}) {
        const double center = entrobound::bd_lambda({1.0, d});
        const double up = entrobound::bd_lambda({1.0 + 1e-4, d});
        const double down = entrobound::bd_lambda({1.0 - 1e-4, d});
        CHECK(std::abs(up - center) <= 1e-3);
        CHECK(std::abs(down - center) <= 1e-3);
        // The limit is two-sided: the one-sided differences cancel to first order.
        CHECK(std::abs(up + down - 2.0 * center) <= 1e-6);
    }
}

TEST_CASE("bd_lambda rejects orders at or below the validity window") {
    for (int d : {1, 2, 3, 5}) {
        const double edge = static_cast<double>(d) / (d + 2);
        CHECK_THROWS_AS(entrobound::bd_lambda({edge, d}), std::domain_error);
        CHECK_THROWS_AS(entrobound::bd_lambda({0.9 * edge, d}), std::domain_error);
        try {
            entrobound::bd_lambda({edge, d});
        } catch (const std::domain_error& e) {
            CHECK(std::string(e.what()).find("bound undefined") != std::string::npos);
        }
    }
    CHECK_THROWS_AS(entrobound::bd_lambda({0.0, 1}), std::domain_error);
    CHECK_THROWS_AS(entrobound::bd_lambda({-2.0, 3}), std::domain_error);
}

TEST_CASE("bd_lambda agrees with quadrature over the maximizing density") {
    // The extremal density is assembled from its own closed-form shape and
    // normalization; integrating its entropy retraces none of the bd_lambda
    // algebra, so agreement pins the exponent conventions.
    const struct {
        int d;
        std::vector<double> lambdas;
    } grid[] = {
        {1, {0.45, 0.6, 1.0, 1.5, 2.0, 3.0}},
        {2, {0.7, 1.0, 1.5, 2.0, 3.0}},
        {3, {0.8, 1.0, 1.5, 2.0, 3.0}},
        {5, {0.8, 1.0, 1.5, 2.0, 3.0}},
    };
    for (const auto& g : grid)
        for (double lambda : g.lambdas) {
            const RenyiOrder order{lambda, g.d};
            const double closed = entrobound::bd_lambda(order);
            const double integrated = entrobound::extremal_renyi(order);
            CHECK(std::abs(closed - integrated) <= 1e-6);
        }
}

TEST_CASE("bd_lambda dominates the Gaussian entropy, strictly for lambda != 1") {
    for (int d : {1, 2, 3, 5})
        for (double lambda : {0.8, 1.0, 1.3, 2.0, 3.0, 6.0}) {
            if (lambda <= static_cast<double>(d) / (d + 2)) continue;
            const double bd = entrobound::bd_lambda({lambda, d});
            const double gauss = gaussian_renyi(d, lambda);
            if (lambda == 1.0)
                CHECK(bd == doctest::Approx(gauss).epsilon(1e-12));
            else
                CHECK(bd > gauss + 1e-9);
        }
}

TEST_CASE("bd_lambda_paper_printed flips only the lambda > 1 branch") {
    for (int d : {1, 2, 3})
        for (double lambda : {0.8, 0.95, 1.0}) {
            if (lambda <= static_cast<double>(d) / (d + 2)) continue;
            CHECK(entrobound::bd_lambda_paper_printed({lambda, d}) ==
                  doctest::Approx(entrobound::bd_lambda({lambda, d})).epsilon(1e-14));
        }
    CHECK(entrobound::bd_lambda_paper_printed({2.0, 1}) ==
          doctest::Approx(0.8692574773546212).epsilon(1e-9));
    // The printed variant undercuts a feasible density's entropy, so it cannot
    // be the maximum; keep the witness inequality pinned.
    CHECK(entrobound::bd_lambda_paper_printed({2.0, 1}) < gaussian_renyi(1, 2.0));
    CHECK(entrobound::bd_lambda({2.0, 1}) > gaussian_renyi(1, 2.0));
}

TEST_CASE("shannon_bound closed forms") {
    CHECK(entrobound::shannon_bound(3, 3.0) ==
          doctest::Approx(1.5 * std::log(2.0 * M_PI * M_E)).epsilon(1e-13));
    CHECK(entrobound::shannon_bound(3, 1.5) ==
          doctest::Approx(1.5 * std::log(M_PI * M_E)).epsilon(1e-13));
    CHECK(entrobound::shannon_bound(2, 2.0) ==
          doctest::Approx(std::log(2.0 * M_PI * M_E)).epsilon(1e-13));
    CHECK_THROWS_AS(entrobound::shannon_bound(3, 0.0), std::domain_error);
    CHECK_THROWS_AS(entrobound::shannon_bound(3, -1.0), std::domain_error);
}

TEST_CASE("baseline_renyi_bound composes bd_lambda with the moment term") {
    CHECK(entrobound::baseline_renyi_bound({1.0, 3}, 3.0) ==
          doctest::Approx(4.2568155996140185).epsilon(1e-12));
    CHECK(entrobound::baseline_renyi_bound({1.0, 3}, 30.0) ==
          doctest::Approx(7.7106932391050875).epsilon(1e-12));
    CHECK(entrobound::baseline_renyi_bound({2.0, 1}, 1.0) ==
          doctest::Approx(1.3155445799830407).epsilon(1e-9));
    // Shannon order reduces to shannon_bound.
    for (double r2 : {0.4, 1.0, 7.3})
        CHECK(entrobound::baseline_renyi_bound({1.0, 2}, r2) ==
              doctest::Approx(entrobound::shannon_bound(2, r2)).epsilon(1e-13));
    CHECK_THROWS_AS(entrobound::baseline_renyi_bound({1.0, 3}, -2.0), std::domain_error);
}

TEST_CASE("extremal_density branch selection and shape parameters") {
    const auto heavy = entrobound::extremal_density({0.6, 1});
    CHECK(heavy.kind == ExtremalKind::student_t);
    CHECK(heavy.shape == doctest::Approx(2.5).epsilon(1e-14));     // q = 1/(1-lambda)
    CHECK(heavy.scale == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));  // c^2 = 2

    const auto mid = entrobound::extremal_density({1.0, 4});
    CHECK(mid.kind == ExtremalKind::gaussian);

    const auto compact = entrobound::extremal_density({2.0, 1});
    CHECK(compact.kind == ExtremalKind::student_r);
    CHECK(compact.shape == doctest::Approx(1.0).epsilon(1e-14));   // p = 1/(lambda-1)
    CHECK(compact.scale == doctest::Approx(std::sqrt(5.0)).epsilon(1e-14)); // a^2 = 5
    CHECK(compact.density(0.0) ==
          doctest::Approx(0.33541019662496845).epsilon(1e-12));    // 3/(4 sqrt 5)
    CHECK(compact.density(std::sqrt(5.0) + 1e-9) == 0.0);
    CHECK(std::isfinite(compact.support_radius()));
    CHECK(!std::isfinite(mid.support_radius()));
}

TEST_CASE("extremal densities are normalized with identity covariance") {
    const struct {
        int d;
        double lambda;
    } grid[] = {{1, 2.0}, {2, 1.5}, {3, 0.8}, {5, 3.0}, {3, 1.0}};
    for (const auto& g : grid) {
        const auto ext = entrobound::extremal_density({g.lambda, g.d});
        const double mass = spherical_moment(ext, [](double) { return 1.0; });
        CHECK(mass == doctest::Approx(1.0).epsilon(1e-9));
        // trace of the covariance = int r^2 rho = d for identity covariance
        const double r2 = spherical_moment(ext, [](double r) { return r * r; });
        CHECK(r2 == doctest::Approx(static_cast<double>(g.d)).epsilon(1e-8));
    }
}

TEST_CASE("RenyiOrder validation") {
    CHECK_THROWS_AS((RenyiOrder{1.0, 0}.validate()), std::domain_error);
    CHECK_THROWS_AS((RenyiOrder{0.0, 3}.validate()), std::domain_error);
    RenyiOrder fine{0.5, 3};
    fine.validate();  // in range for entropies...
    CHECK_THROWS_AS(fine.validate_bound(), std::domain_error);  // ...but not for bounds
}
