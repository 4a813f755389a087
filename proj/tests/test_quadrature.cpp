#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "entrobound/quadrature.hpp"

using entrobound::QuadratureSpec;
using entrobound::RadialTransform;

TEST_CASE("gauss_legendre small rules are exact") {
    const auto r1 = entrobound::gauss_legendre(1);
    REQUIRE(r1.nodes.size() == 1);
    CHECK(r1.nodes[0] == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(r1.weights[0] == doctest::Approx(2.0).epsilon(1e-15));

    const auto r2 = entrobound::gauss_legendre(2);
    REQUIRE(r2.nodes.size() == 2);
    CHECK(r2.nodes[0] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-14));
    CHECK(r2.nodes[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
    CHECK(r2.weights[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(r2.weights[1] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("gauss_legendre weights sum to 2 and nodes ascend") {
    for (int n : {3, 8, 17, 96, 257}) {
        const auto rule = entrobound::gauss_legendre(n);
        REQUIRE(rule.nodes.size() == static_cast<std::size_t>(n));
        double wsum = 0.0;
        for (double w : rule.weights) wsum += w;
        CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
        for (std::size_t i = 1; i < rule.nodes.size(); ++i)
            CHECK(rule.nodes[i] > rule.nodes[i - 1]);
        CHECK(std::abs(rule.nodes.front() + rule.nodes.back()) <= 1e-15);
    }
}

TEST_CASE("gauss_legendre integrates polynomials of degree 2n-1 exactly") {
    // n = 3 is exact through degree 5: check x^4 and x^5 on [-1, 1].
    const auto rule = entrobound::gauss_legendre(3);
    double p4 = 0.0, p5 = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double x = rule.nodes[i];
        p4 += rule.weights[i] * x * x * x * x;
        p5 += rule.weights[i] * x * x * x * x * x;
    }
    CHECK(p4 == doctest::Approx(0.4).epsilon(1e-14));
    CHECK(std::abs(p5) <= 1e-14);
}

TEST_CASE("integrate_plain on smooth integrands") {
    CHECK(entrobound::integrate_plain([](double x) { return x * x * x; }, 0.0, 1.0, 8) ==
          doctest::Approx(0.25).epsilon(1e-14));
    CHECK(entrobound::integrate_plain([](double x) { return std::sin(x); }, 0.0, M_PI, 24) ==
          doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("integrate_segmented handles interior kinks via breakpoints") {
    // int_0^1 |x - 0.3|^1.6 dx = (0.3^2.6 + 0.7^2.6) / 2.6
    const double ref = (std::pow(0.3, 2.6) + std::pow(0.7, 2.6)) / 2.6;
    const auto f = [](double x) { return std::pow(std::abs(x - 0.3), 1.6); };
    const double with_break = entrobound::integrate_segmented(f, 0.0, 1.0, {0.3}, 96);
    CHECK(with_break == doctest::Approx(ref).epsilon(1e-12));
}

TEST_CASE("integrate_segmented absorbs endpoint singularities") {
    // int_0^1 x^{-1/2} dx = 2; the sin^2 panel map makes this smooth.
    const double v = entrobound::integrate_segmented(
        [](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, {}, 96);
    CHECK(v == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("refine converges on smooth integrands and reports est_error") {
    QuadratureSpec spec;
    spec.base_order = 8;
    double est = -1.0;
    const double v = entrobound::refine(
        [](int order) {
            return entrobound::integrate_plain(
                [](double x) { return std::exp(-x * x); }, 0.0, 2.0, order);
        },
        spec, 1e-14, &est, "gaussian moment");
    CHECK(v == doctest::Approx(0.5 * std::sqrt(M_PI) * std::erf(2.0)).epsilon(1e-13));
    CHECK(est >= 0.0);
    CHECK(est <= 1e-10 * std::abs(v) + 1e-13);
}

TEST_CASE("refine throws NonconvergenceError when the ladder is exhausted") {
    QuadratureSpec spec;
    spec.base_order = 4;
    spec.max_refinements = 3;
    // Oscillation far beyond the finest order in the ladder.
    const auto hard = [](int order) {
        return entrobound::integrate_plain(
            [](double x) { return std::sin(1e6 * x); }, 0.0, 1.0, order);
    };
    CHECK_THROWS_AS(entrobound::refine(hard, spec, 1e-14, nullptr, "oscillatory probe"),
                    entrobound::NonconvergenceError);
    try {
        entrobound::refine(hard, spec, 1e-14, nullptr, "oscillatory probe");
    } catch (const entrobound::NonconvergenceError& e) {
        CHECK(std::string(e.what()).find("oscillatory probe") != std::string::npos);
    }
}

TEST_CASE("radial transforms map [0,1) onto [0,inf)") {
    CHECK(entrobound::radial_map(RadialTransform::rational, 0.5) ==
          doctest::Approx(1.0).epsilon(1e-15));
    CHECK(entrobound::radial_map_jacobian(RadialTransform::rational, 0.5) ==
          doctest::Approx(4.0).epsilon(1e-15));
    CHECK(entrobound::radial_map(RadialTransform::exponential, 0.5) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-14));
    CHECK(entrobound::radial_map(RadialTransform::rational, 0.0) == 0.0);
    CHECK(entrobound::radial_map(RadialTransform::exponential, 0.0) == 0.0);
}

TEST_CASE("integrate_radial computes semi-infinite moments") {
    for (RadialTransform t : {RadialTransform::rational, RadialTransform::exponential}) {
        QuadratureSpec spec;
        spec.radial_transform = t;
        double est = 0.0;
        const double m0 = entrobound::integrate_radial(
            [](double r) { return std::exp(-r); }, {}, spec, &est, "exp moment");
        CHECK(m0 == doctest::Approx(1.0).epsilon(1e-12));
        const double m2 = entrobound::integrate_radial(
            [](double r) { return r * r * std::exp(-r * r); }, {1.0}, spec, nullptr,
            "gaussian r2");
        CHECK(m2 == doctest::Approx(std::sqrt(M_PI) / 4.0).epsilon(1e-12));
    }
}

TEST_CASE("find_sign_changes locates simple zeros") {
    const auto zeros =
        entrobound::find_sign_changes([](double x) { return std::sin(x); }, 0.5, 10.0, 200);
    REQUIRE(zeros.size() == 3);
    CHECK(zeros[0] == doctest::Approx(M_PI).epsilon(1e-12));
    CHECK(zeros[1] == doctest::Approx(2.0 * M_PI).epsilon(1e-12));
    CHECK(zeros[2] == doctest::Approx(3.0 * M_PI).epsilon(1e-12));

    CHECK(entrobound::find_sign_changes([](double) { return 1.0; }, 0.0, 1.0, 50).empty());
}

TEST_CASE("QuadratureSpec validation") {
    QuadratureSpec bad;
    bad.base_order = 1;
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
    QuadratureSpec bad2;
    bad2.rel_tol = 0.0;
    CHECK_THROWS_AS(bad2.validate(), std::domain_error);
}

TEST_CASE("to_string names every entropy method") {
    CHECK(std::string(entrobound::to_string(entrobound::EntropyMethod::closed_form)) ==
          "closed_form");
    CHECK(std::string(entrobound::to_string(entrobound::EntropyMethod::quadrature_1d)) ==
          "quadrature_1d");
    CHECK(std::string(entrobound::to_string(entrobound::EntropyMethod::quadrature_tensor)) ==
          "quadrature_tensor");
    CHECK(std::string(entrobound::to_string(entrobound::EntropyMethod::monte_carlo)) ==
          "monte_carlo");
}
