#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "diskfront/analysis.hpp"
#include "diskfront/stationary_phase.hpp"

using namespace diskfront;

namespace {

constexpr double kPi = std::numbers::pi;

PhaseProblem circle_cos_problem() {
    PhaseProblem p;
    p.lo = 0.0;
    p.hi = 1.0;
    p.periodic = true;
    p.phase = [](double x) { return std::cos(2 * kPi * x); };
    p.phase_deriv = [](double x) { return -2 * kPi * std::sin(2 * kPi * x); };
    p.phase_second_deriv = [](double x) { return -4 * kPi * kPi * std::cos(2 * kPi * x); };
    return p;
}

double bump(double x) {
    if (std::abs(x) >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - x * x));
}

}  // namespace

TEST_CASE("bessel oracle") {
    CHECK(bessel_j0(0.5) == doctest::Approx(0.938469807240812904).epsilon(1e-14));
    CHECK(bessel_j0(1.0) == doctest::Approx(0.76519768655796655).epsilon(1e-14));
    CHECK(bessel_j0(5.0) == doctest::Approx(-0.17759677131433830).epsilon(1e-13));
    CHECK(bessel_j0(19.9) == doctest::Approx(0.172877756392618462).epsilon(1e-9));
    CHECK(bessel_j0(20.0) == doctest::Approx(0.16702466434058315).epsilon(1e-9));
    CHECK(bessel_j0(20.1) == doctest::Approx(0.159536067937297091).epsilon(1e-11));
    CHECK(bessel_j0(50.0) == doctest::Approx(0.055812327669251815).epsilon(1e-12));
    CHECK(bessel_j0(100.0) == doctest::Approx(0.019985850304223122).epsilon(1e-12));
    CHECK(bessel_j0(1000.0) == doctest::Approx(0.024786686152420175).epsilon(1e-12));
    SUBCASE("series and expansion meet smoothly at the seam") {
        CHECK(std::abs(bessel_j0(20.0 - 1e-9) - bessel_j0(20.0 + 1e-9)) < 1e-9);
    }
}

TEST_CASE("critical points") {
    SUBCASE("cosine on the circle") {
        const auto cps = critical_points(circle_cos_problem());
        REQUIRE(cps.size() == 2);
        CHECK(cps[0].x == doctest::Approx(0.0).epsilon(1e-10));
        CHECK(cps[0].second_deriv == doctest::Approx(-4 * kPi * kPi).epsilon(1e-10));
        CHECK(cps[1].x == doctest::Approx(0.5).epsilon(1e-10));
        CHECK(cps[1].second_deriv == doctest::Approx(4 * kPi * kPi).epsilon(1e-10));
    }
    SUBCASE("linear phase has none") {
        PhaseProblem p;
        p.lo = 0.0;
        p.hi = 1.0;
        p.phase = [](double x) { return x; };
        CHECK(critical_points(p).empty());
    }
    SUBCASE("time-per-chord phase has its minimum at pi/2") {
        const auto cps = critical_points(chord_phase_problem(0.3, 0.0));
        REQUIRE(cps.size() == 1);
        CHECK(cps[0].x == doctest::Approx(kPi / 2).epsilon(1e-10));
        CHECK(cps[0].second_deriv == doctest::Approx(1.0).epsilon(1e-6));
        // Perturbed family: second derivative grows to 1 + lambda*(1/a - a).
        const auto pert = critical_points(chord_phase_problem(0.3, 0.1));
        REQUIRE(pert.size() == 1);
        CHECK(pert[0].second_deriv ==
              doctest::Approx(1.0 + 0.1 * (1.0 / 0.3 - 0.3)).epsilon(1e-6));
    }
    SUBCASE("degenerate critical point signals") {
        PhaseProblem p;
        p.lo = -1.0;
        p.hi = 1.0;
        p.phase = [](double x) { return x * x * x * x; };
        p.phase_deriv = [](double x) { return 4 * x * x * x; };
        p.phase_second_deriv = [](double x) { return 12 * x * x; };
        CHECK_THROWS_AS(critical_points(p), std::domain_error);
    }
}

TEST_CASE("leading term") {
    SUBCASE("reproduces the Bessel large-argument form") {
        const auto p = circle_cos_problem();
        const double t = 100.0;
        const std::complex<double> lead = leading_term(p, t);
        const double expected = std::sqrt(2.0 / (kPi * t)) * std::cos(t - kPi / 4);
        CHECK(std::abs(lead.real() - expected) < 1e-12);
        CHECK(std::abs(lead.imag()) < 1e-12);
        // Against the quadrature oracle: remainder below 0.5 * t^{-3/2}.
        const std::complex<double> brute = brute_force(p, t, 1e-11);
        CHECK(std::abs(brute - lead) < 0.5 * std::pow(t, -1.5));
        // And the quadrature itself is the Bessel value.
        CHECK(std::abs(brute.real() - bessel_j0(t)) < 1e-10);
    }
    SUBCASE("zero amplitude gives zero") {
        auto p = circle_cos_problem();
        p.amplitude = [](double) { return 0.0; };
        CHECK(std::abs(leading_term(p, 37.0)) == 0.0);
    }
    SUBCASE("Fresnel problems match the closed form at leading order") {
        for (double sign : {1.0, -1.0}) {
            PhaseProblem p;
            p.lo = -1.0;
            p.hi = 1.0;
            p.phase = [sign](double x) { return sign * 0.5 * x * x; };
            p.phase_deriv = [sign](double x) { return sign * x; };
            p.phase_second_deriv = [sign](double) { return sign; };
            p.amplitude = bump;
            std::vector<double> ts{50.0, 100.0, 200.0, 400.0};
            std::vector<double> errs;
            for (double t : ts) {
                const std::complex<double> lead = leading_term(p, t);
                const std::complex<double> expected =
                    std::sqrt(2.0 * kPi / t) * std::polar(1.0, sign * kPi / 4.0);
                CHECK(std::abs(lead - expected) < 1e-12);  // bump(0) = 1
                errs.push_back(std::abs(brute_force(p, t, 1e-12) - lead));
            }
            const double slope = log_log_slope(ts, errs);
            CAPTURE(sign);
            CHECK(slope > -1.8);
            CHECK(slope < -1.2);
        }
    }
}

TEST_CASE("boundary term") {
    SUBCASE("exact for linear phase") {
        PhaseProblem p;
        p.lo = 0.3;
        p.hi = 1.7;
        p.phase = [](double x) { return x; };
        p.phase_deriv = [](double) { return 1.0; };
        const double t = 10.0;
        const std::complex<double> expected =
            (std::polar(1.0, t * 1.7) - std::polar(1.0, t * 0.3)) / std::complex<double>(0, t);
        CHECK(std::abs(boundary_term(p, t) - expected) < 1e-12);
        CHECK(std::abs(brute_force(p, t, 1e-12) - expected) < 1e-10);
    }
    SUBCASE("exact for slope-two phase on [0,1]") {
        PhaseProblem p;
        p.lo = 0.0;
        p.hi = 1.0;
        p.phase = [](double x) { return 2.0 * x; };
        p.phase_deriv = [](double) { return 2.0; };
        const double t = 25.0;
        const std::complex<double> expected =
            (std::polar(1.0, 2 * t) - 1.0) / std::complex<double>(0, 2 * t);
        CHECK(std::abs(boundary_term(p, t) - expected) < 1e-12);
    }
    SUBCASE("quadratic phase remainder decays like t^-2") {
        PhaseProblem p;
        p.lo = 1.0;
        p.hi = 2.0;
        p.phase = [](double x) { return x * x; };
        p.phase_deriv = [](double x) { return 2.0 * x; };
        const double e100 = std::abs(brute_force(p, 100.0, 1e-12) - boundary_term(p, 100.0));
        const double e1000 = std::abs(brute_force(p, 1000.0, 1e-12) - boundary_term(p, 1000.0));
        const double exponent = std::log(e100 / e1000) / std::log(10.0);
        CHECK(exponent >= 1.8);
        CHECK(exponent <= 2.2);
    }
    SUBCASE("vanishing endpoint derivative signals") {
        PhaseProblem p;
        p.lo = 0.0;
        p.hi = 1.0;
        p.phase = [](double x) { return x * x; };
        p.phase_deriv = [](double x) { return 2.0 * x; };
        CHECK_THROWS_AS(boundary_term(p, 10.0), std::domain_error);
    }
}

TEST_CASE("brute force") {
    SUBCASE("linear phase closed form") {
        PhaseProblem p;
        p.lo = 0.0;
        p.hi = 1.0;
        p.phase = [](double x) { return x; };
        p.phase_deriv = [](double) { return 1.0; };
        const std::complex<double> expected =
            (std::polar(1.0, 10.0) - 1.0) / std::complex<double>(0, 10.0);
        CHECK(std::abs(brute_force(p, 10.0, 1e-12) - expected) < 1e-10);
    }
    SUBCASE("circle phase reproduces the Bessel oracle") {
        CHECK(std::abs(brute_force(circle_cos_problem(), 50.0, 1e-10).real() - bessel_j0(50.0)) <
              1e-8);
    }
    SUBCASE("t = 0 integrates the amplitude") {
        CHECK(std::abs(brute_force(circle_cos_problem(), 0.0, 1e-12) - 1.0) < 1e-12);
    }
}

TEST_CASE("conjugation under t -> -t") {
    const auto p = circle_cos_problem();
    CHECK(std::abs(brute_force(p, -35.0, 1e-12) - std::conj(brute_force(p, 35.0, 1e-12))) <
          1e-12);
    CHECK(std::abs(leading_term(p, -35.0) - std::conj(leading_term(p, 35.0))) < 1e-12);

    PhaseProblem lin;
    lin.lo = 0.0;
    lin.hi = 1.0;
    lin.phase = [](double x) { return x; };
    lin.phase_deriv = [](double) { return 1.0; };
    CHECK(std::abs(boundary_term(lin, -12.0) - std::conj(boundary_term(lin, 12.0))) < 1e-12);
}

TEST_CASE("evaluators are linear in the amplitude") {
    auto a1 = [](double x) { return std::cos(3.0 * x); };
    auto a2 = [](double x) { return std::exp(-x * x); };
    const double c = 2.5;
    auto combo = [&](double x) { return a1(x) + c * a2(x); };

    PhaseProblem base = circle_cos_problem();
    PhaseProblem p1 = base, p2 = base, pc = base;
    p1.amplitude = a1;
    p2.amplitude = a2;
    pc.amplitude = combo;

    const double t = 60.0;
    CHECK(std::abs(leading_term(pc, t) - (leading_term(p1, t) + c * leading_term(p2, t))) <
          1e-13);
    CHECK(std::abs(brute_force(pc, t, 1e-11) -
                   (brute_force(p1, t, 1e-11) + c * brute_force(p2, t, 1e-11))) < 1e-8);

    PhaseProblem lin1, lin2, linc;
    lin1.lo = lin2.lo = linc.lo = 0.2;
    lin1.hi = lin2.hi = linc.hi = 1.1;
    auto phase = [](double x) { return 3.0 * x; };
    auto dphase = [](double) { return 3.0; };
    lin1.phase = lin2.phase = linc.phase = phase;
    lin1.phase_deriv = lin2.phase_deriv = linc.phase_deriv = dphase;
    lin1.amplitude = a1;
    lin2.amplitude = a2;
    linc.amplitude = combo;
    CHECK(std::abs(boundary_term(linc, t) -
                   (boundary_term(lin1, t) + c * boundary_term(lin2, t))) < 1e-13);
}

TEST_CASE("uniform remainder scans") {
    SUBCASE("constant family reduces to the single-problem remainder") {
        auto family = [](double) { return circle_cos_problem(); };
        const std::vector<double> ts{20.0, 40.0, 80.0};
        const auto scan = uniform_remainder_scan(family, ts, {0.0, 0.5, 1.0}, 1e-11);
        for (std::size_t i = 0; i < ts.size(); ++i) {
            const auto p = circle_cos_problem();
            const double single =
                std::abs(brute_force(p, ts[i], 1e-11) - leading_term(p, ts[i])) *
                std::pow(ts[i], 1.5);
            CHECK(scan.sup_scaled[i] == doctest::Approx(single).epsilon(1e-9));
        }
    }
    SUBCASE("tilted cosine family stays bounded") {
        auto family = [](double lambda) {
            PhaseProblem p = circle_cos_problem();
            p.phase = [lambda](double x) {
                return std::cos(2 * kPi * x) + lambda * std::sin(2 * kPi * x);
            };
            p.phase_deriv = [lambda](double x) {
                return 2 * kPi * (-std::sin(2 * kPi * x) + lambda * std::cos(2 * kPi * x));
            };
            p.phase_second_deriv = [lambda](double x) {
                return -4 * kPi * kPi *
                       (std::cos(2 * kPi * x) + lambda * std::sin(2 * kPi * x));
            };
            return p;
        };
        const std::vector<double> ts{15.0, 30.0, 60.0, 120.0, 240.0};
        const std::vector<double> lambdas{0.0, 0.025, 0.05, 0.075, 0.1};
        const auto scan = uniform_remainder_scan(family, ts, lambdas, 1e-11);
        CHECK(scan.max <= 3.0 * scan.median);
    }
    SUBCASE("chord phase family is uniform in the perturbation") {
        auto family = [](double lambda) { return chord_phase_problem(0.3, lambda); };
        std::vector<double> ts;
        for (double t = 10.0; t <= 200.0; t *= 1.6) ts.push_back(t);
        const std::vector<double> lambdas{0.0, 0.005, 0.01, 0.02, 0.05, 0.1};
        const auto scan = uniform_remainder_scan(family, ts, lambdas, 1e-10);
        CHECK(scan.max <= 3.0 * scan.median);
    }
}
