// Acceptance suite: one line per criterion, nonzero exit on any failure.
//
// Covers the arcsin growth law, boundedness at a = 1/2, the sqrt(t)
// oscillation amplitude, the period-2 oscillation, the series-model fit, the
// two integral forms, the local density law, the stationary-phase decay
// rates, the endpoint formula, and the cross-implementation oracles.

#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <random>
#include <vector>

#include "diskfront/analysis.hpp"
#include "diskfront/asymptotics.hpp"
#include "diskfront/density.hpp"
#include "diskfront/parallel.hpp"
#include "diskfront/quadrature.hpp"
#include "diskfront/stationary_phase.hpp"
#include "diskfront/wavefront.hpp"

using namespace diskfront;

namespace {

constexpr double kPi = std::numbers::pi;
int failures = 0;

void report(int id, const char* name, bool ok, const std::string& detail) {
    std::printf("[%s] criterion %2d %-22s %s\n", ok ? "PASS" : "FAIL", id, name, detail.c_str());
    if (!ok) ++failures;
}

std::string fmt(const char* format, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

PhaseProblem circle_problem() {
    PhaseProblem p;
    p.lo = 0.0;
    p.hi = 1.0;
    p.periodic = true;
    p.phase = [](double x) { return std::cos(2 * kPi * x); };
    p.phase_deriv = [](double x) { return -2 * kPi * std::sin(2 * kPi * x); };
    p.phase_second_deriv = [](double x) { return -4 * kPi * kPi * std::cos(2 * kPi * x); };
    return p;
}

double residual_slope(const std::vector<double>& ts, const std::vector<double>& residual) {
    const auto peaks = windowed_peaks(ts, residual);
    return log_log_slope(peaks.centers, peaks.peaks);
}

}  // namespace

int main() {
    // ---- 1: arcsin growth law at t = 200 -------------------------------
    {
        bool ok = true;
        std::string detail;
        for (double a : {0.1, 0.3, 0.5, 0.7, 0.9}) {
            const double rate = front_length(Source{a}, 200.0, 1e-6) / 200.0;
            const double gap = std::abs(rate - 2.0 * std::asin(a));
            ok = ok && gap <= 0.05;
            detail += fmt("a=%.1f:%.4f ", a, gap);
        }
        report(1, "arcsin-law", ok, "|L/t - 2asin a| " + detail + "(<=0.05)");
    }

    // ---- 2: boundedness at a = 1/2 --------------------------------------
    {
        const auto s = build_series(0.5, 2.0, 50.0, 0.05, 10, 1e-6);
        std::vector<double> residual(s.sim.size());
        double worst = 0.0;
        for (std::size_t i = 0; i < s.sim.size(); ++i) {
            residual[i] = s.sim[i] - kPi / 3.0 * s.t_values[i];
            worst = std::max(worst, std::abs(residual[i]));
        }
        const double slope = residual_slope(s.t_values, residual);
        report(2, "a=1/2 bounded", slope <= 0.25 && std::isfinite(worst),
               fmt("slope %.3f (<=0.25), max residual %.3f", slope, worst));
    }

    // ---- 3: sqrt(t) oscillation amplitude at a = 0.1 ---------------------
    {
        const auto s = build_series(0.1, 5.0, 100.0, 0.05, 10, 1e-6);
        const double p = amplitude_exponent(s);
        report(3, "sqrt-t amplitude", p >= 0.4 && p <= 0.6, fmt("exponent %.3f in [0.4,0.6]", p));
    }

    // Series shared by criteria 4-6.
    std::vector<double> as{0.0, 0.1, 0.3, 0.7, 0.9};
    std::vector<LengthSeries> shared;
    for (double a : as) shared.push_back(build_series(a, 10.0, 50.0, 0.02, 10, 1e-6));

    // ---- 4: period-2 oscillation ----------------------------------------
    {
        bool ok = true;
        std::string detail;
        for (std::size_t i = 0; i < as.size(); ++i) {
            const double period = dominant_period(shared[i]);
            ok = ok && std::abs(period - 2.0) <= 0.05;
            detail += fmt("a=%.1f:%.3f ", as[i], period);
        }
        report(4, "period-2", ok, detail + "(2.00 +/- 0.05)");
    }

    // ---- 5: series model removes half the oscillation --------------------
    {
        bool ok = true;
        std::string detail;
        for (std::size_t i = 0; i < as.size(); ++i) {
            if (as[i] == 0.0) continue;
            const double ratio = model_fit_ratio(shared[i]);
            ok = ok && ratio <= 0.5;
            detail += fmt("a=%.1f:%.3f ", as[i], ratio);
        }
        report(5, "series-model fit", ok, "fit ratio " + detail + "(<=0.5)");
    }

    // ---- 6: the two integral forms agree and track the simulation --------
    {
        std::mt19937 rng(12345);
        std::uniform_real_distribution<double> ua(0.05, 0.95), ut(10.0, 50.0);
        double worst_gap = 0.0;
        std::vector<double> params_a(50), params_t(50);
        for (int i = 0; i < 50; ++i) {
            params_a[i] = ua(rng);
            params_t[i] = ut(rng);
        }
        std::vector<double> gaps(50);
        parallel_for(50, [&](std::size_t i) {
            const double xi_form = model_length_integral_xi(params_a[i], params_t[i], 1e-8);
            const double alpha_form = model_length_integral_alpha(params_a[i], params_t[i], 1e-8);
            gaps[i] = std::abs(xi_form - alpha_form);
        });
        for (double g : gaps) worst_gap = std::max(worst_gap, g);
        bool ok = worst_gap <= 2e-8;

        std::string slopes;
        for (std::size_t i : {2UL, 3UL}) {  // a = 0.3, 0.7
            const LengthSeries& s = shared[i];
            std::vector<double> residual(s.sim.size());
            parallel_for(s.sim.size(), [&](std::size_t j) {
                residual[j] =
                    s.sim[j] - model_length_integral_xi(as[i], s.t_values[j], 1e-6);
            });
            const double slope = residual_slope(s.t_values, residual);
            ok = ok && slope <= 0.25;
            slopes += fmt("a=%.1f:%.3f ", as[i], slope);
        }
        report(6, "integral formulas", ok,
               fmt("max |xi-alpha| %.2e (<=2e-8), residual slopes ", worst_gap) + slopes +
                   "(<=0.25)");
    }

    // ---- 7: local density law -------------------------------------------
    {
        bool ok = true;
        double worst = 0.0;
        const auto rows = density_report(Source{0.7}, 300.0, 0.1, 1e-6);
        for (const auto& r : rows) {
            worst = std::max(worst, r.rel_err);
            ok = ok && r.rel_err <= 0.05;
        }
        double consistency = 0.0;
        for (double a : {0.5, 0.7}) {
            std::vector<QuadSegment> segs{{0.0, a, 0}, {a, 1.0, 0}};
            auto f = [a](double r, std::size_t) { return density_profile(r, a) * r; };
            const auto out = integrate_segments(f, segs, {1e-13, 500000});
            consistency =
                std::max(consistency, std::abs(4.0 * out.value - 2.0 * std::asin(a)));
        }
        ok = ok && consistency <= 1e-10;
        report(7, "density law", ok,
               fmt("max annulus rel err %.4f (<=0.05), profile consistency %.1e (<=1e-10)",
                   worst, consistency));
    }

    // ---- 8: stationary phase decay and uniformity ------------------------
    {
        std::vector<double> ts, errs;
        for (int m : {3, 8, 21, 55, 144, 318}) {
            const double t = kPi / 4 + (m + 0.5) * kPi;
            ts.push_back(t);
            errs.push_back(std::abs(brute_force(circle_problem(), t, 1e-11) -
                                    leading_term(circle_problem(), t)));
        }
        const double slope = log_log_slope(ts, errs);
        bool ok = slope >= -1.7 && slope <= -1.3;

        auto family = [](double lambda) { return chord_phase_problem(0.3, lambda); };
        std::vector<double> scan_ts;
        for (double t = 10.0; t <= 200.0 + 1e-9; t *= 1.45) scan_ts.push_back(t);
        const auto scan = uniform_remainder_scan(
            family, scan_ts, {0.0, 0.005, 0.01, 0.02, 0.05, 0.1}, 1e-10);
        ok = ok && scan.max <= 3.0 * scan.median;
        report(8, "stationary phase", ok,
               fmt("bessel slope %.3f (in [-1.7,-1.3]), scan max/median %.2f (<=3)", slope,
                   scan.max / scan.median));
    }

    // ---- 9: endpoint formula ---------------------------------------------
    {
        PhaseProblem lin;
        lin.lo = 0.3;
        lin.hi = 1.7;
        lin.phase = [](double x) { return x; };
        lin.phase_deriv = [](double) { return 1.0; };
        const double t0 = 10.0;
        const std::complex<double> closed =
            (std::polar(1.0, t0 * lin.hi) - std::polar(1.0, t0 * lin.lo)) /
            std::complex<double>(0.0, t0);
        const double exact_gap = std::abs(boundary_term(lin, t0) - closed);

        PhaseProblem quad;
        quad.lo = 1.0;
        quad.hi = 2.0;
        quad.phase = [](double x) { return x * x; };
        quad.phase_deriv = [](double x) { return 2.0 * x; };
        std::vector<double> ts{100.0, 316.22776601683793, 1000.0}, errs;
        for (double t : ts)
            errs.push_back(std::abs(brute_force(quad, t, 1e-12) - boundary_term(quad, t)));
        const double slope = log_log_slope(ts, errs);
        const bool ok = exact_gap <= 1e-12 && slope >= -2.2 && slope <= -1.8;
        report(9, "endpoint formula", ok,
               fmt("linear-phase gap %.1e (<=1e-12), quadratic slope %.3f (in [-2.2,-1.8])",
                   exact_gap, slope));
    }

    // ---- 10: propagation oracle ------------------------------------------
    {
        std::mt19937 rng(777);
        std::uniform_real_distribution<double> ua(0.0, 0.9), ual(0.0, 2 * kPi), ut(0.0, 50.0);
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const double a = ua(rng), alpha = ual(rng), t = ut(rng);
            const RayState e = propagate_exact(Source{a}, alpha, t);
            const RayState s = propagate_stepped(Source{a}, alpha, t, 0.01);
            worst = std::max(worst, (e.position - s.position).norm());
        }
        report(10, "propagation oracle", worst <= 1e-8,
               fmt("max |exact - stepped| %.2e (<=1e-8) over 1000 runs", worst));
    }

    // ---- 11: length-method equivalence ------------------------------------
    {
        bool ok = true;
        double worst = 0.0;
        std::vector<std::pair<double, double>> cases;
        for (double a : {0.1, 0.5, 0.9})
            for (double t : {5.0, 20.0}) cases.emplace_back(a, t);
        std::vector<double> gaps(cases.size());
        parallel_for(cases.size(), [&](std::size_t i) {
            const auto [a, t] = cases[i];
            gaps[i] = std::abs(front_length(Source{a}, t, 1e-8) -
                               polyline_length(Source{a}, t, 1000000, true));
        });
        for (double g : gaps) worst = std::max(worst, g);
        ok = worst <= 1e-4;
        report(11, "length methods", ok, fmt("max |quadrature - polyline| %.2e (<=1e-4)", worst));
    }

    if (failures == 0) {
        std::printf("all criteria passed\n");
    } else {
        std::printf("%d criteria FAILED\n", failures);
    }
    return failures;
}
