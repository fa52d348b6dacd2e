#include "diskfront/stationary_phase.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "diskfront/quadrature.hpp"

namespace diskfront {

namespace {

constexpr double kPi = std::numbers::pi;

double eval_amplitude(const PhaseProblem& p, double x) {
    return p.amplitude ? p.amplitude(x) : 1.0;
}

double eval_deriv(const PhaseProblem& p, double x) {
    if (p.phase_deriv) return p.phase_deriv(x);
    const double h = 1e-6;
    return (p.phase(x + h) - p.phase(x - h)) / (2.0 * h);
}

double eval_second(const PhaseProblem& p, double x) {
    if (p.phase_second_deriv) return p.phase_second_deriv(x);
    const double h = 1e-6;
    if (p.phase_deriv)  // differencing S' is far better conditioned than S
        return (p.phase_deriv(x + h) - p.phase_deriv(x - h)) / (2.0 * h);
    return (p.phase(x + h) - 2.0 * p.phase(x) + p.phase(x - h)) / (h * h);
}

}  // namespace

std::vector<CriticalPoint> critical_points(const PhaseProblem& problem, double tol) {
    const double lo = problem.lo, hi = problem.hi;
    if (!(hi > lo)) throw std::invalid_argument("critical_points: empty domain");

    const int n = 4096;
    const double h = (hi - lo) / n;
    std::vector<double> roots;

    // Interior endpoints only in the periodic case; a zero of S' exactly at a
    // closed-interval endpoint is treated as a boundary feature, not a root.
    const double eps = 1e-9 * (hi - lo);
    double x_prev = problem.periodic ? lo : lo + eps;
    double d_prev = eval_deriv(problem, x_prev);
    const int last = problem.periodic ? n : n - 1;
    for (int i = 1; i <= last; ++i) {
        double x = lo + h * i;
        if (!problem.periodic && i == last) x = hi - eps;
        const double d = eval_deriv(problem, x);
        if (d_prev == 0.0) {
            roots.push_back(x_prev);
        } else if ((d_prev < 0.0) != (d < 0.0)) {
            double xl = x_prev, xr = x, dl = d_prev;
            while (xr - xl > tol) {
                const double xm = 0.5 * (xl + xr);
                const double dm = eval_deriv(problem, xm);
                if (dm == 0.0) {
                    xl = xr = xm;
                    break;
                }
                if ((dl < 0.0) == (dm < 0.0)) {
                    xl = xm;
                    dl = dm;
                } else {
                    xr = xm;
                }
            }
            roots.push_back(0.5 * (xl + xr));
        }
        x_prev = x;
        d_prev = d;
    }

    std::vector<CriticalPoint> out;
    for (double r : roots) {
        const double s2 = eval_second(problem, r);
        if (std::abs(s2) <= 1e-8)
            throw std::domain_error("critical_points: degenerate critical point at x = " +
                                    std::to_string(r));
        out.push_back({r, problem.phase(r), s2});
    }
    return out;
}

std::complex<double> leading_term(const PhaseProblem& problem, double t) {
    if (t == 0.0) throw std::invalid_argument("leading_term: t must be nonzero");
    if (t < 0.0) return std::conj(leading_term(problem, -t));

    std::complex<double> sum{0.0, 0.0};
    for (const CriticalPoint& cp : critical_points(problem)) {
        const double eps = cp.second_deriv > 0.0 ? 1.0 : -1.0;
        const double factor = std::sqrt(2.0 * kPi / (t * std::abs(cp.second_deriv)));
        const std::complex<double> phase =
            std::polar(1.0, eps * kPi / 4.0 + t * cp.phase_value);
        sum += factor * phase * eval_amplitude(problem, cp.x);
    }
    return sum;
}

std::complex<double> boundary_term(const PhaseProblem& problem, double t) {
    if (t == 0.0) throw std::invalid_argument("boundary_term: t must be nonzero");
    const double dlo = eval_deriv(problem, problem.lo + 1e-9 * (problem.hi - problem.lo));
    const double dhi = eval_deriv(problem, problem.hi - 1e-9 * (problem.hi - problem.lo));
    if (std::abs(dlo) < 1e-12 || std::abs(dhi) < 1e-12)
        throw std::domain_error("boundary_term: phase derivative vanishes at an endpoint");

    const std::complex<double> it{0.0, t};
    const std::complex<double> at_hi =
        eval_amplitude(problem, problem.hi) * std::polar(1.0, t * problem.phase(problem.hi)) / dhi;
    const std::complex<double> at_lo =
        eval_amplitude(problem, problem.lo) * std::polar(1.0, t * problem.phase(problem.lo)) / dlo;
    return (at_hi - at_lo) / it;
}

std::complex<double> brute_force(const PhaseProblem& problem, double t, double tol) {
    const double lo = problem.lo, hi = problem.hi;
    if (!(hi > lo)) throw std::invalid_argument("brute_force: empty domain");
    if (!(tol > 0.0)) throw std::invalid_argument("brute_force: tol must be > 0");

    // Seed two panels per oscillation (>= 20 nodes each full period). The
    // oscillation count comes from the total phase variation, estimated by a
    // midpoint sum of |S'| so integrable endpoint singularities do not blow
    // up the panel count; local steepness is left to adaptive refinement.
    double total_variation = 0.0;
    const double cell = (hi - lo) / 256.0;
    for (int i = 0; i < 256; ++i)
        total_variation += std::abs(eval_deriv(problem, lo + cell * (i + 0.5))) * cell;
    const double oscillations = std::abs(t) * total_variation / (2.0 * kPi);
    const std::size_t panels =
        static_cast<std::size_t>(std::clamp(std::ceil(oscillations * 2.0), 4.0, 300000.0));

    std::vector<QuadSegment> segments;
    segments.reserve(panels);
    for (std::size_t i = 0; i < panels; ++i) {
        const double a = lo + (hi - lo) * static_cast<double>(i) / panels;
        const double b = lo + (hi - lo) * static_cast<double>(i + 1) / panels;
        segments.push_back({a, b, 0});
    }

    auto f = [&](double x, std::size_t) {
        return eval_amplitude(problem, x) * std::polar(1.0, t * problem.phase(x));
    };
    QuadOptions opt;
    opt.abs_tol = tol;
    opt.max_evaluations = std::max<std::size_t>(4'000'000, 60 * panels);
    const auto out = integrate_segments_complex(f, segments, opt);
    if (!out.converged) throw QuadratureFailure(std::abs(out.value), out.error, "brute_force");
    return out.value;
}

RemainderScan uniform_remainder_scan(const std::function<PhaseProblem(double)>& family,
                                     const std::vector<double>& t_grid,
                                     const std::vector<double>& lambda_grid,
                                     double brute_tol) {
    if (t_grid.empty() || lambda_grid.empty())
        throw std::invalid_argument("uniform_remainder_scan: empty grid");

    RemainderScan scan;
    for (double t : t_grid) {
        double sup = 0.0;
        for (double lambda : lambda_grid) {
            const PhaseProblem problem = family(lambda);
            const std::complex<double> brute = brute_force(problem, t, brute_tol);
            const std::complex<double> lead = leading_term(problem, t);
            sup = std::max(sup, std::abs(brute - lead) * std::pow(t, 1.5));
        }
        scan.t_values.push_back(t);
        scan.sup_scaled.push_back(sup);
    }
    std::vector<double> sorted = scan.sup_scaled;
    std::sort(sorted.begin(), sorted.end());
    scan.max = sorted.back();
    scan.median = sorted[sorted.size() / 2];
    return scan;
}

PhaseProblem chord_phase_problem(double a, double lambda) {
    if (!(a > 0.0 && a < 1.0))
        throw std::invalid_argument("chord_phase_problem: a must be in (0,1)");
    PhaseProblem p;
    const double alpha0 = std::asin(a);
    p.lo = kPi / 2.0 - alpha0;
    p.hi = kPi / 2.0 + alpha0;
    p.phase = [a, lambda](double xi) {
        const double s = std::sin(xi);
        const double w = std::sqrt(std::max(a * a - std::cos(xi) * std::cos(xi), 0.0));
        return (1.0 - lambda * w) / s;
    };
    // d/dxi [sqrt(a^2-cos^2)/sin] = cos*(1-a^2)/(w*sin^2), so
    // S' = -(cos/sin^2) * (1 + lambda*(1-a^2)/w); unbounded at the endpoints,
    // which only steepens the phase there.
    p.phase_deriv = [a, lambda](double xi) {
        const double s = std::sin(xi), c = std::cos(xi);
        const double w = std::sqrt(std::max(a * a - c * c, 0.0));
        return -(c / (s * s)) * (1.0 + lambda * (1.0 - a * a) / std::max(w, 1e-300));
    };
    return p;
}

double bessel_j0(double x) {
    x = std::abs(x);
    if (x <= 20.0) {
        // Ascending series in extended precision; the alternating terms reach
        // ~8e6 at x = 20 and the cancellation needs the spare digits.
        long double sum = 1.0L, term = 1.0L;
        const long double q = static_cast<long double>(x) * x / 4.0L;
        for (int m = 1; m < 80; ++m) {
            term *= -q / (static_cast<long double>(m) * m);
            sum += term;
            if (std::abs(static_cast<double>(term)) < 1e-20 * std::abs(static_cast<double>(sum)) &&
                m > 5)
                break;
        }
        return static_cast<double>(sum);
    }
    // Large-argument expansion: J0 = sqrt(2/(pi x)) (P cos(x - pi/4) - Q sin(x - pi/4))
    // with a_m = ((2m-1)!!)^2 (-1)^m / (m! 8^m); truncated where terms stop decreasing.
    double a = 1.0;
    double p = 1.0, qq = 0.0;
    double prev = 1.0;
    for (int m = 1; m <= 16; ++m) {
        const double odd = 2.0 * m - 1.0;
        a *= -odd * odd / (8.0 * m);
        const double term = a / std::pow(x, m);
        if (std::abs(term) > prev) break;
        prev = std::abs(term);
        if (m % 2 == 0)
            p += (m % 4 == 0 ? term : -term);
        else
            qq += ((m - 1) % 4 == 0 ? term : -term);
    }
    const double chi = x - kPi / 4.0;
    return std::sqrt(2.0 / (kPi * x)) * (p * std::cos(chi) - qq * std::sin(chi));
}

}  // namespace diskfront
