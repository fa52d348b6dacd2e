#pragma once

// Numerical stationary phase for integrals of a(x) * e^{i t S(x)}.
//
// leading_term sums the standard nondegenerate-critical-point contribution
// sqrt(2 pi / (t |S''|)) e^{i sign(S'') pi/4} e^{i t S} a over the critical
// points of the phase; boundary_term is the two-endpoint formula valid when
// S' never vanishes; brute_force is the oscillation-resolving quadrature
// oracle both are validated against. All evaluators conjugate under t -> -t.

#include <complex>
#include <functional>
#include <vector>

namespace diskfront {

struct PhaseProblem {
    std::function<double(double)> phase;                 // S
    std::function<double(double)> amplitude;             // a; empty means 1
    std::function<double(double)> phase_deriv;           // optional S'
    std::function<double(double)> phase_second_deriv;    // optional S''
    double lo{0.0};
    double hi{1.0};
    bool periodic{false};  // when set, the domain is one full period of S
};

struct CriticalPoint {
    double x;
    double phase_value;    // S(x)
    double second_deriv;   // S''(x)
};

/// All simple zeros of S' in the domain, by sign-change scan plus bisection
/// to tol. Throws std::domain_error on a degenerate critical point
/// (|S''| <= 1e-8).
std::vector<CriticalPoint> critical_points(const PhaseProblem& problem, double tol = 1e-12);

/// Sum of the leading-order critical-point contributions.
std::complex<double> leading_term(const PhaseProblem& problem, double t);

/// Endpoint formula (a e^{itS}/S' at hi minus at lo) / (it); requires S' != 0
/// on the closed domain. Exact for linear phase with constant amplitude.
std::complex<double> boundary_term(const PhaseProblem& problem, double t);

/// Adaptive quadrature of the oscillatory integral, pre-split so every panel
/// starts with at least ~20 nodes per oscillation. Absolute error <= tol.
std::complex<double> brute_force(const PhaseProblem& problem, double t, double tol = 1e-10);

struct RemainderScan {
    std::vector<double> t_values;
    std::vector<double> sup_scaled;  // sup over the family of |brute - leading| * t^{3/2}
    double max{0.0};
    double median{0.0};
};

/// Scan |brute_force - leading_term| * t^{3/2} over a parameterized family of
/// phase problems; the scaled remainder staying bounded over the grid is the
/// uniformity check used by the oscillation series.
RemainderScan uniform_remainder_scan(const std::function<PhaseProblem(double)>& family,
                                     const std::vector<double>& t_grid,
                                     const std::vector<double>& lambda_grid,
                                     double brute_tol = 1e-10);

/// Bessel J0, by ascending series up to 20 and the large-argument expansion
/// beyond; reference oracle for the circle-phase integral.
double bessel_j0(double x);

/// Phase family behind the length-oscillation series: time-per-chord
/// 1/sin(xi) perturbed by lambda times the source-offset term
/// sqrt(a^2 - cos^2 xi)/sin(xi), on the reachable xi interval. The critical
/// point stays at xi = pi/2 for every lambda and the family is Morse there.
PhaseProblem chord_phase_problem(double a, double lambda);

}  // namespace diskfront
