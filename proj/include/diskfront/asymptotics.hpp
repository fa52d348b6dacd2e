#pragma once

// Closed-form and integral models for the front length.
//
// The growth slope is 2*asin(a). The oscillating corrections come in two
// equivalent integral forms (over the chord half-angle xi, or over the launch
// angle alpha) and as a closed-form series of period-2 terms whose amplitude
// decays like (2n+1)^(-5/2) / sqrt(t). The integral evaluators split the
// integration range at every kink of the sawtooth profile before applying
// adaptive quadrature.

namespace diskfront {

struct ModelParams {
    double a;          // source distance from the center, in [0,1)
    int terms;         // series truncation: n = 0..terms inclusive
    double quad_tol;   // absolute tolerance for the integral evaluators
};

/// Linear growth rate of the front length: 2*asin(a).
double length_slope(double a);

/// Period-1 triangle wave, |2*theta - 1| on [0,1], extended periodically.
/// Range [0,1], mean 1/2.
double triangle_wave(double theta);

/// Fractional offset of the source along the two-chord cycle with half-angle
/// xi: 1/2 +- sqrt(a^2 - cos^2 xi)/(2*sin xi). Requires cos^2 xi <= a^2;
/// sign selects the branch.
double source_chord_fraction(double a, double xi, int sign);

/// Model length in the chord-angle form: t times the sum over both branches
/// of the integral of triangle_wave(offset - t/(2 sin xi)) over the xi range
/// reachable from the source. Absolute error <= quad_tol.
double model_length_integral_xi(double a, double t, double quad_tol = 1e-8);

/// Same quantity as an integral over the launch angle (full circle); the
/// weight |a cos alpha|/sqrt(1 - a^2 sin^2 alpha) is the Jacobian of the
/// change of variables between the two forms.
double model_length_integral_alpha(double a, double t, double quad_tol = 1e-8);

/// One oscillation term: amplitude (2n+1)^(-5/2)/sqrt(t), period 2/(2n+1).
double oscillation_term(double a, int n, double t);

/// Series model: 2*asin(a)*t + t * sum_{n=0}^{terms} oscillation_term.
double model_length_series(const ModelParams& params, double t);

/// Fourier coefficient of the triangle wave of e^{2 pi i k theta}:
/// 1/2 at k = 0, 2/(pi^2 k^2) for odd k, 0 otherwise.
double triangle_wave_fourier_coefficient(long k);

}  // namespace diskfront
