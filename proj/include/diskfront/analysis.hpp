#pragma once

// Length-series post-processing: assemble (t, simulated, model, slope-line)
// records, then quantify the oscillation around the linear growth -- its
// amplitude growth exponent, its period, and how much of it the series model
// explains. Detrending always uses the exact slope line, never a fitted one,
// so the oscillation is not absorbed into the trend.

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <vector>

namespace diskfront {

struct LengthSeries {
    double a;
    std::vector<double> t_values;     // strictly increasing
    std::vector<double> sim;          // measured |S_t|
    std::vector<double> model;        // series model
    std::vector<double> lambda_line;  // 2*asin(a)*t
};

/// The series model coincides with the slope line (every oscillation term
/// vanishes, which happens at a = 1/2), making the fit ratio meaningless.
class DegenerateModelError : public std::runtime_error {
public:
    DegenerateModelError() : std::runtime_error("model coincides with the slope line; use a boundedness test") {}
};

/// Simulate and model |S_t| on a uniform grid over [t_min, t_max].
/// Parallelizes over t; set DISKFRONT_THREADS to bound the worker count.
LengthSeries build_series(double a, double t_min, double t_max, double dt, int terms,
                          double quad_tol = 1e-6);

/// Peaks of |values| over sliding windows of the given width/step; returns
/// (window center, window max) pairs.
struct WindowedPeaks {
    std::vector<double> centers;
    std::vector<double> peaks;
};
WindowedPeaks windowed_peaks(const std::vector<double>& ts, const std::vector<double>& values,
                             double window = 2.0, double step = 1.0);

/// Least-squares slope of log(y) against log(x); non-positive y entries are
/// skipped.
double log_log_slope(const std::vector<double>& x, const std::vector<double>& y);

/// Growth exponent p of the windowed max of |sim - lambda_line| ~ C * t^p.
/// Requires a decade of t or at least ten oscillation periods.
double amplitude_exponent(const LengthSeries& series);

/// Period of the detrended residual from the first significant peak of its
/// autocorrelation, refined parabolically. Requires >= 10 periods of data on
/// a uniform grid.
double dominant_period(const LengthSeries& series);

/// Phase (argument) of the period-2 component of the residual's
/// autocorrelation; near zero whenever a period-2 oscillation dominates.
double oscillation_phase(const LengthSeries& series);

/// RMS(sim - model) / RMS(sim - lambda_line); below 1 means the oscillation
/// series explains part of the residual. Throws DegenerateModelError when the
/// model is indistinguishable from the slope line.
double model_fit_ratio(const LengthSeries& series);

struct AnalysisReport {
    double period{0.0};
    double exponent{0.0};
    double fit_ratio{0.0};
    bool degenerate_model{false};
    double residual_max{0.0};  // max |sim - lambda_line|, reported when degenerate
};

AnalysisReport analyze(const LengthSeries& series);

/// CSV with header "t,sim,model,lambda_t,residual" (residual = sim - lambda_t).
void write_series_csv(std::ostream& os, const LengthSeries& series);

/// Flat key=value lines: period=..., exponent=..., fit_ratio=... .
void write_report(std::ostream& os, const AnalysisReport& report);

}  // namespace diskfront
