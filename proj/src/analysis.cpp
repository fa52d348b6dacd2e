#include "diskfront/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <mutex>
#include <numbers>
#include <ostream>

#include "diskfront/asymptotics.hpp"
#include "diskfront/parallel.hpp"
#include "diskfront/wavefront.hpp"

namespace diskfront {

namespace {

std::vector<double> residual_detrended(const LengthSeries& s) {
    std::vector<double> r(s.sim.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = s.sim[i] - s.lambda_line[i];
    return r;
}

double uniform_dt(const LengthSeries& s) {
    if (s.t_values.size() < 2) throw std::invalid_argument("series too short");
    const double dt = s.t_values[1] - s.t_values[0];
    for (std::size_t i = 1; i + 1 < s.t_values.size(); ++i)
        if (std::abs(s.t_values[i + 1] - s.t_values[i] - dt) > 1e-9)
            throw std::invalid_argument("series grid is not uniform");
    return dt;
}

double rms(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s / static_cast<double>(v.size()));
}

// Mean-removed, unbiased autocorrelation up to max_lag samples.
std::vector<double> autocorrelation(const std::vector<double>& r, std::size_t max_lag) {
    double mean = 0.0;
    for (double x : r) mean += x;
    mean /= static_cast<double>(r.size());
    std::vector<double> d(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) d[i] = r[i] - mean;

    std::vector<double> c(max_lag + 1, 0.0);
    for (std::size_t lag = 0; lag <= max_lag; ++lag) {
        double s = 0.0;
        for (std::size_t i = 0; i + lag < d.size(); ++i) s += d[i] * d[i + lag];
        c[lag] = s / static_cast<double>(d.size() - lag);
    }
    return c;
}

}  // namespace

LengthSeries build_series(double a, double t_min, double t_max, double dt, int terms,
                          double quad_tol) {
    if (!(a >= 0.0 && a < 1.0)) throw std::invalid_argument("build_series: a must be in [0,1)");
    if (!(dt > 0.0)) throw std::invalid_argument("build_series: dt must be > 0");
    if (!(t_min < t_max)) throw std::invalid_argument("build_series: need t_min < t_max");

    LengthSeries s;
    s.a = a;
    for (double t = t_min; t <= t_max + 1e-12; t += dt) s.t_values.push_back(t);
    const std::size_t n = s.t_values.size();
    s.sim.assign(n, 0.0);
    s.model.assign(n, 0.0);
    s.lambda_line.assign(n, 0.0);

    const Source src{a};
    const ModelParams params{a, terms, quad_tol};
    const double slope = length_slope(a);

    std::exception_ptr first_error;
    std::mutex error_mutex;
    parallel_for(n, [&](std::size_t i) {
        try {
            const double t = s.t_values[i];
            s.sim[i] = front_length(src, t, quad_tol);
            s.model[i] = (t > 0.0) ? model_length_series(params, t) : 0.0;
            s.lambda_line[i] = slope * t;
        } catch (...) {
            std::scoped_lock lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
        }
    });
    if (first_error) std::rethrow_exception(first_error);
    return s;
}

WindowedPeaks windowed_peaks(const std::vector<double>& ts, const std::vector<double>& values,
                             double window, double step) {
    WindowedPeaks out;
    if (ts.empty()) return out;
    const double t_end = ts.back();
    for (double lo = ts.front(); lo + window <= t_end + 1e-12; lo += step) {
        double peak = 0.0;
        bool any = false;
        for (std::size_t i = 0; i < ts.size(); ++i) {
            if (ts[i] < lo || ts[i] > lo + window) continue;
            peak = std::max(peak, std::abs(values[i]));
            any = true;
        }
        if (any) {
            out.centers.push_back(lo + 0.5 * window);
            out.peaks.push_back(peak);
        }
    }
    return out;
}

double log_log_slope(const std::vector<double>& x, const std::vector<double>& y) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t n = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(y[i] > 0.0) || !(x[i] > 0.0)) continue;
        const double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++n;
    }
    if (n < 3) throw std::invalid_argument("log_log_slope: fewer than 3 usable points");
    const double denom = static_cast<double>(n) * sxx - sx * sx;
    return (static_cast<double>(n) * sxy - sx * sy) / denom;
}

double amplitude_exponent(const LengthSeries& series) {
    const double t0 = series.t_values.front(), t1 = series.t_values.back();
    if (!(t1 / std::max(t0, 1e-12) >= 10.0 || t1 - t0 >= 20.0))
        throw std::invalid_argument("amplitude_exponent: need a decade of t or >= 10 periods");
    const auto peaks = windowed_peaks(series.t_values, residual_detrended(series));
    return log_log_slope(peaks.centers, peaks.peaks);
}

double dominant_period(const LengthSeries& series) {
    const double dt = uniform_dt(series);
    const double span = series.t_values.back() - series.t_values.front();
    if (span < 20.0) throw std::invalid_argument("dominant_period: need >= 10 periods of data");

    const std::vector<double> r = residual_detrended(series);
    const std::size_t max_lag =
        std::min(r.size() - 2, static_cast<std::size_t>(std::llround(4.0 / dt)));
    const std::vector<double> c = autocorrelation(r, max_lag);

    // Skip the zero-lag peak: wait for the first non-positive value.
    std::size_t start = 1;
    while (start < c.size() && c[start] > 0.0) ++start;
    if (start >= c.size()) throw std::runtime_error("dominant_period: no significant peak");

    std::size_t best = start;
    for (std::size_t lag = start; lag < c.size(); ++lag)
        if (c[lag] > c[best]) best = lag;
    if (best == 0 || best + 1 >= c.size() || c[best] <= 0.1 * c[0])
        throw std::runtime_error("dominant_period: no significant peak");

    // Parabolic refinement around the peak.
    const double num = c[best - 1] - c[best + 1];
    const double den = c[best - 1] - 2.0 * c[best] + c[best + 1];
    const double shift = (den != 0.0) ? 0.5 * num / den : 0.0;
    return (static_cast<double>(best) + shift) * dt;
}

double oscillation_phase(const LengthSeries& series) {
    const double dt = uniform_dt(series);
    const std::vector<double> r = residual_detrended(series);
    const std::size_t max_lag =
        std::min(r.size() - 2, static_cast<std::size_t>(std::llround(8.0 / dt)));
    const std::vector<double> c = autocorrelation(r, max_lag);
    std::complex<double> z{0.0, 0.0};
    for (std::size_t lag = 0; lag < c.size(); ++lag) {
        const double tau = static_cast<double>(lag) * dt;
        z += c[lag] * std::polar(1.0, -std::numbers::pi * tau) * dt;
    }
    return std::arg(z);
}

double model_fit_ratio(const LengthSeries& series) {
    std::vector<double> vs_model(series.sim.size()), vs_line(series.sim.size());
    double model_vs_line = 0.0;
    for (std::size_t i = 0; i < series.sim.size(); ++i) {
        vs_model[i] = series.sim[i] - series.model[i];
        vs_line[i] = series.sim[i] - series.lambda_line[i];
        model_vs_line = std::max(model_vs_line, std::abs(series.model[i] - series.lambda_line[i]));
    }
    const double denom = rms(vs_line);
    if (model_vs_line <= 1e-12 || denom <= 1e-12) throw DegenerateModelError{};
    return rms(vs_model) / denom;
}

AnalysisReport analyze(const LengthSeries& series) {
    AnalysisReport report;
    report.period = dominant_period(series);
    report.exponent = amplitude_exponent(series);
    for (std::size_t i = 0; i < series.sim.size(); ++i)
        report.residual_max =
            std::max(report.residual_max, std::abs(series.sim[i] - series.lambda_line[i]));
    try {
        report.fit_ratio = model_fit_ratio(series);
    } catch (const DegenerateModelError&) {
        report.degenerate_model = true;
    }
    return report;
}

void write_series_csv(std::ostream& os, const LengthSeries& series) {
    os << "t,sim,model,lambda_t,residual\n";
    char line[192];
    for (std::size_t i = 0; i < series.t_values.size(); ++i) {
        std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%.17g,%.17g\n", series.t_values[i],
                      series.sim[i], series.model[i], series.lambda_line[i],
                      series.sim[i] - series.lambda_line[i]);
        os << line;
    }
}

void write_report(std::ostream& os, const AnalysisReport& report) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "period=%.6f\n", report.period);
    os << buf;
    std::snprintf(buf, sizeof buf, "exponent=%.6f\n", report.exponent);
    os << buf;
    if (report.degenerate_model) {
        os << "fit_ratio=degenerate: use boundedness test\n";
        std::snprintf(buf, sizeof buf, "residual_max=%.6f\n", report.residual_max);
        os << buf;
    } else {
        std::snprintf(buf, sizeof buf, "fit_ratio=%.6f\n", report.fit_ratio);
        os << buf;
        std::snprintf(buf, sizeof buf, "residual_max=%.6f\n", report.residual_max);
        os << buf;
    }
}

}  // namespace diskfront
