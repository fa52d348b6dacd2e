#include "diskfront/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "diskfront/quadrature.hpp"

namespace diskfront {

namespace {

constexpr double kPi = std::numbers::pi;

// The triangle wave has kinks wherever its argument crosses a half-integer.
// sin(2*pi*arg) vanishes exactly there, so sign changes of that indicator
// bracket every transversal kink preimage; tangential touches leave the
// composition C^1 and need no split.
std::vector<double> kink_splits(const std::function<double(double)>& arg, double lo, double hi,
                                double range_hint) {
    std::vector<double> splits;
    splits.push_back(lo);
    const std::size_t n = static_cast<std::size_t>(
        std::clamp(64.0 * std::ceil(range_hint + 8.0), 2048.0, 4.0e6));
    const double h = (hi - lo) / static_cast<double>(n);

    auto indicator = [&](double x) { return std::sin(2.0 * kPi * arg(x)); };
    double w_prev = indicator(lo);
    for (std::size_t i = 1; i <= n; ++i) {
        const double x = (i == n) ? hi : lo + h * static_cast<double>(i);
        const double w = indicator(x);
        if ((w_prev < 0.0 && w > 0.0) || (w_prev > 0.0 && w < 0.0)) {
            double xl = x - h, xr = x, wl = w_prev;
            for (int it = 0; it < 60 && xr - xl > 1e-14; ++it) {
                const double xm = 0.5 * (xl + xr);
                const double wm = indicator(xm);
                if ((wl < 0.0) == (wm < 0.0)) {
                    xl = xm;
                    wl = wm;
                } else {
                    xr = xm;
                }
            }
            splits.push_back(0.5 * (xl + xr));
        } else if (w == 0.0 && i < n) {
            splits.push_back(x);
        }
        w_prev = w;
    }
    splits.push_back(hi);
    std::sort(splits.begin(), splits.end());
    splits.erase(std::unique(splits.begin(), splits.end()), splits.end());
    return splits;
}

double integrate_with_kinks(const std::function<double(double)>& f,
                            const std::function<double(double)>& arg, double lo, double hi,
                            double range_hint, const std::vector<double>& extra_splits,
                            double abs_tol, const char* context) {
    std::vector<double> splits = kink_splits(arg, lo, hi, range_hint);
    for (double s : extra_splits)
        if (s > lo && s < hi) splits.push_back(s);
    std::sort(splits.begin(), splits.end());
    splits.erase(std::unique(splits.begin(), splits.end()), splits.end());

    std::vector<QuadSegment> segments;
    segments.reserve(splits.size());
    for (std::size_t i = 0; i + 1 < splits.size(); ++i)
        segments.push_back({splits[i], splits[i + 1], 0});

    QuadOptions opt;
    opt.abs_tol = abs_tol;
    opt.max_evaluations = std::max<std::size_t>(2'000'000, 2000 * segments.size());
    auto wrapped = [&f](double x, std::size_t) { return f(x); };
    const auto out = integrate_segments(wrapped, segments, opt);
    if (!out.converged) throw QuadratureFailure(out.value, out.error, context);
    return out.value;
}

}  // namespace

double length_slope(double a) {
    if (!(a >= 0.0 && a < 1.0)) throw std::invalid_argument("length_slope: a must be in [0,1)");
    return 2.0 * std::asin(a);
}

double triangle_wave(double theta) {
    const double frac = theta - std::floor(theta);
    return std::abs(2.0 * frac - 1.0);
}

double source_chord_fraction(double a, double xi, int sign) {
    const double c = std::cos(xi);
    double radicand = a * a - c * c;
    if (radicand < 0.0) {
        if (radicand < -1e-14) throw std::domain_error("source_chord_fraction: cos^2 xi > a^2");
        radicand = 0.0;
    }
    return 0.5 + (sign >= 0 ? 1.0 : -1.0) * std::sqrt(radicand) / (2.0 * std::sin(xi));
}

double model_length_integral_xi(double a, double t, double quad_tol) {
    if (!(a > 0.0 && a < 1.0))
        throw std::invalid_argument("model_length_integral_xi: a must be in (0,1)");
    if (!(t > 0.0)) throw std::invalid_argument("model_length_integral_xi: t must be > 0");

    const double alpha0 = std::asin(a);
    const double lo = kPi / 2.0 - alpha0;
    const double hi = kPi / 2.0 + alpha0;
    // t/(2 sin xi) spans this much over the interval; controls the kink count.
    const double range_hint = 0.5 * t * (1.0 / std::sqrt(1.0 - a * a) - 1.0) + 2.0;
    const std::vector<double> extra{kPi / 2.0};

    double total = 0.0;
    for (int sign : {+1, -1}) {
        auto arg = [a, t, sign](double xi) {
            return source_chord_fraction(a, xi, sign) - t / (2.0 * std::sin(xi));
        };
        auto f = [&arg](double xi) { return triangle_wave(arg(xi)); };
        total += integrate_with_kinks(f, arg, lo, hi, range_hint, extra,
                                      quad_tol / (2.0 * t), "model_length_integral_xi");
    }
    return t * total;
}

double model_length_integral_alpha(double a, double t, double quad_tol) {
    if (!(a > 0.0 && a < 1.0))
        throw std::invalid_argument("model_length_integral_alpha: a must be in (0,1)");
    if (!(t > 0.0)) throw std::invalid_argument("model_length_integral_alpha: t must be > 0");

    auto arg = [a, t](double alpha) {
        const double s = std::sqrt(1.0 - a * a * std::sin(alpha) * std::sin(alpha));
        return 0.5 - (a * std::cos(alpha) + t) / (2.0 * s);
    };
    // |a cos alpha| / sqrt(1 - a^2 sin^2 alpha) = |d xi / d alpha|: the
    // Jacobian that makes this the alpha-form of the chord-angle integral.
    auto f = [a, &arg](double alpha) {
        const double s = std::sqrt(1.0 - a * a * std::sin(alpha) * std::sin(alpha));
        return triangle_wave(arg(alpha)) * std::abs(a * std::cos(alpha)) / s;
    };
    const double range_hint = 0.5 * (t + a) * (1.0 / std::sqrt(1.0 - a * a) - 1.0) + 2.0;
    const std::vector<double> extra{kPi / 2.0, 3.0 * kPi / 2.0};
    const double integral = integrate_with_kinks(f, arg, 0.0, 2.0 * kPi, range_hint, extra,
                                                 quad_tol / t, "model_length_integral_alpha");
    return t * integral;
}

double oscillation_term(double a, int n, double t) {
    if (n < 0) throw std::invalid_argument("oscillation_term: n must be >= 0");
    if (!(t > 0.0)) throw std::invalid_argument("oscillation_term: t must be > 0");
    const double m = 2.0 * n + 1.0;
    return -8.0 * std::sqrt(2.0) / (kPi * kPi * std::pow(m, 2.5) * std::sqrt(t)) *
           std::cos(m * kPi * a) * std::cos(kPi * (m * t + 0.25));
}

double model_length_series(const ModelParams& params, double t) {
    if (!(params.a >= 0.0 && params.a < 1.0))
        throw std::invalid_argument("model_length_series: a must be in [0,1)");
    if (params.terms < 0) throw std::invalid_argument("model_length_series: terms must be >= 0");
    if (!(t > 0.0)) throw std::invalid_argument("model_length_series: t must be > 0");
    double sum = 0.0;
    for (int n = params.terms; n >= 0; --n) sum += oscillation_term(params.a, n, t);
    return length_slope(params.a) * t + t * sum;
}

double triangle_wave_fourier_coefficient(long k) {
    if (k == 0) return 0.5;
    if (k % 2 == 0) return 0.0;
    const double kk = static_cast<double>(k);
    return 2.0 / (kPi * kPi * kk * kk);
}

}  // namespace diskfront
