#include "diskfront/wavefront.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

#include "diskfront/quadrature.hpp"

namespace diskfront {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// The count k(alpha) = 1 + floor((t - t0)/chord) sweeps an interval of
// integers of width about t/2 * (1/sqrt(1-a^2) - 1); the scan grid needs a
// few cells per attainable level per monotone run (there are ~4 runs).
std::size_t scan_size(double a, double t) {
    const double span = 0.5 * t * (1.0 / std::sqrt(1.0 - a * a) - 1.0) + 4.0;
    const double n = 256.0 * std::ceil(span + 4.0);
    return static_cast<std::size_t>(std::clamp(n, 8192.0, 4.0e6));
}

void locate_jumps(const Source& src, double t, double lo, double hi, long klo, long khi,
                  double tol_alpha, std::vector<double>& out) {
    if (klo == khi) return;
    if (hi - lo < tol_alpha) {
        out.push_back(0.5 * (lo + hi));
        return;
    }
    const double mid = 0.5 * (lo + hi);
    const long kmid = reflection_count(src, mid, t);
    locate_jumps(src, t, lo, mid, klo, kmid, tol_alpha, out);
    locate_jumps(src, t, mid, hi, kmid, khi, tol_alpha, out);
}

}  // namespace

PieceDecomposition decompose(const Source& src, double t, double tol_alpha) {
    if (t < 0.0) throw std::invalid_argument("decompose: t must be >= 0");
    if (!(tol_alpha > 0.0)) throw std::invalid_argument("decompose: tol_alpha must be > 0");

    PieceDecomposition dec;
    const std::size_t n = scan_size(src.a, t);
    const double h = kTwoPi / static_cast<double>(n);

    long k_prev = reflection_count(src, 0.0, t);
    const long k_first = k_prev;
    for (std::size_t i = 1; i <= n; ++i) {
        const double alpha = (i == n) ? kTwoPi : h * static_cast<double>(i);
        const long k = (i == n) ? k_first : reflection_count(src, alpha, t);
        if (k != k_prev)
            locate_jumps(src, t, alpha - h, alpha, k_prev, k, tol_alpha, dec.breakpoints);
        k_prev = k;
    }
    std::sort(dec.breakpoints.begin(), dec.breakpoints.end());

    if (dec.breakpoints.empty()) {
        dec.pieces.push_back({0.0, kTwoPi, reflection_count(src, std::numbers::pi, t)});
        return dec;
    }
    for (std::size_t i = 0; i < dec.breakpoints.size(); ++i) {
        const double lo = dec.breakpoints[i];
        const double hi = (i + 1 < dec.breakpoints.size()) ? dec.breakpoints[i + 1]
                                                           : dec.breakpoints.front() + kTwoPi;
        const double mid = std::fmod(0.5 * (lo + hi), kTwoPi);
        dec.pieces.push_back({lo, hi, reflection_count(src, mid, t)});
    }
    return dec;
}

double front_length(const Source& src, double t, double quad_tol) {
    if (t < 0.0) throw std::invalid_argument("front_length: t must be >= 0");
    if (!(quad_tol > 0.0)) throw std::invalid_argument("front_length: quad_tol must be > 0");

    const PieceDecomposition dec = decompose(src, t);
    std::vector<QuadSegment> segments;
    segments.reserve(dec.pieces.size());
    for (std::size_t i = 0; i < dec.pieces.size(); ++i)
        segments.push_back({dec.pieces[i].alpha_lo, dec.pieces[i].alpha_hi, i});

    auto speed = [&](double alpha, std::size_t piece) {
        return front_derivative_on_branch(src, alpha, t, dec.pieces[piece].reflections).norm();
    };
    QuadOptions opt;
    opt.abs_tol = quad_tol;
    opt.max_evaluations = std::max<std::size_t>(2'000'000, 4000 * dec.pieces.size());
    const auto out = integrate_segments(speed, segments, opt);
    if (!out.converged)
        throw QuadratureFailure(out.value, out.error, "front_length");
    return out.value;
}

namespace {

double refined_segment_length(const Source& src, double t, double a0, const Vec2& p0, long k0,
                              double a1, const Vec2& p1, long k1) {
    if (k0 == k1 || a1 - a0 < 1e-10) return (p1 - p0).norm();
    const double mid = 0.5 * (a0 + a1);
    const RayState s = propagate_exact(src, mid, t);
    return refined_segment_length(src, t, a0, p0, k0, mid, s.position, s.reflections) +
           refined_segment_length(src, t, mid, s.position, s.reflections, a1, p1, k1);
}

}  // namespace

double polyline_length(const Source& src, double t, std::size_t n, bool refine) {
    if (n < 3) throw std::invalid_argument("polyline_length: n must be >= 3");
    const double h = kTwoPi / static_cast<double>(n);

    double total = 0.0;
    const RayState first = propagate_exact(src, 0.0, t);
    Vec2 prev_pos = first.position;
    long prev_k = first.reflections;
    double prev_alpha = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
        const double alpha = h * static_cast<double>(i);
        const RayState s =
            (i == n) ? first : propagate_exact(src, alpha, t);
        if (refine)
            total += refined_segment_length(src, t, prev_alpha, prev_pos, prev_k, alpha,
                                            s.position, s.reflections);
        else
            total += (s.position - prev_pos).norm();
        prev_pos = s.position;
        prev_k = s.reflections;
        prev_alpha = alpha;
    }
    return total;
}

FrontSample front_points(const Source& src, double t, std::size_t n) {
    if (n < 1) throw std::invalid_argument("front_points: n must be >= 1");
    FrontSample sample{src, t, {}, {}};
    sample.alphas.reserve(n);
    sample.states.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double alpha = kTwoPi * static_cast<double>(i) / static_cast<double>(n);
        sample.alphas.push_back(alpha);
        sample.states.push_back(propagate_exact(src, alpha, t));
    }
    return sample;
}

void write_front_csv(std::ostream& os, const FrontSample& sample) {
    os << "alpha,x,y,reflections\n";
    char line[128];
    for (std::size_t i = 0; i < sample.alphas.size(); ++i) {
        const RayState& s = sample.states[i];
        std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%ld\n", sample.alphas[i],
                      s.position.x, s.position.y, s.reflections);
        os << line;
    }
}

}  // namespace diskfront
