#pragma once

// Globally adaptive Gauss-Kronrod (G7,K15) quadrature.
//
// The worst panel (largest |K15-G7| gap) is split first, so integrable kinks
// and cusps concentrate work where it is needed instead of forcing a uniform
// depth limit. Integrands that are only piecewise smooth should be seeded
// with one segment per smooth piece; panels never straddle a seed boundary.
// Error control is absolute.

#include <complex>
#include <cstddef>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace diskfront {

struct QuadSegment {
    double lo;
    double hi;
    std::size_t tag{0};  // forwarded to the integrand, e.g. a piece index
};

struct QuadOptions {
    double abs_tol = 1e-8;
    std::size_t max_evaluations = 2'000'000;
};

template <class Value>
struct QuadOutcome {
    Value value{};
    double error{0.0};        // estimated absolute error
    bool converged{false};
    std::size_t evaluations{0};
};

/// Thrown by callers that promise a tolerance and cannot reach it.
/// Carries the partial value and the error actually achieved.
class QuadratureFailure : public std::runtime_error {
public:
    QuadratureFailure(double partial, double achieved, const std::string& context)
        : std::runtime_error(context + ": quadrature did not converge (achieved " +
                             std::to_string(achieved) + ")"),
          partial_(partial),
          achieved_(achieved) {}

    double partial_value() const { return partial_; }
    double achieved_tolerance() const { return achieved_; }

private:
    double partial_;
    double achieved_;
};

namespace detail {

inline double abs_value(double v) { return v < 0 ? -v : v; }
inline double abs_value(const std::complex<double>& v) { return std::abs(v); }

// Kronrod-15 abscissae on [0,1] by symmetry, with K15 weights and the
// embedded G7 weights (zero on Kronrod-only nodes).
inline constexpr int kGK15Nodes = 8;
inline constexpr double kGKx[kGK15Nodes] = {
    0.000000000000000, 0.207784955007898, 0.405845151377397, 0.586087235467691,
    0.741531185599394, 0.864864423359769, 0.949107912342759, 0.991455371120813};
inline constexpr double kGKwK[kGK15Nodes] = {
    0.209482141084728, 0.204432940075298, 0.190350578064785, 0.169004726639267,
    0.140653259715525, 0.104790010322250, 0.063092092629979, 0.022935322010529};
inline constexpr double kGKwG[kGK15Nodes] = {
    0.417959183673469, 0.0, 0.381830050505119, 0.0,
    0.279705391489277, 0.0, 0.129484966168870, 0.0};

template <class Value, class F>
void gk15_panel(F& f, double lo, double hi, std::size_t tag, Value& k15, double& err) {
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    Value g7{};
    k15 = Value{};
    {
        const Value y0 = f(mid, tag);
        k15 += kGKwK[0] * y0;
        g7 += kGKwG[0] * y0;
    }
    for (int i = 1; i < kGK15Nodes; ++i) {
        const double dx = half * kGKx[i];
        const Value yi = f(mid + dx, tag) + f(mid - dx, tag);
        k15 += kGKwK[i] * yi;
        g7 += kGKwG[i] * yi;
    }
    k15 = half * k15;
    g7 = half * g7;
    err = abs_value(k15 - g7);
}

template <class Value>
struct Panel {
    double lo, hi;
    std::size_t tag;
    Value value;
    double error;
};

template <class Value>
struct PanelWorse {
    bool operator()(const Panel<Value>& a, const Panel<Value>& b) const {
        if (a.error != b.error) return a.error < b.error;
        return a.lo < b.lo;  // deterministic tie-break
    }
};

template <class Value, class F>
QuadOutcome<Value> integrate_core(F&& f, std::span<const QuadSegment> segments,
                                  const QuadOptions& opt) {
    QuadOutcome<Value> out;
    std::priority_queue<Panel<Value>, std::vector<Panel<Value>>, PanelWorse<Value>> queue;
    std::vector<Panel<Value>> done;  // panels too narrow to split further

    double total_err = 0.0;
    for (const QuadSegment& seg : segments) {
        if (!(seg.hi > seg.lo)) continue;
        Panel<Value> p{seg.lo, seg.hi, seg.tag, Value{}, 0.0};
        gk15_panel<Value>(f, p.lo, p.hi, p.tag, p.value, p.error);
        out.evaluations += 15;
        total_err += p.error;
        queue.push(p);
    }

    while (total_err > opt.abs_tol && !queue.empty() &&
           out.evaluations + 30 <= opt.max_evaluations) {
        Panel<Value> worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (!(mid > worst.lo && mid < worst.hi)) {  // at floating-point resolution
            done.push_back(worst);
            continue;
        }
        Panel<Value> left{worst.lo, mid, worst.tag, Value{}, 0.0};
        Panel<Value> right{mid, worst.hi, worst.tag, Value{}, 0.0};
        gk15_panel<Value>(f, left.lo, left.hi, left.tag, left.value, left.error);
        gk15_panel<Value>(f, right.lo, right.hi, right.tag, right.value, right.error);
        out.evaluations += 30;
        total_err += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
    }

    // Drain in deterministic (queue) order and re-sum for a stable total.
    Value total{};
    while (!queue.empty()) {
        total += queue.top().value;
        queue.pop();
    }
    for (const Panel<Value>& p : done) total += p.value;

    out.value = total;
    out.error = total_err;
    out.converged = total_err <= opt.abs_tol;
    return out;
}

}  // namespace detail

/// Integrate f(x, tag) over a union of segments to a global absolute tolerance.
template <class F>
QuadOutcome<double> integrate_segments(F&& f, std::span<const QuadSegment> segments,
                                       const QuadOptions& opt = {}) {
    return detail::integrate_core<double>(std::forward<F>(f), segments, opt);
}

template <class F>
QuadOutcome<std::complex<double>> integrate_segments_complex(
    F&& f, std::span<const QuadSegment> segments, const QuadOptions& opt = {}) {
    return detail::integrate_core<std::complex<double>>(std::forward<F>(f), segments, opt);
}

/// Single-interval convenience overloads; the integrand takes x only.
template <class F>
QuadOutcome<double> integrate(F&& f, double lo, double hi, const QuadOptions& opt = {}) {
    const QuadSegment seg{lo, hi, 0};
    auto wrap = [&f](double x, std::size_t) { return f(x); };
    return detail::integrate_core<double>(wrap, std::span<const QuadSegment>(&seg, 1), opt);
}

template <class F>
QuadOutcome<std::complex<double>> integrate_complex(F&& f, double lo, double hi,
                                                    const QuadOptions& opt = {}) {
    const QuadSegment seg{lo, hi, 0};
    auto wrap = [&f](double x, std::size_t) { return f(x); };
    return detail::integrate_core<std::complex<double>>(wrap, std::span<const QuadSegment>(&seg, 1),
                                                        opt);
}

}  // namespace diskfront
