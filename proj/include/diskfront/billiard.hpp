#pragma once

// Event-driven billiard flow in the unit disk.
//
// A ray launched from the source travels in straight chords between specular
// reflections at the circle. In the circular billiard the half-angle xi
// subtended by each chord is conserved, so after the first boundary hit the
// whole trajectory is a closed-form rotation recurrence: boundary hits advance
// by 2*xi in polar angle and every chord has length 2*sin(xi). propagate_exact
// exploits this and is free of time-discretization error; propagate_stepped is
// the fixed-step reference scheme kept as an independent oracle.

#include <stdexcept>
#include <vector>

#include "diskfront/geometry.hpp"

namespace diskfront {

/// Point source inside the unit disk, fixed at (a, 0) by rotation invariance.
struct Source {
    double a;

    explicit Source(double a_) : a(a_) {
        if (!(a >= 0.0 && a < 1.0))
            throw std::invalid_argument("Source: a must be in [0,1)");
    }
};

/// One point of the moving front: position, unit direction, bookkeeping.
struct RayState {
    Vec2 position;
    Vec2 direction;
    long reflections{0};
    double time{0.0};
};

/// Chord data for the ray launched at angle alpha: half-angle xi in (0, pi)
/// with cos(xi) = a*sin(alpha), chord length 2*sin(xi). xi and pi - xi
/// describe the same chord with opposite travel orientation; successive
/// boundary hits advance by +2*xi (mod 2*pi) in the convention used here.
struct ChordGeometry {
    double xi;
    double chord_length;
    double alpha;
};

/// Signalled when a derivative is requested at (or within tolerance of) a
/// reflection-count discontinuity of the front map.
class BreakpointError : public std::runtime_error {
public:
    explicit BreakpointError(double alpha)
        : std::runtime_error("front map not differentiable near alpha = " +
                             std::to_string(alpha)),
          alpha_(alpha) {}
    double alpha() const { return alpha_; }

private:
    double alpha_;
};

ChordGeometry chord_geometry(const Source& src, double alpha);

/// Specular reflection at a boundary point of the unit circle.
/// position must lie on the circle within 1e-9; direction must not point
/// strictly inward (dot(direction, position) >= 0).
Vec2 reflect(const Vec2& position, const Vec2& direction);

/// Exact event-driven propagation from an arbitrary interior start point.
RayState propagate_from(const Vec2& position, const Vec2& direction, double t);

/// Exact propagation of the ray launched from the source at angle alpha.
RayState propagate_exact(const Source& src, double alpha, double t);

/// Fixed-step scheme: tentative move, boundary back-off, reflect, finish the
/// step. Requires 0 < dt < 2*sqrt(1-a^2) so a step crosses the boundary at
/// most once. A step ending exactly on the circle counts as inside.
/// If boundary_angles is non-null, the polar angle of every reflection point
/// is appended to it.
RayState propagate_stepped(const Source& src, double alpha, double t, double dt,
                           std::vector<double>* boundary_angles = nullptr);

/// Number of reflections suffered by time t (0 before the first hit; a ray
/// landing exactly on the circle counts as reflected).
long reflection_count(const Source& src, double alpha, double t);

/// d(position)/d(alpha) at fixed t, by analytic differentiation of the
/// rotation recurrence. Throws BreakpointError if the reflection count is not
/// locally constant within guard_width of alpha.
Vec2 front_derivative(const Source& src, double alpha, double t,
                      double guard_width = 1e-9);

/// Same derivative evaluated on the smooth branch with the given reflection
/// count, without the breakpoint guard. Extends one-sidedly past breakpoints;
/// used by integrators that already know the piece decomposition.
Vec2 front_derivative_on_branch(const Source& src, double alpha, double t,
                                long reflections);

/// Position on the smooth branch with the given reflection count.
Vec2 position_on_branch(const Source& src, double alpha, double t, long reflections);

}  // namespace diskfront
