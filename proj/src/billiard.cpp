#include "diskfront/billiard.hpp"

#include <algorithm>
#include <cmath>

namespace diskfront {

namespace {

// Positive root of |p + s*v| = 1 with |v| = 1, i.e. s^2 + 2*b*s + c = 0 with
// b = <p,v>, c = |p|^2 - 1 <= 0. The root is -b + sqrt(b^2 - c); for b > 0
// that subtraction cancels, so use the product form instead.
double time_to_boundary(const Vec2& p, const Vec2& v) {
    const double b = p.dot(v);
    const double c = p.norm2() - 1.0;
    const double disc = std::sqrt(std::max(b * b - c, 0.0));
    if (b > 0.0) return -c / (b + disc);
    return -b + disc;
}

struct ChordFlow {
    double t0;      // time of first boundary hit
    double xi;      // chord half-angle in (0, pi)
    double chord;   // 2*sin(xi)
    double s1;      // polar angle of the first hit
    Vec2 u;         // initial direction
};

ChordFlow chord_flow(const Vec2& p, const Vec2& v) {
    ChordFlow f;
    f.u = v;
    f.t0 = time_to_boundary(p, v);
    // Signed distance of the ray's line from the center selects both the
    // chord and the travel orientation: hits advance by +2*xi, xi = acos(p x v).
    f.xi = std::acos(std::clamp(p.cross(v), -1.0, 1.0));
    f.chord = 2.0 * std::sin(f.xi);
    const Vec2 first = p + f.t0 * v;
    f.s1 = polar_angle(first);
    return f;
}

long count_from_flow(const ChordFlow& f, double t) {
    if (t < f.t0) return 0;
    return 1 + static_cast<long>(std::floor((t - f.t0) / f.chord));
}

RayState state_from_flow(const ChordFlow& f, const Vec2& p, double t, long k) {
    RayState out;
    out.time = t;
    out.reflections = k;
    if (k == 0) {
        out.position = p + t * f.u;
        out.direction = f.u;
        return out;
    }
    const double rho = (t - f.t0) - static_cast<double>(k - 1) * f.chord;
    const double sk = f.s1 + static_cast<double>(k - 1) * 2.0 * f.xi;
    const Vec2 dir{-std::sin(sk + f.xi), std::cos(sk + f.xi)};
    out.position = unit_vector(sk) + rho * dir;
    out.direction = dir;
    return out;
}

}  // namespace

ChordGeometry chord_geometry(const Source& src, double alpha) {
    ChordGeometry g;
    g.alpha = alpha;
    g.xi = std::acos(std::clamp(src.a * std::sin(alpha), -1.0, 1.0));
    g.chord_length = 2.0 * std::sin(g.xi);
    return g;
}

Vec2 reflect(const Vec2& position, const Vec2& direction) {
    if (std::abs(position.norm() - 1.0) > 1e-9)
        throw std::invalid_argument("reflect: position not on the unit circle");
    if (direction.dot(position) < 0.0)
        throw std::invalid_argument("reflect: direction points inward");
    const double k = direction.dot(position);
    return direction - (2.0 * k) * position;
}

RayState propagate_from(const Vec2& position, const Vec2& direction, double t) {
    if (t < 0.0) throw std::invalid_argument("propagate_from: t must be >= 0");
    const ChordFlow f = chord_flow(position, direction);
    return state_from_flow(f, position, t, count_from_flow(f, t));
}

RayState propagate_exact(const Source& src, double alpha, double t) {
    return propagate_from({src.a, 0.0}, unit_vector(alpha), t);
}

long reflection_count(const Source& src, double alpha, double t) {
    const ChordFlow f = chord_flow({src.a, 0.0}, unit_vector(alpha));
    return count_from_flow(f, t);
}

RayState propagate_stepped(const Source& src, double alpha, double t, double dt,
                           std::vector<double>* boundary_angles) {
    const double min_chord = 2.0 * std::sqrt(1.0 - src.a * src.a);
    if (!(dt > 0.0 && dt < min_chord))
        throw std::invalid_argument("propagate_stepped: dt must be in (0, 2*sqrt(1-a^2))");
    if (t < 0.0) throw std::invalid_argument("propagate_stepped: t must be >= 0");

    Vec2 m{src.a, 0.0};
    Vec2 v = unit_vector(alpha);
    long reflections = 0;

    double remaining = t;
    while (remaining > 0.0) {
        const double step = std::min(dt, remaining);
        const Vec2 tentative = m + step * v;
        if (tentative.norm2() <= 1.0) {
            m = tentative;
        } else {
            const double back = time_to_boundary(m, v);
            m += back * v;
            if (boundary_angles) boundary_angles->push_back(polar_angle(m));
            const Vec2 n = m.normalized();
            v -= (2.0 * v.dot(n)) * n;
            m += (step - back) * v;
            ++reflections;
        }
        remaining -= step;
    }

    RayState out;
    out.position = m;
    out.direction = v;
    out.reflections = reflections;
    out.time = t;
    return out;
}

Vec2 position_on_branch(const Source& src, double alpha, double t, long reflections) {
    const Vec2 p{src.a, 0.0};
    const ChordFlow f = chord_flow(p, unit_vector(alpha));
    return state_from_flow(f, p, t, reflections).position;
}

Vec2 front_derivative_on_branch(const Source& src, double alpha, double t,
                                long reflections) {
    const double a = src.a;
    const double ca = std::cos(alpha), sa = std::sin(alpha);
    const Vec2 u{ca, sa};
    const Vec2 du{-sa, ca};

    if (reflections == 0) return t * du;

    const double b = a * ca;       // <q, u>
    const double db = -a * sa;
    const double disc = std::sqrt(std::max(b * b + 1.0 - a * a, 0.0));
    const double t0 = (b > 0.0) ? (1.0 - a * a) / (b + disc) : (-b + disc);
    const double dt0 = db * (b / disc - 1.0);

    const double sinxi = std::sqrt(std::max(1.0 - a * a * sa * sa, 0.0));  // sin(acos(a*sin(alpha)))
    const double xi = std::acos(std::clamp(a * sa, -1.0, 1.0));
    const double dxi = -b / sinxi;
    const double chord = 2.0 * sinxi;
    const double dchord = 2.0 * (a * sa) * dxi;  // 2*cos(xi)*dxi

    const Vec2 q{a, 0.0};
    const Vec2 p1 = q + t0 * u;
    const double s1 = polar_angle(p1);
    const Vec2 tangent{-std::sin(s1), std::cos(s1)};
    const Vec2 dp1 = dt0 * u + t0 * du;
    const double ds1 = dp1.dot(tangent);  // dp1 is tangential: p1 stays on the circle

    const double km1 = static_cast<double>(reflections - 1);
    const double sk = s1 + km1 * 2.0 * xi;
    const double dsk = ds1 + km1 * 2.0 * dxi;
    const double rho = (t - t0) - km1 * chord;
    const double drho = -dt0 - km1 * dchord;

    const double cs = std::cos(sk + xi), sn = std::sin(sk + xi);
    const Vec2 dir{-sn, cs};
    const Vec2 ddir = (dsk + dxi) * Vec2{-cs, -sn};

    return dsk * Vec2{-std::sin(sk), std::cos(sk)} + drho * dir + rho * ddir;
}

Vec2 front_derivative(const Source& src, double alpha, double t, double guard_width) {
    const long k = reflection_count(src, alpha, t);
    if (reflection_count(src, alpha - guard_width, t) != k ||
        reflection_count(src, alpha + guard_width, t) != k)
        throw BreakpointError(alpha);
    return front_derivative_on_branch(src, alpha, t, k);
}

}  // namespace diskfront
