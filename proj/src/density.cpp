#include "diskfront/density.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <vector>

#include "diskfront/quadrature.hpp"
#include "diskfront/wavefront.hpp"

namespace diskfront {

namespace {

// Antiderivative of r^2/sqrt(1-r^2): (asin r - r*sqrt(1-r^2))/2.
double inner_branch_integral(double r) {
    return 0.5 * (std::asin(r) - r * std::sqrt(1.0 - r * r));
}

// Bisection on |position(alpha)| - r within one smooth branch.
double crossing_angle(const Source& src, double t, long k, double lo, double hi, double r,
                      bool below_at_lo) {
    for (int it = 0; it < 80 && hi - lo > 1e-12; ++it) {
        const double mid = 0.5 * (lo + hi);
        const bool below = position_on_branch(src, mid, t, k).norm() < r;
        if (below == below_at_lo)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double density_profile(double r, double a) {
    if (!(r >= 0.0 && r <= 1.0)) throw std::invalid_argument("density_profile: r must be in [0,1]");
    if (!(a >= 0.0 && a < 1.0)) throw std::invalid_argument("density_profile: a must be in [0,1)");
    const double m = std::min(r, a);
    return m / std::sqrt(1.0 - m * m);
}

double model_length_in(const RadialRegion& region, double a, double t) {
    if (!(a >= 0.0 && a < 1.0)) throw std::invalid_argument("model_length_in: a must be in [0,1)");
    const double lo_in = std::min(region.r_lo, a);
    const double hi_in = std::min(region.r_hi, a);
    const double lo_out = std::max(region.r_lo, a);
    const double hi_out = std::max(region.r_hi, a);
    const double constant = (a > 0.0) ? a / std::sqrt(1.0 - a * a) : 0.0;
    const double radial = inner_branch_integral(hi_in) - inner_branch_integral(lo_in) +
                          0.5 * constant * (hi_out * hi_out - lo_out * lo_out);
    return 4.0 * t * radial;
}

double simulated_length_in(const RadialRegion& region, const Source& src, double t,
                           double quad_tol) {
    if (t < 0.0) throw std::invalid_argument("simulated_length_in: t must be >= 0");

    const PieceDecomposition dec = decompose(src, t);
    std::vector<QuadSegment> segments;
    std::vector<long> counts;

    // Cut each piece at every radius crossing of either annulus bound, then
    // keep the sub-intervals whose midpoint radius falls inside.
    constexpr int kSamples = 64;
    for (const Piece& piece : dec.pieces) {
        const long k = piece.reflections;
        std::vector<double> cuts;
        cuts.push_back(piece.alpha_lo);
        const double h = (piece.alpha_hi - piece.alpha_lo) / kSamples;
        for (double r : {region.r_lo, region.r_hi}) {
            if (r <= 0.0) continue;
            bool below_prev = position_on_branch(src, piece.alpha_lo, t, k).norm() < r;
            for (int i = 1; i <= kSamples; ++i) {
                const double alpha = piece.alpha_lo + h * i;
                const bool below = position_on_branch(src, alpha, t, k).norm() < r;
                if (below != below_prev)
                    cuts.push_back(
                        crossing_angle(src, t, k, alpha - h, alpha, r, below_prev));
                below_prev = below;
            }
        }
        cuts.push_back(piece.alpha_hi);
        std::sort(cuts.begin(), cuts.end());
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
            if (cuts[i + 1] - cuts[i] <= 0.0) continue;
            const double mid = 0.5 * (cuts[i] + cuts[i + 1]);
            const double rho = position_on_branch(src, mid, t, k).norm();
            if (rho >= region.r_lo && rho <= region.r_hi) {
                segments.push_back({cuts[i], cuts[i + 1], counts.size()});
                counts.push_back(k);
            }
        }
    }
    if (segments.empty()) return 0.0;

    auto speed = [&](double alpha, std::size_t seg) {
        return front_derivative_on_branch(src, alpha, t, counts[seg]).norm();
    };
    QuadOptions opt;
    opt.abs_tol = quad_tol;
    opt.max_evaluations = std::max<std::size_t>(2'000'000, 2000 * segments.size());
    const auto out = integrate_segments(speed, segments, opt);
    if (!out.converged) throw QuadratureFailure(out.value, out.error, "simulated_length_in");
    return out.value;
}

std::vector<DensityRow> density_report(const Source& src, double t, double width,
                                       double quad_tol) {
    if (!(width > 0.0 && width <= 1.0))
        throw std::invalid_argument("density_report: width must be in (0,1]");
    std::vector<DensityRow> rows;
    for (double lo = 0.0; lo < 1.0 - 1e-12; lo += width) {
        const double hi = std::min(lo + width, 1.0);
        const RadialRegion region{lo, hi};
        DensityRow row;
        row.r_lo = lo;
        row.r_hi = hi;
        row.simulated = simulated_length_in(region, src, t, quad_tol);
        row.model = model_length_in(region, src.a, t);
        row.rel_err = (row.model != 0.0)
                          ? std::abs(row.simulated / row.model - 1.0)
                          : (row.simulated == 0.0
                                 ? 0.0
                                 : std::numeric_limits<double>::infinity());
        rows.push_back(row);
    }
    return rows;
}

void write_density_csv(std::ostream& os, const std::vector<DensityRow>& rows) {
    os << "r_lo,r_hi,simulated,model,rel_err\n";
    char line[160];
    for (const DensityRow& r : rows) {
        std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%.17g,%.17g\n", r.r_lo, r.r_hi,
                      r.simulated, r.model, r.rel_err);
        os << line;
    }
}

}  // namespace diskfront
