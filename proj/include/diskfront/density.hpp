#pragma once

// Local density of the front: the length of front inside an annulus grows
// linearly in t with a rate set by the radial profile min(r,a)/sqrt(1-min(r,a)^2).
// The profile vanishes at the center and is constant outside radius a -- the
// front is depleted inside its innermost caustic.

#include <iosfwd>
#include <vector>

#include "diskfront/billiard.hpp"

namespace diskfront {

struct RadialRegion {
    double r_lo;
    double r_hi;

    RadialRegion(double lo, double hi) : r_lo(lo), r_hi(hi) {
        if (!(0.0 <= lo && lo < hi && hi <= 1.0))
            throw std::invalid_argument("RadialRegion: need 0 <= r_lo < r_hi <= 1");
    }
};

/// Radial density profile min(r,a)/sqrt(1 - min(r,a)^2).
double density_profile(double r, double a);

/// Model for the front length inside the annulus: 4t * integral of
/// density_profile(r)*r dr, evaluated from the exact antiderivative.
double model_length_in(const RadialRegion& region, double a, double t);

/// Measured front length inside the annulus: per smooth piece, the front
/// speed is integrated over the sub-intervals where the position radius lies
/// in [r_lo, r_hi]; crossing angles are located by bisection.
double simulated_length_in(const RadialRegion& region, const Source& src, double t,
                           double quad_tol = 1e-8);

struct DensityRow {
    double r_lo;
    double r_hi;
    double simulated;
    double model;
    double rel_err;
};

/// Compare simulated against model on annuli of the given width covering [0,1].
std::vector<DensityRow> density_report(const Source& src, double t, double width,
                                       double quad_tol = 1e-8);

/// CSV with header "r_lo,r_hi,simulated,model,rel_err".
void write_density_csv(std::ostream& os, const std::vector<DensityRow>& rows);

}  // namespace diskfront
