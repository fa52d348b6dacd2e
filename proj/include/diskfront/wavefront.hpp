#pragma once

// Front discretization and length measurement.
//
// At fixed t the front alpha -> position(alpha) is piecewise smooth: the
// reflection count is locally constant and jumps at finitely many launch
// angles. decompose() localizes those breakpoints; front_length() integrates
// the front speed per smooth piece with globally adaptive quadrature;
// polyline_length() is the refinement-based fallback used as an oracle.

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "diskfront/billiard.hpp"

namespace diskfront {

struct FrontSample {
    Source source;
    double t;
    std::vector<double> alphas;     // strictly increasing, in [0, 2*pi)
    std::vector<RayState> states;   // states[i] = propagate_exact(source, alphas[i], t)
};

struct Piece {
    double alpha_lo;
    double alpha_hi;          // may exceed 2*pi for the wrap-around piece
    long reflections;
};

struct PieceDecomposition {
    std::vector<double> breakpoints;  // sorted, in [0, 2*pi)
    std::vector<Piece> pieces;        // partition of one full turn
};

/// Localize every reflection-count jump to within tol_alpha by scanning a
/// grid fine enough for the count range at this t, then bisecting.
PieceDecomposition decompose(const Source& src, double t, double tol_alpha = 1e-12);

/// |S_t| as the integral of ||d position/d alpha|| over the parameter circle,
/// one quadrature segment per smooth piece, absolute error <= quad_tol.
/// Throws QuadratureFailure (with partial value) on non-convergence.
double front_length(const Source& src, double t, double quad_tol = 1e-8);

/// Polyline approximation on a uniform n-point grid. With refine set, any
/// interval whose endpoints disagree on reflection count is bisected until
/// the counts match or the interval is below 1e-10.
double polyline_length(const Source& src, double t, std::size_t n, bool refine = false);

/// Uniform front sample of size n (alpha_i = 2*pi*i/n).
FrontSample front_points(const Source& src, double t, std::size_t n);

/// CSV with header "alpha,x,y,reflections".
void write_front_csv(std::ostream& os, const FrontSample& sample);

}  // namespace diskfront
