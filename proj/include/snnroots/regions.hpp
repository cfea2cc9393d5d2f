#pragma once

// Root-region predicates and the angle machinery behind them.
//
// For a degree-d binomial-basis polynomial evaluated at z, the d+1 points
// C(z+d-j, d) advance by the angle A(j) between z-j and z+d-j.  When the
// A(j) sum to less than pi the points share a half-plane with 0 on the
// boundary, so no nonnegative combination vanishes: the locus
// sum A(j) >= pi (plus a real segment) bounds every SNN root.

#include <optional>
#include <string>
#include <vector>

#include "snnroots/hstar.hpp"

namespace snn {

enum class RegionKind {
    BraunDisc,       // |z + 1/2| <= d(d - 1/2)
    BddpsDisc,       // |z| <= 1 + (d+1)!
    ConeUnion,       // open cones at d-1 and -d, angular width 2*pi/d
    VerticalStrip,   // -d <= Re z <= d-1
    SnnAngleLocus,   // [-d, d-1] on the real axis, else sum A(j) >= pi
    SnnDegree2,      // [-3,2] plus y^2 <= -x^2 - x + 1/2
    EhrhartDegree2,  // {-2,-1,-2/3} plus -1/2 <= x < 0, |y| <= sqrt(15)/6
    EhrhartDegree3,  // [-3,1] plus -1 <= x < 1, x^2 + y^2 <= 3
};

struct RegionId {
    RegionKind kind;
    int degree = 0;   // meaningful for the first five kinds only

    static RegionId braun_disc(int d);
    static RegionId bddps_disc(int d);
    static RegionId cone_union(int d);
    static RegionId vertical_strip(int d);
    static RegionId snn_angle_locus(int d);
    static RegionId snn_degree2();
    static RegionId ehrhart_degree2();
    static RegionId ehrhart_degree3();

    std::string name() const;
};

struct BoundarySample {
    double theta;    // ray angle from the center -1/2
    Complex z;
};

struct BoundaryCurve {
    int degree = 0;
    std::vector<BoundarySample> points;      // ordered by theta
    double solver_tol = 0.0;
    std::vector<double> skipped_rays;        // thetas with no crossing in the disc
};

// Unsigned angle in [0, pi] between z-j and z+d-j.  Degenerate when z is
// exactly j or j-d.
double angle_A(Complex z, int j, int d);

// Law-of-Cosines closed form for cos^2 A(j) at z = (d-1) + ki, with
// r = (d-1)-j and s = (2d-1)-j:
//   cos^2 A(j) = 1 - d^2 k^2 / (k^4 + (r^2+s^2) k^2 + r^2 s^2).
double cos2_A_formula(double k, int j, int d);

// Sum of A(j) for j = 0..d-1; degenerate at the integer points
// {0..d-1} and {-d..-1}.
double angle_sum(Complex z, int d);

// Whether the d+1 points C(z+d-j, d) lie in some closed half-plane with 0
// on its boundary (max circular gap of their arguments >= pi; zero points
// are ignored, an all-zero set counts as true).
bool common_halfplane(Complex z, int d);

// Exact membership for the named region.  `slack` inflates closed regions
// by that distance and shrinks the open cones by it, which absorbs
// floating-point fuzz when testing computed roots that may lie exactly on
// a region boundary.
bool region_contains(const RegionId& id, Complex z, double slack = 0.0);

// Sample the locus sum A(j) = pi along n rays from -1/2 covering (0, pi):
// radial bisection to the outermost crossing inside the Braun disc.
BoundaryCurve trace_boundary(int d, int n, double solver_tol = 1e-10);

// Supremum of A(j) along the line Re z = d-1 over k in k_range (all k > 0
// when absent).  For r > 0 the max is arccos(sqrt(1 - d^2/(r+s)^2)) at
// k^2 = rs; for r = 0 it is the k -> 0+ limit pi/2.
double max_angle(int d, int j, std::optional<std::pair<double, double>> k_range = std::nullopt);

std::string boundary_csv(const BoundaryCurve& curve);

} // namespace snn
