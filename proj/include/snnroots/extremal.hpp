#pragma once

// Extremal SNN polynomials S_d and M_d, the cotangent growth-rate solver,
// prescribed-root SNN construction, and the necessary-condition screen for
// Ehrhart candidates.

#include <string>
#include <vector>

#include "snnroots/hstar.hpp"
#include "snnroots/roots.hpp"

namespace snn {

struct GrowthRow {
    int d = 0;
    double b_d = 0.0;           // solution of p_d(b) = pi/2
    double md_max_imag = 0.0;   // max Im over computed roots of M_d
    double sd_max_norm = 0.0;   // max |z + 1/2| over computed roots of S_d
    double asym_md = 0.0;       // d^2 / pi
    double asym_sd = 0.0;       // d(d+2) / (2 pi)
};

struct ScreenCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct ScreenReport {
    std::vector<ScreenCheck> checks;

    bool all_passed() const;
    const ScreenCheck* find(const std::string& name) const;
};

// S_d: all-ones h-vector, sum of the full binomial basis.
HStarVector make_Sd(int d);

// M_d: h = (1, 0, ..., 0, 1), i.e. C(t+d, d) + C(t, d).
HStarVector make_Md(int d);

// p_d(b) = sum_{j=0}^{d-1} arccot(b / (j + 1/2)), strictly decreasing in b.
double p_d(double b, int d);

// The b > 0 with p_d(b) = pi/2, by bisection on (0, d^2]; equals the
// largest imaginary part among roots of M_d.  Degenerate d=1 case: the
// root of M_1 is real, the equation has no positive solution, and the
// limit solution b=0 is returned.
double solve_bd(int d, double tol = 1e-12);

// Rows d_min..d_max (2 <= d_min <= d_max <= 30); root columns are
// computed with find_roots and throw on non-convergence.
std::vector<GrowthRow> growth_table(int d_min, int d_max);

// A nonnegative, non-zero h-vector whose polynomial vanishes at z.
// Requires the half-plane test to fail at z; picks the zero-enclosing
// triple of points C(z+d-j, d) with the best angular conditioning and
// solves the 2x2 dependence, normalized to max coefficient 1.
HStarVector construct_snn_with_root(Complex z, int d);

// Scale h to integers (max entry max_denom), round, and polish the root
// nearest z_target.  An already-integer h is returned unchanged.
std::pair<HStarVector, Complex> round_to_integer_hstar(const HStarVector& h, Complex z_target,
                                                       int max_denom);

// Necessary conditions for an Ehrhart h-vector; passing does not certify
// Ehrhart-ness.  Checks: (a) nonnegative integers, (b) h_0 = 1,
// (c) h_d != 0 implies h_1 != 0, (d) h_d <= h_0 + h_1.
ScreenReport ehrhart_screen(const HStarVector& h);

std::string to_json(const ScreenReport& report);

// Conjecture probes: these report findings, they are not assertions.
struct ConjectureFinding {
    std::string conjecture;
    bool counterexample_found = false;
    std::string detail;
};

// Largest-imaginary-part maximality of M_d roots over a sampled root set.
ConjectureFinding probe_conjecture_max_imag(int d, const std::vector<Complex>& sampled_roots,
                                            double b_d);

// Vertical strip containment over a set of Ehrhart-polynomial roots.
ConjectureFinding probe_conjecture_vertical_strip(int d, const std::vector<Complex>& ehrhart_roots);

std::string growth_csv(const std::vector<GrowthRow>& rows);

} // namespace snn
