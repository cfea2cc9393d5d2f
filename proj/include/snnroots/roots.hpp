#pragma once

// Simultaneous (Aberth-Ehrlich) root finding with residual certification.
// Roots of binomial-basis inputs get a Newton polish evaluated in that
// basis, escalating to double-double arithmetic when plain doubles stall.

#include <stdexcept>
#include <string>
#include <vector>

#include "snnroots/hstar.hpp"

namespace snn {

struct RootSet {
    std::vector<Complex> roots;
    std::vector<double> residuals;   // |f(z)| / (sum_k |c_k| max(1,|z|)^k)
    double tolerance = 0.0;
    bool converged = false;
};

class PolishError : public std::runtime_error {
public:
    enum class Kind { DerivativeBreakdown, Divergence };

    PolishError(Kind k, const std::string& msg) : std::runtime_error(msg), kind_(k) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

// All complex roots (with multiplicity) of a non-zero polynomial of
// monomial degree >= 1.  Deterministic: fixed golden-angle starting
// points on a circle sized by the coefficient root bound, a fixed sweep
// budget, and result ordering by (Re, Im).  Non-convergence is reported
// through converged=false, never by silently wrong roots.
RootSet find_roots(const MonomialPolynomial& f, double tol = 1e-10);
RootSet find_roots(const HStarVector& h, double tol = 1e-10);

// Newton-polish a single root of the binomial-basis polynomial h from the
// seed z0.  The seed must lie within twice the degree-d root disc
// |z+1/2| <= d(d-1/2).  Throws PolishError on divergence or derivative
// breakdown.
Complex polish_root(const HStarVector& h, Complex z0, double tol = 1e-12);

std::string to_json(const RootSet& rs);

} // namespace snn
