#pragma once

// Polynomials in the binomial basis B_d = { C(t+d-j, d) : 0 <= j <= d }.
//
// An HStarVector holds the coordinates (h_0, ..., h_d) of a polynomial in
// B_d; a MonomialPolynomial holds ordinary power-basis coefficients,
// constant term first.  The basis length d is meaningful on its own (an
// h-vector may end in zeros), so HStarVector never trims.

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "snnroots/ddouble.hpp"

namespace snn {

using Complex = std::complex<double>;

struct HStarVector {
    int degree = 0;                // basis length parameter d
    std::vector<double> coeffs;    // exactly degree+1 entries

    HStarVector() : coeffs{0.0} {}
    HStarVector(int d, std::vector<double> h);

    double operator[](int j) const { return coeffs[static_cast<size_t>(j)]; }
};

struct MonomialPolynomial {
    std::vector<double> coeffs;    // c_0 + c_1 t + ... , constant first

    MonomialPolynomial() : coeffs{0.0} {}
    explicit MonomialPolynomial(std::vector<double> c);

    // Highest index with a nonzero coefficient (0 for the zero polynomial).
    int degree() const;
    bool is_zero() const;

    // Trailing zeros trimmed; the zero polynomial normalizes to {0}.
    MonomialPolynomial normalized() const;

    Complex eval(Complex z) const;   // Horner
};

// C(z+d-j, d), computed as an interleaved product (multiply one linear
// factor, divide one integer) so intermediates stay near |z|^1 per step.
Complex binom_eval(Complex z, int j, int d);
DDComplex binom_eval_dd(DDComplex z, int j, int d);

// Sum_j h_j * C(z+d-j, d).
Complex hstar_eval(const HStarVector& h, Complex z);
DDComplex hstar_eval_dd(const HStarVector& h, DDComplex z);

// Sum_j |h_j| * |C(z+d-j, d)|: the natural residual scale for evaluation
// in the binomial basis.
double hstar_eval_scale(const HStarVector& h, Complex z);

// Exact basis changes.  Internally these run in arbitrary-precision
// integer arithmetic on the dyadic input values and round once per output
// coefficient; the double in/out interface is the only precision limit.
MonomialPolynomial hstar_to_monomial(const HStarVector& h);
HStarVector monomial_to_hstar(const MonomialPolynomial& f, int d);

// All entries >= -tol and at least one entry > tol.
bool is_snn(const HStarVector& h, double tol = 0.0);

// JSON: {"d": int, "h": [...]} and {"c": [...]}.
std::string to_json(const HStarVector& h);
std::string to_json(const MonomialPolynomial& f);
HStarVector hstar_from_json(const std::string& text);

} // namespace snn
