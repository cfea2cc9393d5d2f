#pragma once

// Compensated double-double arithmetic (~31 significant digits), used to
// polish roots of ill-conditioned high-degree inputs where plain doubles
// stall.  Only the operations the Newton polisher needs are provided.

#include <cmath>
#include <complex>

namespace snn {

struct DDouble {
    double hi = 0.0;
    double lo = 0.0;

    DDouble() = default;
    DDouble(double x) : hi(x), lo(0.0) {}
    DDouble(double h, double l) : hi(h), lo(l) {}

    double value() const { return hi + lo; }
};

namespace dd_detail {

inline DDouble two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline DDouble quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}

inline DDouble two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

} // namespace dd_detail

inline DDouble operator+(DDouble a, DDouble b) {
    using namespace dd_detail;
    DDouble s = two_sum(a.hi, b.hi);
    double lo = s.lo + a.lo + b.lo;
    return quick_two_sum(s.hi, lo);
}

inline DDouble operator+(DDouble a, double b) { return a + DDouble(b); }
inline DDouble operator-(DDouble a) { return {-a.hi, -a.lo}; }
inline DDouble operator-(DDouble a, DDouble b) { return a + (-b); }
inline DDouble operator-(DDouble a, double b) { return a + DDouble(-b); }

inline DDouble operator*(DDouble a, DDouble b) {
    using namespace dd_detail;
    DDouble p = two_prod(a.hi, b.hi);
    double lo = p.lo + a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, lo);
}

inline DDouble operator*(DDouble a, double b) { return a * DDouble(b); }

inline DDouble operator/(DDouble a, double b) {
    using namespace dd_detail;
    double q1 = a.hi / b;
    DDouble p = two_prod(q1, b);
    double r = ((a.hi - p.hi) - p.lo) + a.lo;
    double q2 = r / b;
    return quick_two_sum(q1, q2);
}

inline DDouble operator/(DDouble a, DDouble b) {
    double q1 = a.hi / b.hi;
    DDouble r = a - b * q1;
    double q2 = r.hi / b.hi;
    r = r - b * q2;
    double q3 = r.hi / b.hi;
    return dd_detail::quick_two_sum(q1, q2) + q3;
}

// Complex value with double-double components.
struct DDComplex {
    DDouble re;
    DDouble im;

    DDComplex() = default;
    DDComplex(DDouble r, DDouble i) : re(r), im(i) {}
    DDComplex(std::complex<double> z) : re(z.real()), im(z.imag()) {}

    std::complex<double> value() const { return {re.value(), im.value()}; }
};

inline DDComplex operator+(DDComplex a, DDComplex b) { return {a.re + b.re, a.im + b.im}; }
inline DDComplex operator-(DDComplex a, DDComplex b) { return {a.re - b.re, a.im - b.im}; }
inline DDComplex operator+(DDComplex a, double b) { return {a.re + b, a.im}; }

inline DDComplex operator*(DDComplex a, DDComplex b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

inline DDComplex operator*(DDComplex a, double b) { return {a.re * b, a.im * b}; }
inline DDComplex operator/(DDComplex a, double b) { return {a.re / b, a.im / b}; }

inline double abs_approx(DDComplex a) { return std::abs(a.value()); }

} // namespace snn
