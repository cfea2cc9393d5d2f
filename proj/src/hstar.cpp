#include "snnroots/hstar.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <nlohmann/json.hpp>

namespace snn {

using boost::multiprecision::cpp_int;
using BigFloat = boost::multiprecision::cpp_bin_float_100;

namespace {

void require_finite(const std::vector<double>& v, const char* what) {
    for (double x : v) {
        if (!std::isfinite(x)) {
            throw std::invalid_argument(std::string(what) + ": non-finite coefficient");
        }
    }
}

// value = m * 2^e with m a 53-bit integer; exact for any finite double.
struct Dyadic {
    long long m = 0;
    int e = 0;
};

Dyadic decompose(double x) {
    if (x == 0.0) return {0, 0};
    int ex = 0;
    double mant = std::frexp(x, &ex);              // x = mant * 2^ex, |mant| in [0.5, 1)
    return {static_cast<long long>(std::ldexp(mant, 53)), ex - 53};
}

double round_dyadic(const cpp_int& num, long e) {
    if (num == 0) return 0.0;
    BigFloat v(num);
    v = ldexp(v, e);
    return v.convert_to<double>();
}

// Integer coefficients (constant first) of prod_{i=0}^{d-1} (t + d - j - i).
std::vector<cpp_int> basis_numerator_coeffs(int j, int d) {
    std::vector<cpp_int> c{1};
    c.reserve(static_cast<size_t>(d) + 1);
    for (int i = 0; i < d; ++i) {
        long long root = d - j - i;
        c.push_back(0);
        for (size_t k = c.size() - 1; k > 0; --k) {
            c[k] = c[k - 1] + c[k] * root;
        }
        c[0] *= root;
    }
    return c;
}

cpp_int factorial(int d) {
    cpp_int f = 1;
    for (int i = 2; i <= d; ++i) f *= i;
    return f;
}

} // namespace

HStarVector::HStarVector(int d, std::vector<double> h) : degree(d), coeffs(std::move(h)) {
    if (degree < 0) throw std::invalid_argument("HStarVector: negative degree");
    if (coeffs.size() != static_cast<size_t>(degree) + 1) {
        throw std::invalid_argument("HStarVector: need exactly degree+1 coefficients");
    }
    require_finite(coeffs, "HStarVector");
}

MonomialPolynomial::MonomialPolynomial(std::vector<double> c) : coeffs(std::move(c)) {
    if (coeffs.empty()) coeffs.push_back(0.0);
    require_finite(coeffs, "MonomialPolynomial");
}

int MonomialPolynomial::degree() const {
    for (size_t k = coeffs.size(); k-- > 0;) {
        if (coeffs[k] != 0.0) return static_cast<int>(k);
    }
    return 0;
}

bool MonomialPolynomial::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](double c) { return c == 0.0; });
}

MonomialPolynomial MonomialPolynomial::normalized() const {
    std::vector<double> c(coeffs.begin(), coeffs.begin() + degree() + 1);
    return MonomialPolynomial(std::move(c));
}

Complex MonomialPolynomial::eval(Complex z) const {
    Complex acc = 0.0;
    for (size_t k = coeffs.size(); k-- > 0;) acc = acc * z + coeffs[k];
    return acc;
}

Complex binom_eval(Complex z, int j, int d) {
    if (j < 0 || j > d) throw std::invalid_argument("binom_eval: need 0 <= j <= d");
    Complex acc = 1.0;
    for (int i = 0; i < d; ++i) {
        acc *= z + static_cast<double>(d - j - i);
        acc /= static_cast<double>(i + 1);
    }
    return acc;
}

DDComplex binom_eval_dd(DDComplex z, int j, int d) {
    if (j < 0 || j > d) throw std::invalid_argument("binom_eval_dd: need 0 <= j <= d");
    DDComplex acc(DDouble(1.0), DDouble(0.0));
    for (int i = 0; i < d; ++i) {
        acc = acc * (z + static_cast<double>(d - j - i));
        acc = acc / static_cast<double>(i + 1);
    }
    return acc;
}

Complex hstar_eval(const HStarVector& h, Complex z) {
    Complex acc = 0.0;
    for (int j = 0; j <= h.degree; ++j) {
        if (h[j] != 0.0) acc += h[j] * binom_eval(z, j, h.degree);
    }
    return acc;
}

DDComplex hstar_eval_dd(const HStarVector& h, DDComplex z) {
    DDComplex acc;
    for (int j = 0; j <= h.degree; ++j) {
        if (h[j] != 0.0) acc = acc + binom_eval_dd(z, j, h.degree) * h[j];
    }
    return acc;
}

double hstar_eval_scale(const HStarVector& h, Complex z) {
    double acc = 0.0;
    for (int j = 0; j <= h.degree; ++j) {
        acc += std::abs(h[j]) * std::abs(binom_eval(z, j, h.degree));
    }
    return acc;
}

MonomialPolynomial hstar_to_monomial(const HStarVector& h) {
    const int d = h.degree;
    // Scale the h_j to a common power of two, accumulate integer basis
    // coefficients exactly, divide by d! and round once per coefficient.
    std::vector<Dyadic> hd(static_cast<size_t>(d) + 1);
    int emin = 0;
    bool any = false;
    for (int j = 0; j <= d; ++j) {
        hd[j] = decompose(h[j]);
        if (hd[j].m != 0) {
            emin = any ? std::min(emin, hd[j].e) : hd[j].e;
            any = true;
        }
    }
    if (!any) return MonomialPolynomial(std::vector<double>(static_cast<size_t>(d) + 1, 0.0));

    std::vector<cpp_int> acc(static_cast<size_t>(d) + 1, 0);
    for (int j = 0; j <= d; ++j) {
        if (hd[j].m == 0) continue;
        cpp_int w = cpp_int(hd[j].m) << static_cast<unsigned>(hd[j].e - emin);
        std::vector<cpp_int> basis = basis_numerator_coeffs(j, d);
        for (int k = 0; k <= d; ++k) acc[k] += w * basis[k];
    }

    const BigFloat fact(factorial(d));
    std::vector<double> out(static_cast<size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) {
        if (acc[k] == 0) {
            out[k] = 0.0;
        } else {
            BigFloat v(acc[k]);
            v = ldexp(v, emin) / fact;
            out[k] = v.convert_to<double>();
        }
    }
    return MonomialPolynomial(std::move(out));
}

HStarVector monomial_to_hstar(const MonomialPolynomial& f, int d) {
    if (d < 0) throw std::invalid_argument("monomial_to_hstar: negative degree");
    if (d < f.degree()) {
        throw std::invalid_argument("monomial_to_hstar: basis length d is below the degree of f");
    }

    // h_j = sum_{i=0}^{j} (-1)^i C(d+1,i) f(j-i), with f evaluated at the
    // integers 0..d.  All of it in exact integer arithmetic over a common
    // power-of-two denominator.
    std::vector<Dyadic> cd(f.coeffs.size());
    int emin = 0;
    bool any = false;
    for (size_t k = 0; k < f.coeffs.size(); ++k) {
        cd[k] = decompose(f.coeffs[k]);
        if (cd[k].m != 0) {
            emin = any ? std::min(emin, cd[k].e) : cd[k].e;
            any = true;
        }
    }

    std::vector<double> out(static_cast<size_t>(d) + 1, 0.0);
    if (!any) return HStarVector(d, std::move(out));

    std::vector<cpp_int> c(f.coeffs.size());
    for (size_t k = 0; k < cd.size(); ++k) {
        if (cd[k].m != 0) c[k] = cpp_int(cd[k].m) << static_cast<unsigned>(cd[k].e - emin);
    }

    std::vector<cpp_int> fval(static_cast<size_t>(d) + 1);
    for (int t = 0; t <= d; ++t) {
        cpp_int acc = 0;
        for (size_t k = c.size(); k-- > 0;) acc = acc * t + c[k];
        fval[t] = acc;
    }

    std::vector<cpp_int> binom(static_cast<size_t>(d) + 2);
    binom[0] = 1;
    for (int i = 1; i <= d + 1; ++i) binom[i] = binom[i - 1] * (d + 2 - i) / i;

    for (int j = 0; j <= d; ++j) {
        cpp_int s = 0;
        for (int i = 0; i <= j; ++i) {
            cpp_int term = binom[i] * fval[j - i];
            if (i % 2 == 0) s += term; else s -= term;
        }
        out[j] = round_dyadic(s, emin);
    }
    return HStarVector(d, std::move(out));
}

bool is_snn(const HStarVector& h, double tol) {
    double mx = -std::numeric_limits<double>::infinity();
    for (double c : h.coeffs) {
        if (c < -tol) return false;
        mx = std::max(mx, c);
    }
    return mx > tol;
}

std::string to_json(const HStarVector& h) {
    nlohmann::json j;
    j["d"] = h.degree;
    j["h"] = h.coeffs;
    return j.dump();
}

std::string to_json(const MonomialPolynomial& f) {
    nlohmann::json j;
    j["c"] = f.coeffs;
    return j.dump();
}

HStarVector hstar_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.contains("d") || !j.contains("h")) {
        throw std::invalid_argument("h-vector JSON needs fields \"d\" and \"h\"");
    }
    return HStarVector(j.at("d").get<int>(), j.at("h").get<std::vector<double>>());
}

} // namespace snn
