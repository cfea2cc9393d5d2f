#include "snnroots/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <nlohmann/json.hpp>

namespace snn {

namespace {

constexpr int kAberthSweeps = 200;
constexpr int kNewtonSteps = 50;
// 2*pi*(1 - 1/phi): successive starting angles land maximally spread.
constexpr double kGoldenAngle = 2.3999632297286533;
constexpr double kStartPhase = 0.53;

double residual_scale(const std::vector<double>& c, Complex z) {
    double b = std::max(1.0, std::abs(z));
    double acc = 0.0;
    double p = 1.0;
    for (double ck : c) {
        acc += std::abs(ck) * p;
        p *= b;
    }
    return acc;
}

double scaled_residual(const std::vector<double>& c, Complex z) {
    Complex acc = 0.0;
    for (size_t k = c.size(); k-- > 0;) acc = acc * z + c[k];
    double scale = residual_scale(c, z);
    return scale > 0.0 ? std::abs(acc) / scale : std::abs(acc);
}

// Upper bounds on root magnitude for a monic polynomial; the start circle
// uses the smaller of the two (the Cauchy bound alone can be astronomically
// loose when the constant term dominates, e.g. binomial-basis inputs whose
// leading monomial coefficient carries a 1/d! factor).
double cauchy_bound(const std::vector<double>& monic) {
    double m = 0.0;
    for (size_t k = 0; k + 1 < monic.size(); ++k) m = std::max(m, std::abs(monic[k]));
    return 1.0 + m;
}

double fujiwara_bound(const std::vector<double>& monic) {
    const size_t n = monic.size() - 1;
    double m = 0.0;
    for (size_t k = 0; k < n; ++k) {
        double a = std::abs(monic[k]);
        if (k == 0) a *= 0.5;
        if (a > 0.0) m = std::max(m, std::pow(a, 1.0 / static_cast<double>(n - k)));
    }
    return 2.0 * m;
}

struct EvalPair {
    Complex p;
    Complex dp;
};

EvalPair horner2(const std::vector<double>& c, Complex z) {
    Complex p = 0.0, dp = 0.0;
    for (size_t k = c.size(); k-- > 0;) {
        dp = dp * z + p;
        p = p * z + c[k];
    }
    return {p, dp};
}

std::vector<Complex> aberth(const std::vector<double>& monic, double tol) {
    const int n = static_cast<int>(monic.size()) - 1;
    const double radius = std::max(1e-12, std::min(cauchy_bound(monic), fujiwara_bound(monic)));

    std::vector<Complex> z(static_cast<size_t>(n));
    for (int m = 0; m < n; ++m) {
        double th = kGoldenAngle * m + kStartPhase;
        z[m] = radius * Complex(std::cos(th), std::sin(th));
    }

    std::vector<bool> settled(static_cast<size_t>(n), false);
    for (int sweep = 0; sweep < kAberthSweeps; ++sweep) {
        double max_step = 0.0;
        for (int i = 0; i < n; ++i) {
            if (settled[i]) continue;
            auto [p, dp] = horner2(monic, z[i]);
            if (scaled_residual(monic, z[i]) <= 0.05 * tol) {
                settled[i] = true;
                continue;
            }
            Complex newton;
            if (dp == Complex(0.0)) {
                newton = (1.0 + std::abs(z[i])) * Complex(1e-8, 1e-8);
            } else {
                newton = p / dp;
            }
            Complex sum = 0.0;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                Complex diff = z[i] - z[j];
                if (diff == Complex(0.0)) diff = Complex(1e-14 * (1.0 + std::abs(z[i])), 0.0);
                sum += 1.0 / diff;
            }
            Complex denom = 1.0 - newton * sum;
            Complex step = (denom == Complex(0.0)) ? newton : newton / denom;
            if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) {
                step = (1.0 + std::abs(z[i])) * Complex(1e-8, -1e-8);
            }
            z[i] -= step;
            max_step = std::max(max_step, std::abs(step) / (1.0 + std::abs(z[i])));
        }
        bool all_settled = std::all_of(settled.begin(), settled.end(), [](bool b) { return b; });
        if (all_settled || (max_step > 0.0 && max_step < 1e-16)) break;
        if (max_step == 0.0 && !all_settled) break;
    }
    return z;
}

// One Newton step's worth of machinery for binomial-basis polishing.  The
// analytic derivative of C(z+d-j,d) is the value times sum_i 1/(z+d-j-i);
// near a grid zero of any factor that form degenerates and we fall back to
// a centered finite difference of the full evaluation.
Complex hstar_derivative(const HStarVector& h, Complex z, bool* degenerate) {
    const int d = h.degree;
    const double eps = 1e-9 * (1.0 + std::abs(z));
    Complex acc = 0.0;
    *degenerate = false;
    for (int j = 0; j <= d; ++j) {
        if (h[j] == 0.0) continue;
        Complex logsum = 0.0;
        for (int i = 0; i < d; ++i) {
            Complex factor = z + static_cast<double>(d - j - i);
            if (std::abs(factor) < eps) {
                *degenerate = true;
                return 0.0;
            }
            logsum += 1.0 / factor;
        }
        acc += h[j] * binom_eval(z, j, d) * logsum;
    }
    return acc;
}

Complex polish_core(const HStarVector& h, Complex z0, double tol) {
    const int d = h.degree;
    const double escape = 4.0 * d * (d - 0.5) + 16.0;

    Complex z = z0;
    Complex best = z0;
    double best_res = std::numeric_limits<double>::infinity();

    auto record = [&](Complex w) {
        double scale = hstar_eval_scale(h, w);
        double res = scale > 0.0 ? std::abs(hstar_eval(h, w)) / scale : std::abs(hstar_eval(h, w));
        if (res < best_res) {
            best_res = res;
            best = w;
        }
        return res;
    };

    for (int it = 0; it < kNewtonSteps; ++it) {
        if (record(z) <= tol) return z;
        Complex f = hstar_eval(h, z);
        bool degenerate = false;
        Complex df = hstar_derivative(h, z, &degenerate);
        if (degenerate || df == Complex(0.0)) {
            double delta = std::sqrt(std::numeric_limits<double>::epsilon()) * (1.0 + std::abs(z));
            df = (hstar_eval(h, z + Complex(delta, 0.0)) - hstar_eval(h, z - Complex(delta, 0.0))) /
                 (2.0 * delta);
            if (df == Complex(0.0)) {
                throw PolishError(PolishError::Kind::DerivativeBreakdown,
                                  "polish_root: vanishing derivative at the iterate");
            }
        }
        z -= f / df;
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) ||
            std::abs(z + 0.5) > escape) {
            throw PolishError(PolishError::Kind::Divergence,
                              "polish_root: iterate left the search region");
        }
    }

    if (best_res <= tol) return best;

    if (d > 15) {
        // Double-double pass: the plain-double evaluation stalled above
        // tol, which happens for ill-conditioned high-degree inputs.
        DDComplex zdd(best);
        for (int it = 0; it < kNewtonSteps; ++it) {
            Complex zd = zdd.value();
            double res = record(zd);
            DDComplex fdd = hstar_eval_dd(h, zdd);
            double scale = hstar_eval_scale(h, zd);
            double res_dd = scale > 0.0 ? abs_approx(fdd) / scale : abs_approx(fdd);
            if (res <= tol || res_dd <= 1e-28) return zd;
            bool degenerate = false;
            Complex df = hstar_derivative(h, zd, &degenerate);
            if (degenerate || df == Complex(0.0)) {
                double delta = std::sqrt(std::numeric_limits<double>::epsilon()) * (1.0 + std::abs(zd));
                df = (hstar_eval(h, zd + Complex(delta, 0.0)) -
                      hstar_eval(h, zd - Complex(delta, 0.0))) / (2.0 * delta);
                if (df == Complex(0.0)) {
                    throw PolishError(PolishError::Kind::DerivativeBreakdown,
                                      "polish_root: vanishing derivative in extended precision");
                }
            }
            Complex step = fdd.value() / df;
            zdd = zdd - DDComplex(step);
            Complex znow = zdd.value();
            if (!std::isfinite(znow.real()) || !std::isfinite(znow.imag()) ||
                std::abs(znow + 0.5) > escape) {
                throw PolishError(PolishError::Kind::Divergence,
                                  "polish_root: extended-precision iterate diverged");
            }
        }
        if (record(zdd.value()) <= tol) return zdd.value();
    }

    throw PolishError(PolishError::Kind::Divergence,
                      "polish_root: residual stalled above tolerance");
}

RootSet finish(const std::vector<double>& input_coeffs, std::vector<Complex> roots, double tol) {
    RootSet rs;
    rs.tolerance = tol;
    std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    rs.roots = std::move(roots);
    rs.residuals.reserve(rs.roots.size());
    rs.converged = true;
    for (Complex z : rs.roots) {
        double r = scaled_residual(input_coeffs, z);
        rs.residuals.push_back(r);
        if (!(r <= tol)) rs.converged = false;
    }
    return rs;
}

void check_input(const MonomialPolynomial& f, double tol) {
    if (tol <= 0.0) throw std::invalid_argument("find_roots: tolerance must be positive");
    if (f.is_zero()) throw std::invalid_argument("find_roots: zero polynomial");
    if (f.degree() < 1) throw std::invalid_argument("find_roots: constant polynomial has no roots");
}

} // namespace

RootSet find_roots(const MonomialPolynomial& f, double tol) {
    check_input(f, tol);
    std::vector<double> c(f.coeffs.begin(), f.coeffs.begin() + f.degree() + 1);
    std::vector<double> monic(c);
    double lead = monic.back();
    for (double& a : monic) a /= lead;
    return finish(c, aberth(monic, tol), tol);
}

RootSet find_roots(const HStarVector& h, double tol) {
    MonomialPolynomial f = hstar_to_monomial(h);
    check_input(f, tol);
    std::vector<double> c(f.coeffs.begin(), f.coeffs.begin() + f.degree() + 1);
    std::vector<double> monic(c);
    double lead = monic.back();
    for (double& a : monic) a /= lead;

    std::vector<Complex> roots = aberth(monic, tol);
    for (Complex& z : roots) {
        try {
            z = polish_core(h, z, std::min(tol, 1e-13));
        } catch (const PolishError&) {
            // Keep the unpolished iterate; the residual check below decides
            // whether the set still counts as converged.
        }
    }
    return finish(c, std::move(roots), tol);
}

Complex polish_root(const HStarVector& h, Complex z0, double tol) {
    if (tol <= 0.0) throw std::invalid_argument("polish_root: tolerance must be positive");
    const double d = h.degree;
    if (std::abs(z0 + 0.5) > 2.0 * d * (d - 0.5) + 1e-9) {
        throw std::invalid_argument("polish_root: seed outside twice the degree-d root disc");
    }
    return polish_core(h, z0, tol);
}

std::string to_json(const RootSet& rs) {
    nlohmann::json j;
    auto roots = nlohmann::json::array();
    for (Complex z : rs.roots) roots.push_back({z.real(), z.imag()});
    j["roots"] = roots;
    j["residuals"] = rs.residuals;
    j["converged"] = rs.converged;
    return j.dump();
}

} // namespace snn
