#include "snnroots/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include <nlohmann/json.hpp>

#include "snnroots/regions.hpp"

namespace snn {

namespace {

constexpr double kPi = std::numbers::pi;

double circular_separation(double a, double b) {
    double diff = std::fmod(std::abs(a - b), 2.0 * kPi);
    return std::min(diff, 2.0 * kPi - diff);
}

} // namespace

bool ScreenReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const ScreenCheck& c) { return c.passed; });
}

const ScreenCheck* ScreenReport::find(const std::string& name) const {
    for (const ScreenCheck& c : checks) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

HStarVector make_Sd(int d) {
    if (d < 1) throw std::invalid_argument("make_Sd: need d >= 1");
    return HStarVector(d, std::vector<double>(static_cast<size_t>(d) + 1, 1.0));
}

HStarVector make_Md(int d) {
    if (d < 1) throw std::invalid_argument("make_Md: need d >= 1");
    std::vector<double> h(static_cast<size_t>(d) + 1, 0.0);
    h.front() = 1.0;
    h.back() = 1.0;
    return HStarVector(d, std::move(h));
}

double p_d(double b, int d) {
    if (b <= 0.0) throw std::invalid_argument("p_d: need b > 0");
    if (d < 1) throw std::invalid_argument("p_d: need d >= 1");
    double acc = 0.0;
    for (int j = 0; j < d; ++j) {
        acc += std::atan((j + 0.5) / b);  // arccot(b/(j+1/2)) for positive arguments
    }
    return acc;
}

double solve_bd(int d, double tol) {
    if (d < 1) throw std::invalid_argument("solve_bd: need d >= 1");
    if (tol <= 0.0) throw std::invalid_argument("solve_bd: tolerance must be positive");
    if (d == 1) return 0.0;  // p_1(b) -> pi/2 only as b -> 0+; M_1 has the real root -1/2

    // p_d(0+) = d*pi/2 > pi/2 and p_d(d^2) < d^2/(2 d^2) = 1/2 < pi/2,
    // so (0, d^2] brackets the unique solution.
    double lo = 1e-300;
    double hi = static_cast<double>(d) * d;
    double mid = 0.5 * hi;
    for (int it = 0; it < 400; ++it) {
        mid = 0.5 * (lo + hi);
        double val = p_d(mid, d) - kPi / 2.0;
        if (std::abs(val) <= tol) break;
        if (val > 0.0) lo = mid; else hi = mid;
    }
    return mid;
}

std::vector<GrowthRow> growth_table(int d_min, int d_max) {
    if (d_min < 2 || d_max < d_min || d_max > 30) {
        throw std::invalid_argument("growth_table: need 2 <= d_min <= d_max <= 30");
    }
    std::vector<GrowthRow> rows;
    rows.reserve(static_cast<size_t>(d_max - d_min) + 1);
    for (int d = d_min; d <= d_max; ++d) {
        GrowthRow row;
        row.d = d;
        row.b_d = solve_bd(d);
        row.asym_md = static_cast<double>(d) * d / kPi;
        row.asym_sd = static_cast<double>(d) * (d + 2) / (2.0 * kPi);

        RootSet md = find_roots(make_Md(d), 1e-9);
        if (!md.converged) {
            throw std::runtime_error("growth_table: M_" + std::to_string(d) + " roots did not converge");
        }
        for (Complex z : md.roots) row.md_max_imag = std::max(row.md_max_imag, z.imag());

        RootSet sd = find_roots(make_Sd(d), 1e-9);
        if (!sd.converged) {
            throw std::runtime_error("growth_table: S_" + std::to_string(d) + " roots did not converge");
        }
        for (Complex z : sd.roots) row.sd_max_norm = std::max(row.sd_max_norm, std::abs(z + 0.5));

        rows.push_back(row);
    }
    return rows;
}

HStarVector construct_snn_with_root(Complex z, int d) {
    if (d < 1) throw std::invalid_argument("construct_snn_with_root: need d >= 1");
    if (common_halfplane(z, d)) {
        throw std::domain_error("construct_snn_with_root: no nonnegative dependence exists at z");
    }

    std::vector<Complex> v(static_cast<size_t>(d) + 1);
    std::vector<double> args(static_cast<size_t>(d) + 1);
    for (int j = 0; j <= d; ++j) {
        v[j] = binom_eval(z, j, d);
        args[j] = std::arg(v[j]);
    }

    // Zero lies strictly inside the positive hull of a triple exactly when
    // the largest circular gap between the three arguments is < pi.  Among
    // those triples prefer the one maximizing the smallest pairwise angular
    // separation; it gives the best-conditioned 2x2 solve.
    struct Triple {
        double sep;
        int a, b, c;
    };
    std::vector<Triple> triples;
    for (int a = 0; a <= d; ++a) {
        for (int b = a + 1; b <= d; ++b) {
            for (int c = b + 1; c <= d; ++c) {
                double t[3] = {args[a], args[b], args[c]};
                std::sort(t, t + 3);
                double gap = std::max({t[1] - t[0], t[2] - t[1], 2.0 * kPi - (t[2] - t[0])});
                if (gap >= kPi - 1e-12) continue;
                double sep = std::min({circular_separation(args[a], args[b]),
                                       circular_separation(args[a], args[c]),
                                       circular_separation(args[b], args[c])});
                triples.push_back({sep, a, b, c});
            }
        }
    }
    if (triples.empty()) {
        throw std::domain_error("construct_snn_with_root: no zero-enclosing triple found");
    }
    std::sort(triples.begin(), triples.end(),
              [](const Triple& x, const Triple& y) { return x.sep > y.sep; });

    for (const Triple& t : triples) {
        // x_a v_a + x_b v_b + v_c = 0
        double m00 = v[t.a].real(), m01 = v[t.b].real();
        double m10 = v[t.a].imag(), m11 = v[t.b].imag();
        double det = m00 * m11 - m01 * m10;
        if (det == 0.0) continue;
        double r0 = -v[t.c].real(), r1 = -v[t.c].imag();
        double xa = (r0 * m11 - r1 * m01) / det;
        double xb = (m00 * r1 - m10 * r0) / det;
        if (!(xa > 0.0) || !(xb > 0.0)) continue;

        std::vector<double> h(static_cast<size_t>(d) + 1, 0.0);
        h[t.a] = xa;
        h[t.b] = xb;
        h[t.c] = 1.0;
        double mx = *std::max_element(h.begin(), h.end());
        for (double& x : h) x /= mx;
        return HStarVector(d, std::move(h));
    }
    throw std::domain_error("construct_snn_with_root: dependence solve failed on all triples");
}

std::pair<HStarVector, Complex> round_to_integer_hstar(const HStarVector& h, Complex z_target,
                                                       int max_denom) {
    if (max_denom < 1) throw std::invalid_argument("round_to_integer_hstar: need max_denom >= 1");
    if (!is_snn(h)) throw std::invalid_argument("round_to_integer_hstar: input is not SNN");

    bool already_integer = std::all_of(h.coeffs.begin(), h.coeffs.end(), [](double x) {
        return x == std::floor(x);
    });

    HStarVector rounded = h;
    if (!already_integer) {
        double mx = *std::max_element(h.coeffs.begin(), h.coeffs.end());
        std::vector<double> out(h.coeffs.size());
        for (size_t j = 0; j < out.size(); ++j) {
            out[j] = std::round(h.coeffs[j] / mx * max_denom);
        }
        rounded = HStarVector(h.degree, std::move(out));
        if (!is_snn(rounded)) {
            throw std::domain_error("round_to_integer_hstar: rounding produced the zero vector");
        }
    }
    Complex root = polish_root(rounded, z_target, 1e-12);
    return {rounded, root};
}

ScreenReport ehrhart_screen(const HStarVector& h) {
    const double tol_int = 1e-9;
    const int d = h.degree;
    ScreenReport report;
    char buf[160];

    bool nonneg_int = true;
    for (double x : h.coeffs) {
        if (x < -tol_int || std::abs(x - std::round(x)) > tol_int) {
            nonneg_int = false;
            break;
        }
    }
    report.checks.push_back({"nonnegative-integers", nonneg_int,
                             nonneg_int ? "all entries are nonnegative integers"
                                        : "entries must be nonnegative integers"});

    bool h0_one = std::abs(h[0] - 1.0) <= tol_int;
    std::snprintf(buf, sizeof(buf), "h_0 = %.17g (must be 1)", h[0]);
    report.checks.push_back({"h0-equals-1", h0_one, buf});

    double hd = h[d];
    double h1 = d >= 1 ? h[1] : 0.0;
    bool interior_ok = !(hd > tol_int && std::abs(h1) <= tol_int);
    std::snprintf(buf, sizeof(buf),
                  "h_d = %.17g counts interior points; nonzero forces h_1 = %.17g nonzero", hd, h1);
    report.checks.push_back({"interior-implies-h1", interior_ok, buf});

    bool top_ok = hd <= h[0] + h1 + tol_int;
    std::snprintf(buf, sizeof(buf),
                  "h_d <= h_0 + h_1: %.17g vs %.17g (paper-cited at d=5, extrapolated otherwise)",
                  hd, h[0] + h1);
    report.checks.push_back({"top-coefficient-inequality", top_ok, buf});

    return report;
}

std::string to_json(const ScreenReport& report) {
    nlohmann::json j = nlohmann::json::array();
    for (const ScreenCheck& c : report.checks) {
        j.push_back({{"name", c.name}, {"pass", c.passed}, {"detail", c.detail}});
    }
    return j.dump();
}

ConjectureFinding probe_conjecture_max_imag(int d, const std::vector<Complex>& sampled_roots,
                                            double b_d) {
    ConjectureFinding f;
    f.conjecture = "max-imaginary-part-of-Md-roots";
    double worst = 0.0;
    for (Complex z : sampled_roots) worst = std::max(worst, std::abs(z.imag()));
    f.counterexample_found = worst > b_d + 1e-9;
    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "d=%d: max |Im| over %zu sampled roots = %.12g, bound b_d = %.12g", d,
                  sampled_roots.size(), worst, b_d);
    f.detail = buf;
    return f;
}

ConjectureFinding probe_conjecture_vertical_strip(int d, const std::vector<Complex>& ehrhart_roots) {
    ConjectureFinding f;
    f.conjecture = "vertical-strip-for-ehrhart-roots";
    size_t outside = 0;
    for (Complex z : ehrhart_roots) {
        if (!region_contains(RegionId::vertical_strip(d), z, 1e-9)) ++outside;
    }
    f.counterexample_found = outside > 0;
    char buf[200];
    std::snprintf(buf, sizeof(buf), "d=%d: %zu of %zu Ehrhart roots outside [-d, d-1]", d, outside,
                  ehrhart_roots.size());
    f.detail = buf;
    return f;
}

std::string growth_csv(const std::vector<GrowthRow>& rows) {
    std::string out = "d,b_d,md_max_imag,sd_max_norm,d2_over_pi,dd2_over_2pi\n";
    char buf[256];
    for (const GrowthRow& r : rows) {
        std::snprintf(buf, sizeof(buf), "%d,%.12g,%.12g,%.12g,%.12g,%.12g\n", r.d, r.b_d,
                      r.md_max_imag, r.sd_max_norm, r.asym_md, r.asym_sd);
        out += buf;
    }
    return out;
}

} // namespace snn
