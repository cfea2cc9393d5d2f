#include "snnroots/regions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace snn {

namespace {

constexpr double kPi = std::numbers::pi;

RegionId make(RegionKind k, int d) {
    if (d < 1) throw std::invalid_argument("RegionId: degree parameter must be >= 1");
    return RegionId{k, d};
}

double braun_radius(int d) { return d * (d - 0.5); }

bool near_integer_in(Complex z, int lo, int hi) {
    if (z.imag() != 0.0) return false;
    double r = z.real();
    return r == std::floor(r) && r >= lo && r <= hi;
}

} // namespace

RegionId RegionId::braun_disc(int d) { return make(RegionKind::BraunDisc, d); }
RegionId RegionId::bddps_disc(int d) { return make(RegionKind::BddpsDisc, d); }
RegionId RegionId::cone_union(int d) { return make(RegionKind::ConeUnion, d); }
RegionId RegionId::vertical_strip(int d) { return make(RegionKind::VerticalStrip, d); }
RegionId RegionId::snn_angle_locus(int d) { return make(RegionKind::SnnAngleLocus, d); }
RegionId RegionId::snn_degree2() { return RegionId{RegionKind::SnnDegree2, 0}; }
RegionId RegionId::ehrhart_degree2() { return RegionId{RegionKind::EhrhartDegree2, 0}; }
RegionId RegionId::ehrhart_degree3() { return RegionId{RegionKind::EhrhartDegree3, 0}; }

std::string RegionId::name() const {
    switch (kind) {
        case RegionKind::BraunDisc: return "braun_disc(" + std::to_string(degree) + ")";
        case RegionKind::BddpsDisc: return "bddps_disc(" + std::to_string(degree) + ")";
        case RegionKind::ConeUnion: return "cone_union(" + std::to_string(degree) + ")";
        case RegionKind::VerticalStrip: return "vertical_strip(" + std::to_string(degree) + ")";
        case RegionKind::SnnAngleLocus: return "snn_angle_locus(" + std::to_string(degree) + ")";
        case RegionKind::SnnDegree2: return "snn_degree2";
        case RegionKind::EhrhartDegree2: return "ehrhart_degree2";
        case RegionKind::EhrhartDegree3: return "ehrhart_degree3";
    }
    return "unknown";
}

double angle_A(Complex z, int j, int d) {
    if (j < 0 || j > d - 1) throw std::invalid_argument("angle_A: need 0 <= j <= d-1");
    Complex u = z - static_cast<double>(j);
    Complex v = z + static_cast<double>(d - j);
    if (u == Complex(0.0) || v == Complex(0.0)) {
        throw std::invalid_argument("angle_A: z coincides with j or j-d");
    }
    double cross = u.real() * v.imag() - u.imag() * v.real();
    double dot = u.real() * v.real() + u.imag() * v.imag();
    return std::atan2(std::abs(cross), dot);
}

double cos2_A_formula(double k, int j, int d) {
    double r = static_cast<double>(d - 1 - j);
    double s = static_cast<double>(2 * d - 1 - j);
    if (r < 0.0 || s <= 0.0 || k <= 0.0) {
        throw std::invalid_argument("cos2_A_formula: need r >= 0, s > 0, k > 0");
    }
    double k2 = k * k;
    double denom = k2 * k2 + (r * r + s * s) * k2 + r * r * s * s;
    return 1.0 - (static_cast<double>(d) * d * k2) / denom;
}

double angle_sum(Complex z, int d) {
    if (d < 1) throw std::invalid_argument("angle_sum: need d >= 1");
    if (near_integer_in(z, -d, d - 1)) {
        throw std::invalid_argument("angle_sum: degenerate at the integer points [-d, d-1]");
    }
    double acc = 0.0;
    for (int j = 0; j < d; ++j) acc += angle_A(z, j, d);
    return acc;
}

bool common_halfplane(Complex z, int d) {
    std::vector<double> args;
    args.reserve(static_cast<size_t>(d) + 1);
    double maxmod = 0.0;
    std::vector<Complex> pts(static_cast<size_t>(d) + 1);
    for (int j = 0; j <= d; ++j) {
        pts[j] = binom_eval(z, j, d);
        maxmod = std::max(maxmod, std::abs(pts[j]));
    }
    if (maxmod == 0.0) return true;
    for (const Complex& p : pts) {
        if (std::abs(p) > 1e-14 * maxmod) args.push_back(std::arg(p));
    }
    if (args.size() <= 1) return true;
    std::sort(args.begin(), args.end());
    double gap = 2.0 * kPi - (args.back() - args.front());
    for (size_t i = 0; i + 1 < args.size(); ++i) gap = std::max(gap, args[i + 1] - args[i]);
    return gap >= kPi - 1e-12;
}

namespace {

bool in_cone(Complex z, double vertex, bool towards_positive, double halfwidth, double slack) {
    Complex w = towards_positive ? z - vertex : vertex - z;
    double r = std::abs(w);
    if (r <= slack) return false;
    double a = std::abs(std::arg(w));
    // shrink the open cone by `slack` (arc length) when requested
    return a < halfwidth - (r > 0.0 ? slack / r : 0.0);
}

bool real_interval(Complex z, double lo, double hi, double slack) {
    return std::abs(z.imag()) <= slack && z.real() >= lo - slack && z.real() <= hi + slack;
}

} // namespace

bool region_contains(const RegionId& id, Complex z, double slack) {
    double x = z.real();
    double y = z.imag();
    switch (id.kind) {
        case RegionKind::BraunDisc:
            return std::abs(z + 0.5) <= braun_radius(id.degree) + slack;
        case RegionKind::BddpsDisc: {
            double bound = 1.0;
            for (int i = 2; i <= id.degree + 1; ++i) bound *= i;
            return std::abs(z) <= 1.0 + bound + slack;
        }
        case RegionKind::ConeUnion: {
            double halfwidth = kPi / id.degree;
            return in_cone(z, id.degree - 1.0, true, halfwidth, slack) ||
                   in_cone(z, -static_cast<double>(id.degree), false, halfwidth, slack);
        }
        case RegionKind::VerticalStrip:
            return x >= -id.degree - slack && x <= id.degree - 1.0 + slack;
        case RegionKind::SnnAngleLocus: {
            if (real_interval(z, -id.degree, id.degree - 1.0, slack)) return true;
            if (y == 0.0) return false;  // real points beyond the segment
            return angle_sum(z, id.degree) >= kPi - slack;
        }
        case RegionKind::SnnDegree2:
            if (real_interval(z, -3.0, 2.0, slack)) return true;
            return y * y <= -x * x - x + 0.5 + slack;
        case RegionKind::EhrhartDegree2: {
            if (std::abs(y) <= slack &&
                (std::abs(x + 2.0) <= slack || std::abs(x + 1.0) <= slack ||
                 std::abs(x + 2.0 / 3.0) <= slack)) {
                return true;
            }
            // right edge x < 0 is strict
            return x >= -0.5 - slack && x < 0.0 + slack &&
                   std::abs(y) <= std::sqrt(15.0) / 6.0 + slack;
        }
        case RegionKind::EhrhartDegree3:
            if (real_interval(z, -3.0, 1.0, slack)) return true;
            return x >= -1.0 - slack && x < 1.0 + slack && x * x + y * y <= 3.0 + slack;
    }
    return false;
}

BoundaryCurve trace_boundary(int d, int n, double solver_tol) {
    if (d < 2) throw std::invalid_argument("trace_boundary: need d >= 2");
    if (n < 8) throw std::invalid_argument("trace_boundary: need at least 8 rays");
    if (solver_tol <= 0.0) throw std::invalid_argument("trace_boundary: tolerance must be positive");

    BoundaryCurve curve;
    curve.degree = d;
    curve.solver_tol = solver_tol;

    const double radius = braun_radius(d);
    const int grid = 4096;
    const Complex center(-0.5, 0.0);

    for (int i = 0; i < n; ++i) {
        double theta = kPi * (i + 0.5) / n;
        Complex dir(std::cos(theta), std::sin(theta));
        auto g = [&](double rho) { return angle_sum(center + rho * dir, d) - kPi; };

        // outermost sign change scanning inward from the disc boundary
        double hi = 0.0, lo = 0.0;
        bool found = false;
        double prev_rho = radius;
        double prev_g = g(radius);
        if (prev_g >= 0.0) {
            // the locus meets the disc rim on this ray, so the outermost
            // crossing lies outside the search disc
            curve.skipped_rays.push_back(theta);
            continue;
        }
        for (int k = grid - 1; k >= 1; --k) {
            double rho = radius * k / grid;
            double val = g(rho);
            if (prev_g < 0.0 && val >= 0.0) {
                lo = rho;
                hi = prev_rho;
                found = true;
                break;
            }
            prev_rho = rho;
            prev_g = val;
        }
        if (!found) {
            curve.skipped_rays.push_back(theta);
            continue;
        }
        // bisect until the angle-sum residual meets solver_tol
        double mid = 0.5 * (lo + hi);
        bool resolved = false;
        for (int it = 0; it < 200; ++it) {
            mid = 0.5 * (lo + hi);
            double val = g(mid);
            if (std::abs(val) <= solver_tol) {
                resolved = true;
                break;
            }
            if (val >= 0.0) lo = mid; else hi = mid;
        }
        if (resolved) {
            curve.points.push_back({theta, center + mid * dir});
        } else {
            curve.skipped_rays.push_back(theta);
        }
    }
    return curve;
}

double max_angle(int d, int j, std::optional<std::pair<double, double>> k_range) {
    if (j < 0 || j > d - 1) throw std::invalid_argument("max_angle: need 0 <= j <= d-1");
    double r = static_cast<double>(d - 1 - j);

    auto angle_at = [&](double k) { return std::acos(std::sqrt(cos2_A_formula(k, j, d))); };

    if (!k_range) {
        if (r == 0.0) return kPi / 2.0;  // k -> 0+ limit, not attained
        double s = static_cast<double>(2 * d - 1 - j);
        return std::acos(std::sqrt(1.0 - (static_cast<double>(d) * d) / ((r + s) * (r + s))));
    }

    auto [klo, khi] = *k_range;
    if (!(klo > 0.0) || khi < klo) throw std::invalid_argument("max_angle: bad k range");
    if (r == 0.0) return angle_at(klo);  // A decreases in k when r = 0
    double s = static_cast<double>(2 * d - 1 - j);
    double kstar = std::sqrt(r * s);
    // A increases toward k* and decreases past it
    if (kstar < klo) return angle_at(klo);
    if (kstar > khi) return angle_at(khi);
    return angle_at(kstar);
}

std::string boundary_csv(const BoundaryCurve& curve) {
    std::string out = "theta,re,im\n";
    char buf[128];
    for (const BoundarySample& s : curve.points) {
        std::snprintf(buf, sizeof(buf), "%.12g,%.12g,%.12g\n", s.theta, s.z.real(), s.z.imag());
        out += buf;
    }
    return out;
}

} // namespace snn
