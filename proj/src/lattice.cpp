#include "snnroots/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <future>
#include <numeric>
#include <thread>

#include <nlohmann/json.hpp>

namespace snn {

namespace {

using Int128 = __int128;

// (dim+1) x (dim+1) integer matrix M = [[vertex columns], [1 ... 1]];
// barycentric coordinates of (p, t) are adj(M) * (p, t) / det(M).
struct BarycentricSolver {
    int n = 0;                                  // dim + 1
    long long det = 0;
    std::vector<std::vector<long long>> adj;    // adjugate, row-major

    explicit BarycentricSolver(const LatticeSimplex& S) {
        n = S.dim + 1;
        std::vector<std::vector<long long>> m(n, std::vector<long long>(n));
        for (int i = 0; i < S.dim; ++i) {
            for (int j = 0; j < n; ++j) m[i][j] = S.vertices[j][i];
        }
        for (int j = 0; j < n; ++j) m[S.dim][j] = 1;

        det = determinant(m);
        if (det == 0) {
            throw std::invalid_argument("LatticeSimplex: vertices are affinely dependent");
        }
        adj.assign(n, std::vector<long long>(n));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                long long c = cofactor(m, j, i);
                adj[i][j] = c;
            }
        }
    }

    static long long determinant(std::vector<std::vector<long long>> m) {
        // fraction-free Gaussian elimination (Bareiss); entries stay small
        // for the dim <= 4 simplices this module accepts
        int n = static_cast<int>(m.size());
        long long sign = 1;
        long long prev = 1;
        for (int k = 0; k < n - 1; ++k) {
            if (m[k][k] == 0) {
                int swap = -1;
                for (int i = k + 1; i < n; ++i) {
                    if (m[i][k] != 0) { swap = i; break; }
                }
                if (swap < 0) return 0;
                std::swap(m[k], m[swap]);
                sign = -sign;
            }
            for (int i = k + 1; i < n; ++i) {
                for (int j = k + 1; j < n; ++j) {
                    Int128 num = static_cast<Int128>(m[i][j]) * m[k][k] -
                                 static_cast<Int128>(m[i][k]) * m[k][j];
                    m[i][j] = static_cast<long long>(num / prev);
                }
                m[i][k] = 0;
            }
            prev = m[k][k];
        }
        return sign * m[n - 1][n - 1];
    }

    long long cofactor(const std::vector<std::vector<long long>>& m, int row, int col) const {
        std::vector<std::vector<long long>> minor;
        minor.reserve(static_cast<size_t>(n) - 1);
        for (int i = 0; i < n; ++i) {
            if (i == row) continue;
            std::vector<long long> r;
            r.reserve(static_cast<size_t>(n) - 1);
            for (int j = 0; j < n; ++j) {
                if (j == col) continue;
                r.push_back(m[i][j]);
            }
            minor.push_back(std::move(r));
        }
        long long det_minor = determinant(std::move(minor));
        return ((row + col) % 2 == 0) ? det_minor : -det_minor;
    }

    // signs of the exact barycentric numerators, oriented so that >= 0
    // means inside
    bool contains(const std::vector<long long>& point, long long t, bool strict) const {
        for (int i = 0; i < n; ++i) {
            Int128 num = 0;
            for (int j = 0; j < n - 1; ++j) {
                num += static_cast<Int128>(adj[i][j]) * point[j];
            }
            num += static_cast<Int128>(adj[i][n - 1]) * t;
            if (det < 0) num = -num;
            if (strict ? (num <= 0) : (num < 0)) return false;
        }
        return true;
    }
};

long long count_box(const LatticeSimplex& S, const BarycentricSolver& solver, long long t,
                    bool strict) {
    const int d = S.dim;
    std::vector<long long> lo(d), hi(d);
    for (int i = 0; i < d; ++i) {
        long long mn = S.vertices[0][i], mx = S.vertices[0][i];
        for (const auto& v : S.vertices) {
            mn = std::min(mn, v[i]);
            mx = std::max(mx, v[i]);
        }
        lo[i] = mn * t;
        hi[i] = mx * t;
        if (t == 0) { lo[i] = 0; hi[i] = 0; }
        if (lo[i] > hi[i]) std::swap(lo[i], hi[i]);
    }
    Int128 cells = 1;
    for (int i = 0; i < d; ++i) {
        cells *= (hi[i] - lo[i] + 1);
        if (cells > 100000000) {
            throw std::length_error("count_dilate: bounding box exceeds 1e8 points");
        }
    }

    auto count_slab = [&](long long x0, long long x1) {
        long long cnt = 0;
        std::vector<long long> p(d);
        // odometer over the box restricted to p[0] in [x0, x1)
        for (long long x = x0; x < x1; ++x) {
            p[0] = x;
            for (int i = 1; i < d; ++i) p[i] = lo[i];
            while (true) {
                if (solver.contains(p, t, strict)) ++cnt;
                int axis = d - 1;
                while (axis >= 1) {
                    if (++p[axis] <= hi[axis]) break;
                    p[axis] = lo[axis];
                    --axis;
                }
                if (axis < 1) break;
            }
        }
        return cnt;
    };

    const long long span = hi[0] - lo[0] + 1;
    if (cells < 200000 || span < 4) {
        return count_slab(lo[0], hi[0] + 1);
    }
    // exact integer counts: slab reduction order does not matter
    unsigned workers = std::max(2u, std::min(8u, std::thread::hardware_concurrency()));
    std::vector<std::future<long long>> futs;
    long long chunk = (span + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        long long x0 = lo[0] + static_cast<long long>(w) * chunk;
        long long x1 = std::min(hi[0] + 1, x0 + chunk);
        if (x0 >= x1) break;
        futs.push_back(std::async(std::launch::async, count_slab, x0, x1));
    }
    long long total = 0;
    for (auto& f : futs) total += f.get();
    return total;
}

// minimal exact rational on long long (values here stay tiny)
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n) : num(n), den(1) {}
    Rational(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(std::abs(num), den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    friend Rational operator+(Rational a, Rational b) {
        return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rational operator-(Rational a, Rational b) {
        return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Rational operator*(Rational a, Rational b) {
        return Rational(a.num * b.num, a.den * b.den);
    }
    friend Rational operator/(Rational a, long long b) { return Rational(a.num, a.den * b); }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

} // namespace

LatticeSimplex::LatticeSimplex(int d, std::vector<std::vector<long long>> verts)
    : dim(d), vertices(std::move(verts)) {
    if (dim < 1 || dim > 4) {
        throw std::invalid_argument("LatticeSimplex: dimension must be between 1 and 4");
    }
    if (vertices.size() != static_cast<size_t>(dim) + 1) {
        throw std::invalid_argument("LatticeSimplex: need exactly dim+1 vertices");
    }
    for (const auto& v : vertices) {
        if (v.size() != static_cast<size_t>(dim)) {
            throw std::invalid_argument("LatticeSimplex: vertex arity must equal dim");
        }
    }
    BarycentricSolver{*this};  // rejects affinely dependent vertex sets
}

long long count_dilate(const LatticeSimplex& S, long long t) {
    if (t < 0) throw std::invalid_argument("count_dilate: t must be nonnegative");
    if (t == 0) return 1;
    BarycentricSolver solver(S);
    return count_box(S, solver, t, false);
}

long long count_interior(const LatticeSimplex& S) {
    BarycentricSolver solver(S);
    return count_box(S, solver, 1, true);
}

MonomialPolynomial ehrhart_of(const LatticeSimplex& S) {
    const int d = S.dim;
    std::vector<long long> counts(static_cast<size_t>(d) + 1);
    for (int t = 0; t <= d; ++t) counts[t] = count_dilate(S, t);

    // Newton forward differences: L(t) = sum_k delta_k * C(t, k), exactly.
    std::vector<long long> delta(counts.begin(), counts.end());
    for (int level = 1; level <= d; ++level) {
        for (int i = d; i >= level; --i) delta[i] -= delta[i - 1];
    }

    std::vector<Rational> coeffs(static_cast<size_t>(d) + 1, Rational(0));
    std::vector<Rational> falling{Rational(1)};  // coefficients of t(t-1)...(t-k+1)
    for (int k = 0; k <= d; ++k) {
        long long kfact = 1;
        for (int i = 2; i <= k; ++i) kfact *= i;
        for (size_t i = 0; i < falling.size(); ++i) {
            coeffs[i] = coeffs[i] + falling[i] * Rational(delta[k]) / kfact;
        }
        // multiply the falling factorial by (t - k)
        falling.push_back(Rational(0));
        for (size_t i = falling.size() - 1; i > 0; --i) {
            falling[i] = falling[i - 1] - falling[i] * k;
        }
        falling[0] = falling[0] * Rational(-k);
    }

    std::vector<double> out(static_cast<size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) out[k] = coeffs[k].value();
    return MonomialPolynomial(std::move(out));
}

HStarVector hstar_of(const LatticeSimplex& S) {
    HStarVector h = monomial_to_hstar(ehrhart_of(S), S.dim);
    for (double& x : h.coeffs) {
        double snapped = std::round(x);
        if (snapped < 0.0 || std::abs(x - snapped) > 1e-6) {
            throw std::logic_error("hstar_of: entry " + std::to_string(x) +
                                   " is not a nonnegative integer; counting bug");
        }
        x = snapped;
    }
    return h;
}

LatticeSimplex simplex_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.contains("dim") || !j.contains("vertices")) {
        throw std::invalid_argument("simplex JSON needs fields \"dim\" and \"vertices\"");
    }
    return LatticeSimplex(j.at("dim").get<int>(),
                          j.at("vertices").get<std::vector<std::vector<long long>>>());
}

std::string to_json(const LatticeSimplex& S) {
    nlohmann::json j;
    j["dim"] = S.dim;
    j["vertices"] = S.vertices;
    return j.dump();
}

} // namespace snn
