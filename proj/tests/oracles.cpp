#include "oracles.hpp"

#include <boost/math/special_functions/ellint_1.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <vector>

namespace qhtest::oracle {
namespace {

constexpr double kPi = 3.14159265358979323846;

struct V2 {
    double x, y;
};
V2 operator+(V2 a, V2 b) { return {a.x + b.x, a.y + b.y}; }
V2 operator-(V2 a, V2 b) { return {a.x - b.x, a.y - b.y}; }
V2 operator*(double s, V2 a) { return {s * a.x, s * a.y}; }
double dot(V2 a, V2 b) { return a.x * b.x + a.y * b.y; }
double cross(V2 a, V2 b) { return a.x * b.y - a.y * b.x; }
double norm(V2 a) { return std::hypot(a.x, a.y); }

V2 planar(const Point& p) {
    if (p.dim() != 2) throw std::invalid_argument("oracle expects planar points");
    return {p[0], p[1]};
}

double density(V2 z) { return 1.0 / (1.0 - norm(z)); }

double segment_weight(V2 p, V2 q) {
    return norm(q - p) * (density(p) + 4.0 * density(0.5 * (p + q)) + density(q)) / 6.0;
}

// state: position, unit tangent, accumulated length
struct State {
    V2 z, t;
    double len;
};

State deriv(const State& s) {
    const double r = norm(s.z);
    V2 g{0.0, 0.0};
    if (r > 0.0) g = (1.0 / (r * (1.0 - r))) * s.z;
    const V2 tp = g - dot(g, s.t) * s.t;
    return {s.t, tp, density(s.z)};
}

State axpy(const State& s, double h, const State& d) {
    return {s.z + h * d.z, s.t + h * d.t, s.len + h * d.len};
}

State rk4(const State& s, double h) {
    const State k1 = deriv(s);
    const State k2 = deriv(axpy(s, h / 2, k1));
    const State k3 = deriv(axpy(s, h / 2, k2));
    const State k4 = deriv(axpy(s, h, k3));
    State out{s.z + (h / 6) * (k1.z + 2.0 * k2.z + 2.0 * k3.z + k4.z),
              s.t + (h / 6) * (k1.t + 2.0 * k2.t + 2.0 * k3.t + k4.t),
              s.len + h / 6 * (k1.len + 2 * k2.len + 2 * k3.len + k4.len)};
    out.t = (1.0 / norm(out.t)) * out.t;
    return out;
}

// Integrates from x with heading psi to the point of closest approach to y.
State shoot(V2 x, V2 y, double psi, double h) {
    State s{x, {std::cos(psi), std::sin(psi)}, 0.0};
    const double smax = 20.0 * norm(y - x) + 1.0;
    for (double travelled = 0.0; travelled < smax; travelled += h) {
        const State n = rk4(s, h);
        if (dot(n.z - y, n.t) >= 0.0) {
            double lo = 0.0, hi = h;
            for (int i = 0; i < 60; ++i) {
                const double mid = 0.5 * (lo + hi);
                const State m = rk4(s, mid);
                (dot(m.z - y, m.t) >= 0.0 ? hi : lo) = mid;
            }
            return rk4(s, 0.5 * (lo + hi));
        }
        if (norm(n.z) >= 1.0) return n;
        s = n;
    }
    return s;
}

}  // namespace

double k_disk_dijkstra(const Point& xp, const Point& yp, int resolution, int stencil) {
    const V2 x = planar(xp), y = planar(yp);
    const double h = 1.0 / resolution;
    const double rcap = std::max(norm(x), norm(y)) + 2.0 * stencil * h;
    const int N = static_cast<int>(std::ceil(rcap / h));
    const int side = 2 * N + 1;
    auto node_pos = [&](int id) { return V2{(id % side - N) * h, (id / side - N) * h}; };
    const int total = side * side;
    const int src = total, dst = total + 1;

    std::vector<std::array<int, 2>> offsets;
    for (int i = -stencil; i <= stencil; ++i) {
        for (int j = -stencil; j <= stencil; ++j) {
            if ((i || j) && std::gcd(std::abs(i), std::abs(j)) == 1) offsets.push_back({i, j});
        }
    }
    auto inside = [&](V2 p) { return norm(p) <= rcap && norm(p) < 1.0; };

    std::vector<double> dist(total + 2, std::numeric_limits<double>::infinity());
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[src] = 0.0;
    pq.push({0.0, src});
    const double attach = (stencil + 0.5) * h;

    while (!pq.empty()) {
        const auto [d, u] = pq.top();
        pq.pop();
        if (d > dist[u]) continue;
        if (u == dst) return d;
        auto relax = [&](int v, double w) {
            if (d + w < dist[v]) {
                dist[v] = d + w;
                pq.push({dist[v], v});
            }
        };
        if (u == src) {
            const int ci = static_cast<int>(std::lround(x.x / h)), cj = static_cast<int>(std::lround(x.y / h));
            for (int i = ci - stencil - 1; i <= ci + stencil + 1; ++i) {
                for (int j = cj - stencil - 1; j <= cj + stencil + 1; ++j) {
                    const V2 p{i * h, j * h};
                    if (std::abs(i) > N || std::abs(j) > N || !inside(p) || norm(p - x) > attach) continue;
                    relax((j + N) * side + (i + N), segment_weight(x, p));
                }
            }
            if (norm(y - x) <= attach) relax(dst, segment_weight(x, y));
            continue;
        }
        const V2 p = node_pos(u);
        const int i0 = u % side - N, j0 = u / side - N;
        for (const auto& o : offsets) {
            const int i = i0 + o[0], j = j0 + o[1];
            if (std::abs(i) > N || std::abs(j) > N) continue;
            const V2 q{i * h, j * h};
            if (!inside(q)) continue;
            relax((j + N) * side + (i + N), segment_weight(p, q));
        }
        if (norm(y - p) <= attach) relax(dst, segment_weight(p, y));
    }
    return dist[dst];
}

double k_disk_shooting(const Point& xp, const Point& yp, double step) {
    const V2 x = planar(xp), y = planar(yp);
    if (norm(y - x) == 0.0) return 0.0;
    const V2 chord = y - x;
    const double psi0 = std::atan2(chord.y, chord.x);
    auto miss = [&](double psi) {
        const State s = shoot(x, y, psi, step);
        return cross(s.t, y - s.z);
    };
    double lo = psi0 - (kPi / 2 - 0.02), hi = psi0 + (kPi / 2 - 0.02);
    double mlo = miss(lo);
    if (mlo * miss(hi) > 0.0) throw std::runtime_error("shooting bracket failed");
    for (int it = 0; it < 64; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double mm = miss(mid);
        if ((mm > 0.0) == (mlo > 0.0)) {
            lo = mid;
            mlo = mm;
        } else {
            hi = mid;
        }
    }
    const State s = shoot(x, y, 0.5 * (lo + hi), step);
    return s.len + segment_weight(s.z, y);
}

double rho_disk_arc(const Point& xp, const Point& yp) {
    const V2 x = planar(xp), y = planar(yp);
    auto dens = [](V2 z) { return 2.0 / (1.0 - dot(z, z)); };
    const int M = 20000;
    const double det = cross(x, y);
    if (std::abs(det) < 1e-12) {
        double acc = 0.0;
        for (int i = 0; i <= M; ++i) {
            const double w = (i == 0 || i == M) ? 1.0 : (i % 2 ? 4.0 : 2.0);
            acc += w * dens(x + (static_cast<double>(i) / M) * (y - x));
        }
        return acc * norm(y - x) / (3.0 * M);
    }
    // c·x = (1+|x|²)/2, c·y = (1+|y|²)/2
    const double bx = 0.5 * (1.0 + dot(x, x)), by = 0.5 * (1.0 + dot(y, y));
    const V2 c{(bx * y.y - by * x.y) / det, (x.x * by - y.x * bx) / det};
    const double R = std::sqrt(dot(c, c) - 1.0);
    const double ax = std::atan2(x.y - c.y, x.x - c.x);
    double sweep = std::atan2(y.y - c.y, y.x - c.x) - ax;
    while (sweep > kPi) sweep -= 2 * kPi;
    while (sweep < -kPi) sweep += 2 * kPi;
    double acc = 0.0;
    for (int i = 0; i <= M; ++i) {
        const double w = (i == 0 || i == M) ? 1.0 : (i % 2 ? 4.0 : 2.0);
        const double th = ax + sweep * i / M;
        acc += w * dens(c + R * V2{std::cos(th), std::sin(th)});
    }
    return acc * R * std::abs(sweep) / (3.0 * M);
}

double mu_ellint(double r) {
    const double rp = std::sqrt(1.0 - r * r);
    return kPi / 2.0 * boost::math::ellint_1(rp) / boost::math::ellint_1(r);
}

double lemma33_brute(double a, double span) {
    auto f = [a](double r, double s) { return (r + s + a) * (r + s + a) / ((1 + r * r) * (1 + s * s)); };
    const int N = 2000;
    double best = -1.0, br = 0.0, bs = 0.0;
    for (int i = 0; i <= N; ++i) {
        for (int j = 0; j <= N; ++j) {
            const double r = span * i / N, s = span * j / N;
            const double v = f(r, s);
            if (v > best) {
                best = v;
                br = r;
                bs = s;
            }
        }
    }
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    auto golden = [&](auto&& fn, double lo, double hi) {
        double c = hi - g * (hi - lo), d = lo + g * (hi - lo);
        for (int it = 0; it < 100; ++it) {
            if (fn(c) > fn(d)) hi = d; else lo = c;
            c = hi - g * (hi - lo);
            d = lo + g * (hi - lo);
        }
        return 0.5 * (lo + hi);
    };
    const double w = 2.0 * span / N;
    for (int sweep = 0; sweep < 30; ++sweep) {
        br = golden([&](double r) { return f(r, bs); }, std::max(0.0, br - w), br + w);
        bs = golden([&](double s) { return f(br, s); }, std::max(0.0, bs - w), bs + w);
    }
    return std::max(best, f(br, bs));
}

}  // namespace qhtest::oracle
