#include "qhkit/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qhkit/error.hpp"

namespace qhkit {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kInversionBudget = 200;

void require_unit_open(double r, const char* what) {
    if (!(r > 0.0 && r < 1.0)) {
        fail(ErrorKind::Domain, std::string(what) + " must lie in (0,1), got " + std::to_string(r));
    }
}

// r/r' = e^p.
ModulusPair from_logit(double p) {
    if (p >= 0.0) {
        const double e = std::exp(-p);
        const double h = std::sqrt(1.0 + e * e);
        return {1.0 / h, e / h};
    }
    const double e = std::exp(p);
    const double h = std::sqrt(1.0 + e * e);
    return {e / h, 1.0 / h};
}

}  // namespace

ModulusPair ModulusPair::from_value(double r) {
    require_unit_open(r, "r");
    return {r, std::sqrt((1.0 - r) * (1.0 + r))};
}

ModulusPair ModulusPair::from_tanh(double x) {
    if (!(x > 0.0)) fail(ErrorKind::Domain, "from_tanh needs x > 0");
    return {std::tanh(x), 1.0 / std::cosh(x)};
}

double artanh(const ModulusPair& p) {
    if (p.r < 0.5) return std::atanh(p.r);
    // artanh r = ½ log((1+r)²/(1-r²)) = log((1+r)/r').
    return std::log((1.0 + p.r) / p.complement);
}

double agm(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) {
        if (a == 0.0 || b == 0.0) return 0.0;
        fail(ErrorKind::Domain, "agm needs nonnegative arguments");
    }
    for (int it = 0; it < 64; ++it) {
        const double am = 0.5 * (a + b);
        const double gm = std::sqrt(a * b);
        if (std::abs(am - gm) <= 2.0 * kEps * am) return 0.5 * (am + gm);
        a = am;
        b = gm;
    }
    return 0.5 * (a + b);
}

double mu(const ModulusPair& p) {
    if (!(p.r > 0.0) || !(p.complement > 0.0) || !(p.r <= 1.0)) {
        fail(ErrorKind::Domain, "mu needs r in (0,1)");
    }
    // K(r) = π / (2 M(1, r')), so (π/2) K(r')/K(r) = (π/2) M(1, r')/M(1, r).
    return 0.5 * kPi * agm(1.0, p.complement) / agm(1.0, p.r);
}

double mu(double r) { return mu(ModulusPair::from_value(r)); }

ModulusPair mu_inverse(double m) {
    if (!(m > 0.0) || !std::isfinite(m)) fail(ErrorKind::Domain, "mu_inverse needs m > 0");
    auto f = [m](double p) { return mu(from_logit(p)) - m; };

    double lo = -1.0;
    double hi = 1.0;
    double flo = f(lo);
    double fhi = f(hi);
    while (flo < 0.0) {
        if (lo < -700.0) fail(ErrorKind::NonConvergence, "mu_inverse: value too large");
        hi = lo;
        fhi = flo;
        lo *= 2.0;
        flo = f(lo);
    }
    while (fhi > 0.0) {
        if (hi > 700.0) fail(ErrorKind::NonConvergence, "mu_inverse: value too small");
        lo = hi;
        flo = fhi;
        hi *= 2.0;
        fhi = f(hi);
    }

    // Illinois-style regula falsi; μ is decreasing so f(lo) >= 0 >= f(hi).
    int side = 0;
    double best = 0.5 * (lo + hi);
    for (int it = 0; it < kInversionBudget; ++it) {
        if (flo == 0.0) return from_logit(lo);
        if (fhi == 0.0) return from_logit(hi);
        const double width = hi - lo;
        if (width <= 1e-14 * std::max(1.0, std::abs(best))) return from_logit(best);

        double p = (lo * fhi - hi * flo) / (fhi - flo);
        if (!(p > lo && p < hi)) p = 0.5 * (lo + hi);
        const double fp = f(p);
        best = p;
        if (std::abs(fp) <= 2.0 * kEps * m) return from_logit(p);
        if (fp > 0.0) {
            lo = p;
            flo = fp;
            if (side == 1) fhi *= 0.5;
            side = 1;
        } else {
            hi = p;
            fhi = fp;
            if (side == -1) flo *= 0.5;
            side = -1;
        }
    }
    fail(ErrorKind::NonConvergence, "mu_inverse did not converge");
}

ModulusPair phi_K2(double K, const ModulusPair& r) {
    if (!(K > 0.0)) fail(ErrorKind::Domain, "K must be positive");
    if (K == 1.0) return r;
    return mu_inverse(mu(r) / K);
}

double phi_K2(double K, double r) { return phi_K2(K, ModulusPair::from_value(r)).r; }

double eta_K2_at_one(double K) {
    if (!(K >= 1.0)) fail(ErrorKind::Domain, "eta_K2_at_one needs K >= 1");
    if (K == 1.0) return 1.0;
    const ModulusPair s = phi_K2(K, ModulusPair{std::sqrt(0.5), std::sqrt(0.5)});
    const double ratio = s.r / s.complement;
    return ratio * ratio;
}

DistortionParams DistortionParams::make(int n, double K, std::optional<double> eta1,
                                        std::optional<double> lambda_n) {
    if (n < 2) fail(ErrorKind::Domain, "dimension must be >= 2");
    if (!(K >= 1.0) || !std::isfinite(K)) fail(ErrorKind::Domain, "K must be >= 1");
    DistortionParams p;
    p.n = n;
    p.K = K;
    p.alpha = std::pow(K, 1.0 / (1.0 - n));
    p.beta = 1.0 / p.alpha;
    if (n == 2) {
        p.lambda_lo = p.lambda_hi = 4.0;
        p.lambda_n = 4.0;
    } else {
        p.lambda_lo = 4.0;
        p.lambda_hi = 2.0 * std::exp(n - 1.0);
        if (lambda_n) {
            if (*lambda_n < p.lambda_lo || *lambda_n >= p.lambda_hi) {
                fail(ErrorKind::Domain, "lambda_n outside [4, 2e^{n-1})");
            }
            p.lambda_n = lambda_n;
        }
    }
    if (eta1) {
        if (!(*eta1 >= 1.0)) fail(ErrorKind::Domain, "eta_{K,n}(1) must be >= 1");
        p.eta1 = eta1;
    } else if (n == 2) {
        p.eta1 = eta_K2_at_one(K);
    } else if (K == 1.0) {
        p.eta1 = 1.0;  // η_{1,n}(t) = t
    }
    return p;
}

double seittenranta_b(const DistortionParams& params) {
    if (!params.eta1) {
        fail(ErrorKind::MissingEta, "eta_{K,n}(1) must be supplied for n >= 3");
    }
    if (params.K == 1.0) return *params.eta1;
    const double lambda = params.lambda_n.value_or(params.lambda_hi);
    return std::pow(lambda, params.beta - 1.0) * params.beta * *params.eta1;
}

double lemma22_f(double r, double t) {
    require_unit_open(r, "r");
    if (!(t > 0.0 && t < 2.0 * r)) fail(ErrorKind::Domain, "lemma22_f needs t in (0, 2r)");
    const double d = r - t;
    const double num = std::log1p(t / (1.0 - r));
    const double den = std::asinh(t / std::sqrt((1.0 - r) * (1.0 + r) * (1.0 - d) * (1.0 + d)));
    return num / den;
}

double remark_quotient(double absa, double t) {
    require_unit_open(absa, "|a|");
    require_unit_open(t, "t");
    return std::atanh(absa * t) / std::atanh(t);
}

double remark_f(double absa, double t) { return 1.0 + remark_quotient(absa, t); }

double remark_f_hyperbolic(double absa, double u) {
    require_unit_open(absa, "|a|");
    if (!(u > 0.0) || !std::isfinite(u)) fail(ErrorKind::Domain, "u must be positive");
    return 1.0 + std::atanh(absa * std::tanh(u)) / u;
}

double lemma33_objective(double a, double r, double s) {
    const double num = r + s + a;
    return num * num / ((1.0 + r * r) * (1.0 + s * s));
}

Lemma33Max lemma33_max(double a) {
    if (!(a >= 0.0)) fail(ErrorKind::Domain, "lemma33_max needs a >= 0");
    const double root = std::sqrt(4.0 + a * a);
    const double half = 0.5 * (a + root);
    // (-a + root)/2 rewritten without cancellation for large a.
    return {half * half, 2.0 / (a + root)};
}

Conj28Terms conj28_terms(double K, double r) {
    if (!(K >= 1.0)) fail(ErrorKind::Domain, "K must be >= 1");
    require_unit_open(r, "r");
    const double alpha = 1.0 / K;
    const double lhs = artanh(phi_K2(K, ModulusPair::from_tanh(r)));
    const double scale = 2.0 * artanh(phi_K2(K, ModulusPair::from_tanh(0.5)));
    return {lhs, scale * std::max(r, std::pow(r, alpha))};
}

}  // namespace qhkit
