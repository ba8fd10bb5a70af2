#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "qhkit/special_functions.hpp"
#include "support.hpp"

using namespace qhkit;
using qhtest::cat;
using qhtest::Gen;

TEST(Agm, Examples) {
    EXPECT_DOUBLE_EQ(agm(1.0, 1.0), 1.0);
    // Gauss's constant
    EXPECT_NEAR(1.0 / agm(1.0, std::numbers::sqrt2), 0.8346268416740731, 1e-15);
    EXPECT_ERROR_KIND(agm(-1.0, 1.0), ErrorKind::Domain);
}

TEST(Mu, SymmetryPoint) {
    EXPECT_NEAR(mu(1 / std::numbers::sqrt2), std::numbers::pi / 2, 1e-12);
}

TEST(Mu, AgreesWithEllipticIntegralOracle) {
    for (double r = 0.01; r < 1.0; r += 0.01)
        EXPECT_NEAR(mu(r), qhtest::oracle::mu_ellint(r), 1e-13 * qhtest::oracle::mu_ellint(r)) << r;
}

TEST(Mu, FunctionalIdentity) {
    for (int i = 1; i <= 9; ++i) {
        const double r = i / 10.0;
        EXPECT_NEAR(mu(r) * mu(std::sqrt(1 - r * r)), std::numbers::pi * std::numbers::pi / 4, 1e-12) << r;
    }
}

TEST(Mu, DecreasingAndDomain) {
    double prev = INFINITY;
    for (double r = 1e-6; r < 1.0; r += 0.001) {
        const double m = mu(r);
        EXPECT_LT(m, prev);
        prev = m;
    }
    EXPECT_ERROR_KIND(mu(0.0), ErrorKind::Domain);
    EXPECT_ERROR_KIND(mu(1.0), ErrorKind::Domain);
}

TEST(MuInverse, RoundTrip) {
    qhtest::for_all(5000, 51, [](Gen& g) -> std::optional<std::string> {
        const double m = g.log_uniform(0.05, 30.0);
        const ModulusPair p = mu_inverse(m);
        const double back = mu(p);
        if (std::abs(back - m) > 1e-12 * m) return cat("mu(mu_inverse(", m, ")) = ", back);
        if (std::abs(p.r * p.r + p.complement * p.complement - 1) > 1e-14) return "pair not complementary";
        return std::nullopt;
    });
}

TEST(Phi, Examples) {
    EXPECT_NEAR(phi_K2(1.0, 0.37), 0.37, 1e-15);
    EXPECT_NEAR(phi_K2(2.0, 0.25), 0.8, 1e-12);
    for (int i = 1; i <= 9; ++i) {
        const double r = i / 10.0;
        EXPECT_NEAR(phi_K2(2.0, r), 2 * std::sqrt(r) / (1 + r), 1e-9) << r;
    }
    for (double r = 0.001; r < 1.0; r += 0.001) EXPECT_NEAR(phi_K2(1.0, r), r, 1e-12);
}

TEST(Phi, SemigroupAndInverse) {
    qhtest::for_all(2000, 52, [](Gen& g) -> std::optional<std::string> {
        const double K1 = g.uniform(1.0, 3.0), K2 = g.uniform(1.0, 3.0), r = g.uniform(0.01, 0.99);
        const double lhs = phi_K2(K1, phi_K2(K2, r));
        const double rhs = phi_K2(K1 * K2, r);
        if (std::abs(lhs - rhs) > 1e-9) return cat("semigroup off by ", lhs - rhs);
        const double back = phi_K2(1 / K1, phi_K2(K1, r));
        if (std::abs(back - r) > 1e-9) return cat("inverse off by ", back - r);
        if (phi_K2(K1, r) < r - 1e-15) return "phi_K below identity for K >= 1";
        return std::nullopt;
    });
}

TEST(Eta, Examples) {
    EXPECT_NEAR(eta_K2_at_one(1.0), 1.0, 1e-12);
    EXPECT_NEAR(eta_K2_at_one(2.0), 32.97056274847714, 1e-9);
    EXPECT_NEAR(eta_K2_at_one(1.1), 1.519464, 1e-6);
}

TEST(SeittenrantaB, Examples) {
    for (int n : {2, 3, 4}) EXPECT_EQ(seittenranta_b(DistortionParams::make(n, 1.0)), 1.0);
    EXPECT_NEAR(seittenranta_b(DistortionParams::make(2, 1.1)), 1.919946888194, 1e-10);
}

TEST(SeittenrantaB, IncreasesWithK) {
    double prev = 1.0;
    for (double K = 1.05; K < 4.0; K += 0.05) {
        const double b = seittenranta_b(DistortionParams::make(2, K));
        EXPECT_GT(b, prev) << K;
        prev = b;
    }
}

TEST(SeittenrantaB, HigherDimensionsNeedEta) {
    EXPECT_ERROR_KIND(seittenranta_b(DistortionParams::make(3, 1.5)), ErrorKind::MissingEta);
    const double b = seittenranta_b(DistortionParams::make(3, 1.5, 2.0));
    EXPECT_GT(b, 1.0);
    EXPECT_LE(seittenranta_b(DistortionParams::make(3, 1.5, 2.0, 4.0)), b);
}

TEST(Lemma22F, EndpointsAndInterior) {
    const double r = 0.5;
    EXPECT_NEAR(lemma22_f(r, 1e-9), 1 + r, 1e-6);
    EXPECT_NEAR(lemma22_f(r, 2 * r - 1e-12), 1.0, 1e-4);
    const double mid = lemma22_f(r, 0.5);
    EXPECT_GT(mid, 1.0);
    EXPECT_LT(mid, 1.5);
    EXPECT_GT(lemma22_f(r, 0.4), lemma22_f(r, 0.6));
    EXPECT_ERROR_KIND(lemma22_f(r, 1.0), ErrorKind::Domain);
}

TEST(Lemma22F, DecreasingInT) {
    qhtest::for_all(5000, 53, [](Gen& g) -> std::optional<std::string> {
        const double r = g.uniform(0.01, 0.99);
        double t1 = g.uniform(1e-6, 2 * r), t2 = g.uniform(1e-6, 2 * r);
        if (t1 > t2) std::swap(t1, t2);
        if (t2 - t1 < 1e-6 * r) return std::nullopt;
        const double f1 = lemma22_f(r, t1), f2 = lemma22_f(r, t2);
        if (!(f1 > f2)) return cat("f(", r, ", ", t1, ") = ", f1, " <= f(", t2, ") = ", f2);
        if (f1 > 1 + r + 1e-12 || f2 < 1 - 1e-12) return "value outside (1, 1+r)";
        return std::nullopt;
    });
}

TEST(RemarkF, Examples) {
    EXPECT_NEAR(remark_f(0.5, 1e-9), 1.5, 1e-8);
    EXPECT_NEAR(remark_quotient(0.5, 1e-9), 0.5, 1e-8);
    EXPECT_NEAR(remark_f_hyperbolic(0.5, 1e5), 1.0, 1e-4);
    EXPECT_NEAR(remark_f_hyperbolic(0.5, 0.3), remark_f(0.5, std::tanh(0.3)), 1e-14);
    EXPECT_GT(remark_quotient(0.5, 0.3), remark_quotient(0.5, 0.6));
}

TEST(Lemma33, ClosedFormExamples) {
    const Lemma33Max m0 = lemma33_max(0.0);
    EXPECT_NEAR(m0.maxval, 1.0, 1e-15);
    EXPECT_NEAR(m0.argr, 1.0, 1e-15);
    const Lemma33Max m1 = lemma33_max(1.0);
    EXPECT_NEAR(m1.maxval, 2.618033988749895, 1e-12);
    EXPECT_NEAR(m1.argr, 0.6180339887498949, 1e-12);
    EXPECT_NEAR(lemma33_objective(1.0, m1.argr, m1.argr), m1.maxval, 1e-14);
}

TEST(Lemma33, MatchesBruteForce) {
    for (const double a : {0.0, 0.5, 1.0, 2.0, 5.0})
        EXPECT_NEAR(lemma33_max(a).maxval, qhtest::oracle::lemma33_brute(a), 1e-6) << a;
}

TEST(Lemma33, NoSampleExceedsMax) {
    qhtest::for_all(20000, 54, [](Gen& g) -> std::optional<std::string> {
        const double a = g.uniform(0.0, 6.0);
        const double r = g.log_uniform(1e-4, 1e4), s = g.log_uniform(1e-4, 1e4);
        if (lemma33_objective(a, r, s) > lemma33_max(a).maxval * (1 + 1e-14))
            return cat("objective beats closed form at a=", a);
        return std::nullopt;
    });
}

TEST(Conj28, TermsAtTheIdentity) {
    const Conj28Terms t = conj28_terms(1.0, 0.7);
    EXPECT_NEAR(t.lhs, 0.7, 1e-12);
    EXPECT_NEAR(t.rhs, 0.7, 1e-12);
}
