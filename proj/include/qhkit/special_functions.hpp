#pragma once

#include <optional>

namespace qhkit {

/// A number r ∈ (0,1) together with its complement r' = sqrt(1 - r²). Both
/// are carried so values near 1 keep their relative accuracy through 1 - r.
struct ModulusPair {
    double r;
    double complement;

    static ModulusPair from_value(double r);
    /// (tanh x, sech x).
    static ModulusPair from_tanh(double x);
};

/// artanh r, accurate also when r rounds to within a few ulps of 1.
double artanh(const ModulusPair& p);

/// Arithmetic-geometric mean of two positive numbers.
double agm(double a, double b);

/// Modulus of the Grötzsch ring in the plane, μ(r) = (π/2) K(r')/K(r), with
/// the complete elliptic integrals evaluated via the AGM. Strictly decreasing
/// from (0,1) onto (0,∞).
double mu(double r);
double mu(const ModulusPair& p);

/// The inverse of μ. Solved by bracketed bisection with secant steps in the
/// variable log(r/r').
ModulusPair mu_inverse(double m);

/// φ_{K,2}(r) = μ^{-1}(μ(r)/K). K ∈ (0,1) is accepted and gives the inverse
/// distortion, φ_{1/K,2} = φ_{K,2}^{-1}.
double phi_K2(double K, double r);
ModulusPair phi_K2(double K, const ModulusPair& r);

/// η_{K,2}(1) = s²/(1-s²) with s = φ_{K,2}(1/√2).
double eta_K2_at_one(double K);

/// Constants of the quasiconformal distortion estimates in dimension n.
struct DistortionParams {
    int n = 2;
    double K = 1.0;
    double alpha = 1.0;  // K^{1/(1-n)}
    double beta = 1.0;   // 1/alpha
    /// Grötzsch ring constant: exactly 4 for n = 2; for n >= 3 only the
    /// enclosure [4, 2e^{n-1}) is known unless the caller pins a value.
    double lambda_lo = 4.0;
    double lambda_hi = 4.0;
    std::optional<double> lambda_n;
    std::optional<double> eta1;

    /// For n >= 3 with K > 1 the caller must supply eta1 = η_{K,n}(1).
    static DistortionParams make(int n, double K, std::optional<double> eta1 = std::nullopt,
                                 std::optional<double> lambda_n = std::nullopt);
};

/// b(K,n) = λ_n^{β-1} β η_{K,n}(1). Without a pinned λ_n (n >= 3) the upper
/// end of the enclosure is used, which keeps b a valid constant.
double seittenranta_b(const DistortionParams& params);

/// log(1 + t/(1-r)) / arsh(t / sqrt((1-r²)(1-(r-t)²))) on r ∈ (0,1),
/// t ∈ (0, 2r). Decreases from 1+r to 1.
double lemma22_f(double r, double t);

/// artanh(|a| t) / artanh(t) for t ∈ (0,1); decreases from |a| to 0.
double remark_quotient(double absa, double t);

/// 1 + artanh(|a| t)/artanh(t), the j-ratio along the diameter through a.
double remark_f(double absa, double t);

/// remark_f at t = tanh(u). Reaches the t → 1 end, where t itself rounds to 1.
double remark_f_hyperbolic(double absa, double u);

/// (r + s + a)² / ((1+r²)(1+s²)).
double lemma33_objective(double a, double r, double s);

struct Lemma33Max {
    double maxval;
    double argr;  // maximizer r = s
};

/// max over r, s >= 0 of lemma33_objective: ((a + sqrt(4+a²))/2)² at
/// r = s = (-a + sqrt(4+a²))/2.
Lemma33Max lemma33_max(double a);

/// Both sides of artanh φ_{K,2}(tanh r) <= 2 artanh(φ_{K,2}(tanh ½)) max(r, r^α)
/// with α = 1/K.
struct Conj28Terms {
    double lhs;
    double rhs;
};

Conj28Terms conj28_terms(double K, double r);

}  // namespace qhkit
