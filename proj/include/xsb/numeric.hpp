#pragma once

// Floating-point validation of the Dirac algebra and the geometric facts
// behind the null structure: projections, the null-form kernel bound, the
// angle estimate, and comparability of the half-wave and Klein-Gordon weights.

#include "xsb/error.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

namespace xsb::numeric {

template <typename Scalar>
using Matrix2c = Eigen::Matrix<std::complex<Scalar>, 2, 2>;

template <typename Scalar>
using Vector2 = Eigen::Matrix<Scalar, 2, 1>;

/// Space-time frequency (tau, xi).
template <typename Scalar>
struct Frequency {
    Vector2<Scalar> xi;
    Scalar tau = 0;
};

enum class Sign : int { plus = 1, minus = -1 };

inline Sign opposite(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }

template <typename Scalar>
Scalar sign_value(Sign s) {
    return s == Sign::plus ? Scalar(1) : Scalar(-1);
}

/// alpha^1, alpha^2, beta in the standard 2x2 representation.
template <typename Scalar>
struct DiracMatrices {
    Matrix2c<Scalar> alpha1;
    Matrix2c<Scalar> alpha2;
    Matrix2c<Scalar> beta;

    static DiracMatrices standard() {
        using C = std::complex<Scalar>;
        const C i(0, 1);
        DiracMatrices m;
        m.alpha1 << C(0), C(1), C(1), C(0);
        m.alpha2 << C(0), -i, i, C(0);
        m.beta << C(1), C(0), C(0), C(-1);
        return m;
    }

    /// x . alpha
    Matrix2c<Scalar> dot(const Vector2<Scalar>& x) const { return x(0) * alpha1 + x(1) * alpha2; }
};

/// Angle in [0, pi] between nonzero vectors. Uses atan2(|x^y|, x.y), which
/// equals the arccos of the clamped normalised inner product but keeps full
/// relative accuracy near 0 and pi.
template <typename Scalar>
Scalar angle_between(const Vector2<Scalar>& x, const Vector2<Scalar>& y) {
    if (x.isZero(0) || y.isZero(0)) throw DomainError("angle with a zero vector");
    Scalar cross = x(0) * y(1) - x(1) * y(0);
    Scalar dot = x.dot(y);
    return std::atan2(std::abs(cross), dot);
}

template <typename Scalar>
Scalar angle_between(const Frequency<Scalar>& x, const Frequency<Scalar>& y) {
    return angle_between(x.xi, y.xi);
}

/// P_sign(xi) = (I + sign * xi/|xi| . alpha) / 2.
template <typename Scalar>
Matrix2c<Scalar> dirac_projection(const Vector2<Scalar>& xi, Sign sign) {
    Scalar r = std::hypot(xi(0), xi(1));
    if (r == Scalar(0)) throw DomainError("Dirac projection at zero frequency");
    const auto m = DiracMatrices<Scalar>::standard();
    Vector2<Scalar> unit = xi / r;
    return (Matrix2c<Scalar>::Identity() + sign_value<Scalar>(sign) * m.dot(unit)) / Scalar(2);
}

/// Largest singular value from the closed form for 2x2 matrices:
/// sigma_max^2 = (|A|_F^2 + sqrt(|A|_F^4 - 4|det A|^2)) / 2.
template <typename Scalar>
Scalar operator_norm(const Matrix2c<Scalar>& a) {
    Scalar fro2 = a.squaredNorm();
    Scalar det = std::abs(a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0));
    Scalar disc = std::max(Scalar(0), fro2 * fro2 - Scalar(4) * det * det);
    return std::sqrt((fro2 + std::sqrt(disc)) / Scalar(2));
}

/// Kernel of the null form <beta P_{s1}(D) psi, P_{s2}(D) psi'>:
/// P_{s2}(zeta) beta P_{s1}(eta).
template <typename Scalar>
Matrix2c<Scalar> nullform_kernel(const Vector2<Scalar>& eta, const Vector2<Scalar>& zeta, Sign s1, Sign s2) {
    const auto m = DiracMatrices<Scalar>::standard();
    return dirac_projection(zeta, s2) * m.beta * dirac_projection(eta, s1);
}

/// ||P_{s2}(zeta) beta P_{s1}(eta)|| / theta(s1 eta, s2 zeta); 0 when both
/// vanish below 1e-14.
template <typename Scalar>
Scalar symbol_bound_ratio(const Vector2<Scalar>& eta, const Vector2<Scalar>& zeta, Sign s1, Sign s2) {
    Scalar norm = operator_norm(nullform_kernel(eta, zeta, s1, s2));
    Scalar theta = angle_between<Scalar>(sign_value<Scalar>(s1) * eta, sign_value<Scalar>(s2) * zeta);
    if (theta < Scalar(1e-14)) {
        if (norm < Scalar(1e-14)) return Scalar(0);
        throw DomainError("null-form kernel does not vanish at zero angle");
    }
    return norm / theta;
}

/// <x> = sqrt(1 + x^2)
template <typename Scalar>
Scalar japanese(Scalar x) {
    return std::hypot(Scalar(1), x);
}

/// Exponents of the angle estimate as floating-point numbers.
struct AngleWeights {
    double a = 0.5;
    double b = 0.5;
    double c = 0.5;
};

/// One configuration (lambda, eta), (mu, zeta) with signs.
struct AngleSample {
    Frequency<double> first;  // (lambda, eta)
    Frequency<double> second; // (mu, zeta)
    Sign s1 = Sign::plus;
    Sign s2 = Sign::plus;
};

/// theta(s1 eta, s2 zeta) and the right-hand side of the angle estimate.
struct AngleEvaluation {
    double theta = 0;
    double rhs = 0;
};

inline AngleEvaluation evaluate_angle_estimate(const AngleSample& x, const AngleWeights& w) {
    const Vector2<double>& eta = x.first.xi;
    const Vector2<double>& zeta = x.second.xi;
    double lambda = x.first.tau, mu = x.second.tau;
    double e1 = sign_value<double>(x.s1), e2 = sign_value<double>(x.s2);
    double m = std::min(japanese(eta.norm()), japanese(zeta.norm()));
    double fa = japanese(std::abs(lambda - mu) - (eta - zeta).norm()) / m;
    double fb = japanese(lambda + e1 * eta.norm()) / m;
    double fc = japanese(mu + e2 * zeta.norm()) / m;
    AngleEvaluation out;
    out.theta = angle_between<double>(e1 * eta, e2 * zeta);
    out.rhs = std::pow(fa, w.a) + std::pow(fb, w.b) + std::pow(fc, w.c);
    return out;
}

/// Seeded generator of heavy-tailed and degenerate configurations: radii
/// log-uniform on [1e-3, 1e6], directions uniform or nearly (anti)parallel,
/// times generic or within a small distance of the cones.
class AngleSampler {
public:
    explicit AngleSampler(std::uint64_t seed) : rng_(seed) {}

    AngleSample next() {
        AngleSample x;
        x.s1 = coin() ? Sign::plus : Sign::minus;
        x.s2 = coin() ? Sign::plus : Sign::minus;
        double e1 = sign_value<double>(x.s1), e2 = sign_value<double>(x.s2);

        double r1 = log_uniform(1e-3, 1e6);
        double r2 = pick(3) == 0 ? r1 * log_uniform(0.5, 2.0) : log_uniform(1e-3, 1e6);
        double phi = uniform(0, 2 * std::numbers::pi);

        // Angle between s1 eta and s2 zeta.
        double gap = 0;
        switch (pick(3)) {
        case 0: gap = uniform(0, std::numbers::pi); break;
        case 1: gap = log_uniform(1e-8, 1.0); break;
        default: gap = std::numbers::pi - log_uniform(1e-8, 1.0); break;
        }
        if (coin()) gap = -gap;

        Vector2<double> d1(std::cos(phi), std::sin(phi));
        Vector2<double> d2(std::cos(phi + gap), std::sin(phi + gap));
        x.first.xi = e1 * r1 * d1;
        x.second.xi = e2 * r2 * d2;

        double eta = x.first.xi.norm(), zeta = x.second.xi.norm();
        x.first.tau = pick(2) == 0 ? signed_log(1e-3, 1e7) : -e1 * eta + signed_log(1e-4, 1e2);
        switch (pick(3)) {
        case 0: x.second.tau = signed_log(1e-3, 1e7); break;
        case 1: x.second.tau = -e2 * zeta + signed_log(1e-4, 1e2); break;
        default:
            // |lambda - mu| close to |eta - zeta|
            x.second.tau = x.first.tau + (coin() ? 1 : -1) * (x.first.xi - x.second.xi).norm() + signed_log(1e-4, 1e2);
            break;
        }
        return x;
    }

private:
    bool coin() { return std::uniform_int_distribution<int>(0, 1)(rng_) == 1; }
    int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }
    double signed_log(double lo, double hi) { return (coin() ? 1.0 : -1.0) * log_uniform(lo, hi); }

    std::mt19937_64 rng_;
};

struct AngleLemmaReport {
    std::size_t samples = 0;
    double max_ratio = 0;    // max theta / (C * rhs)
    double max_theta_over_rhs = 0;
    AngleSample worst;
};

/// Max over `n` seeded samples of theta / (C * rhs). A value <= 1 means the
/// angle estimate held with constant C on every sample.
inline AngleLemmaReport sample_angle_lemma(std::size_t n, const AngleWeights& w, double constant,
                                           std::uint64_t seed) {
    if (n == 0) throw DomainError("sample count must be positive");
    if (!(constant > 0)) throw DomainError("constant must be positive");
    for (double v : {w.a, w.b, w.c}) {
        if (v < 0 || v > 0.5) throw DomainError("angle weights must lie in [0,1/2]");
    }
    AngleSampler sampler(seed);
    AngleLemmaReport rep;
    rep.samples = n;
    for (std::size_t i = 0; i < n; ++i) {
        AngleSample x = sampler.next();
        AngleEvaluation ev = evaluate_angle_estimate(x, w);
        double r = ev.theta / ev.rhs;
        if (r > rep.max_theta_over_rhs) {
            rep.max_theta_over_rhs = r;
            rep.worst = x;
        }
    }
    rep.max_ratio = rep.max_theta_over_rhs / constant;
    return rep;
}

struct NullFormKernelReport {
    std::size_t samples = 0;
    double max_deviation = 0; // max | ||P_{-s2}(zeta) P_{s1}(eta)|| - sin(theta/2) |
    double max_ratio = 0;     // max symbol_bound_ratio
    double max_identity_error = 0; // max | ||P_{s2} beta P_{s1}|| - ||P_{-s2} P_{s1}|| |
    double max_bound_excess = 0;   // max ||P_{s2} beta P_{s1}|| - theta/2; the ratio bound in absolute form
};

/// Checks the closed form ||P_{-s2}(zeta) P_{s1}(eta)|| = sin(theta(s1 eta, s2 zeta)/2)
/// and the induced kernel bound on seeded frequency pairs.
inline NullFormKernelReport sample_nullform(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw DomainError("sample count must be positive");
    AngleSampler sampler(seed);
    NullFormKernelReport rep;
    rep.samples = n;
    rep.max_bound_excess = -1;
    for (std::size_t i = 0; i < n; ++i) {
        AngleSample x = sampler.next();
        const auto& eta = x.first.xi;
        const auto& zeta = x.second.xi;
        double theta = angle_between<double>(sign_value<double>(x.s1) * eta, sign_value<double>(x.s2) * zeta);
        double product = operator_norm<double>(dirac_projection(zeta, opposite(x.s2)) * dirac_projection(eta, x.s1));
        double kernel = operator_norm<double>(nullform_kernel(eta, zeta, x.s1, x.s2));
        rep.max_deviation = std::max(rep.max_deviation, std::abs(product - std::sin(theta / 2)));
        rep.max_identity_error = std::max(rep.max_identity_error, std::abs(kernel - product));
        rep.max_ratio = std::max(rep.max_ratio, symbol_bound_ratio(eta, zeta, x.s1, x.s2));
        rep.max_bound_excess = std::max(rep.max_bound_excess, kernel - theta / 2);
    }
    return rep;
}

struct ComparabilityReport {
    std::size_t samples = 0;
    double max_ratio = 0;      // max of <tau +- |xi|> / <tau +- <xi>_m> and its reciprocal
    double max_oracle_excess = 0; // max of ratio - (1 + |<xi>_m - |xi||); <= 0 when the oracle holds
    std::size_t violations = 0;   // samples with ratio > 1 + m
};

/// Comparability of <tau +- |xi|> and <tau +- <xi>_m> on seeded samples.
inline ComparabilityReport weight_comparability(double mass, std::size_t n, std::uint64_t seed) {
    if (mass < 0) throw DomainError("mass must be nonnegative");
    if (n == 0) throw DomainError("sample count must be positive");
    std::mt19937_64 rng(seed);
    auto uniform = [&](double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); };
    auto log_uniform = [&](double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); };
    auto coin = [&] { return std::uniform_int_distribution<int>(0, 1)(rng) == 1; };

    ComparabilityReport rep;
    rep.samples = n;
    for (std::size_t i = 0; i < n; ++i) {
        double r = log_uniform(1e-3, 1e6);
        double sign = coin() ? 1.0 : -1.0;
        double km = std::hypot(mass, r);
        double tau = 0;
        switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
        case 0: tau = (coin() ? 1 : -1) * log_uniform(1e-3, 1e7); break;
        case 1: tau = -sign * r + (coin() ? 1 : -1) * log_uniform(1e-4, 1e2); break;
        default: tau = -sign * km + (coin() ? 1 : -1) * log_uniform(1e-4, 1e2); break;
        }
        double wave = japanese(tau + sign * r);
        double kg = japanese(tau + sign * km);
        double ratio = std::max(wave / kg, kg / wave);
        rep.max_ratio = std::max(rep.max_ratio, ratio);
        double oracle = 1 + std::abs(km - r);
        rep.max_oracle_excess = i == 0 ? ratio - oracle : std::max(rep.max_oracle_excess, ratio - oracle);
        if (ratio > 1 + mass) ++rep.violations;
    }
    return rep;
}

} // namespace xsb::numeric
