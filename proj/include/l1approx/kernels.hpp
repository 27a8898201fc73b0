#pragma once

#include "l1approx/detail/constants.hpp"
#include "l1approx/detail/zigzag.hpp"
#include "l1approx/periodic_fn.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace l1approx {

enum class Parity { odd, even, none };
enum class QuasiKind { k1, k2 };

namespace detail {

inline constexpr int max_bernoulli_order = 96;

/// Coefficients of the periodic Bernoulli kernel as a plain polynomial in
/// theta on [0, 2pi): row r holds c_0..c_r with
/// c_j = -(2pi)^{r-j} B_{r-j} / (j! (r-j)!).
inline const std::vector<std::vector<double>>& bernoulli_theta_coeffs() {
    static const std::vector<std::vector<double>> table = [] {
        std::vector<double> fact(max_bernoulli_order + 1);
        fact[0] = 1.0;
        for (int i = 1; i <= max_bernoulli_order; ++i) fact[i] = fact[i - 1] * i;
        std::vector<std::vector<double>> t(max_bernoulli_order + 1);
        for (int r = 1; r <= max_bernoulli_order; ++r) {
            t[r].resize(r + 1);
            for (int j = 0; j <= r; ++j)
                t[r][j] = -std::pow(two_pi, r - j) * bernoulli_number(r - j) / (fact[j] * fact[r - j]);
        }
        return t;
    }();
    return table;
}

inline double binomial(int n, int k) {
    double b = 1.0;
    for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

} // namespace detail

/// Fourier coefficient of the Bernoulli kernel of order r: 1/(ik)^r, zero at k = 0.
inline cplx bernoulli_coef(int r, long k) {
    if (r < 1) throw std::invalid_argument("bernoulli_coef: order must be >= 1");
    if (k == 0) return {};
    const cplx ik(0.0, static_cast<double>(k));
    return 1.0 / std::pow(ik, r);
}

/// Pointwise Bernoulli kernel value.  Order 1 is the sawtooth pi - theta on
/// (0, 2pi) with midpoint value 0 at the jump; higher orders use the exact
/// closed-form polynomial on the period, so `tol` is only validated.
inline double bernoulli_eval(int r, double theta, double tol = 1e-12) {
    if (r < 1 || r > detail::max_bernoulli_order)
        throw std::invalid_argument("bernoulli_eval: order out of supported range");
    if (!(tol > 0.0)) throw std::invalid_argument("bernoulli_eval: tol must be positive");
    const double t = detail::reduce_two_pi(theta);
    if (r == 1) return t == 0.0 ? 0.0 : detail::pi - t;
    const std::vector<double>& c = detail::bernoulli_theta_coeffs()[r];
    double acc = 0.0;
    for (int j = r; j >= 0; --j) acc = acc * t + c[j];
    return acc;
}

/// Fourier coefficients of the quasi-Bernoulli kernels: the degree-one factor
/// shifts the sawtooth spectrum, giving k/((k^2-1)i) resp. -1/(k^2-1) away
/// from |k| = 1.
inline cplx quasi_coef(QuasiKind which, long k) {
    const long a = std::labs(k);
    if (which == QuasiKind::k1) {
        if (k == 0) return {};
        if (a == 1) return cplx(0.0, k > 0 ? -0.25 : 0.25);
        const double kk = static_cast<double>(k);
        return cplx(0.0, -kk / (kk * kk - 1.0));
    }
    if (k == 0) return cplx(1.0);
    if (a == 1) return cplx(0.25);
    const double kk = static_cast<double>(k);
    return cplx(-1.0 / (kk * kk - 1.0));
}

inline double quasi_eval(QuasiKind which, double theta) {
    const double b1 = bernoulli_eval(1, theta);
    return which == QuasiKind::k1 ? b1 * std::cos(theta) : b1 * std::sin(theta);
}

/// sinc-power Fourier coefficient of the m-fold Steklov kernel.
inline double steklov_coef(int m, double h, long k) {
    if (m < 1) throw std::invalid_argument("steklov_coef: m must be >= 1");
    if (!(h > 0.0) || h > 1.0) throw std::invalid_argument("steklov_coef: need 0 < h <= 1");
    if (k == 0) return 1.0;
    const double x = detail::pi * h * static_cast<double>(k);
    return std::pow(std::sin(x) / x, m);
}

/// Steklov kernel via the central-difference Bernoulli representation
/// 1 + (2 pi h)^{-m} sum_p (-1)^{m-p} C(m,p) B_m(theta + (2p-m) pi h).
inline double steklov_eval(int m, double h, double theta, double tol = 1e-12) {
    if (m < 1 || m > detail::max_bernoulli_order) throw std::invalid_argument("steklov_eval: m out of range");
    if (!(h > 0.0) || h > 1.0) throw std::invalid_argument("steklov_eval: need 0 < h <= 1");
    if (m * h >= 1.0) throw std::invalid_argument("steklov_eval: support would wrap (m*h >= 1)");
    const double term_tol = tol / std::pow(2.0, m);
    double sum = 0.0;
    for (int p = 0; p <= m; ++p) {
        const double shift = (2.0 * p - m) * detail::pi * h;
        const double sgn = ((m - p) % 2 == 0) ? 1.0 : -1.0;
        sum += sgn * detail::binomial(m, p) * bernoulli_eval(m, theta + shift, term_tol);
    }
    return 1.0 + sum / std::pow(2.0 * detail::pi * h, m);
}

/// A kernel bundled with its closed-form spectrum, evaluator, parity and
/// singular points.
class KernelSpec {
  public:
    enum class Kind { bernoulli, quasi_k1, quasi_k2, steklov };

    static KernelSpec bernoulli(int r) {
        if (r < 1 || r > detail::max_bernoulli_order)
            throw std::invalid_argument("KernelSpec::bernoulli: order out of range");
        KernelSpec k;
        k.kind_ = Kind::bernoulli;
        k.r_ = r;
        return k;
    }
    static KernelSpec quasi_k1() {
        KernelSpec k;
        k.kind_ = Kind::quasi_k1;
        return k;
    }
    static KernelSpec quasi_k2() {
        KernelSpec k;
        k.kind_ = Kind::quasi_k2;
        return k;
    }
    static KernelSpec steklov(int m, double h) {
        if (m < 1) throw std::invalid_argument("KernelSpec::steklov: m must be >= 1");
        if (!(h > 0.0) || h > 1.0) throw std::invalid_argument("KernelSpec::steklov: need 0 < h <= 1");
        if (m * h >= 1.0) throw std::invalid_argument("KernelSpec::steklov: support would wrap (m*h >= 1)");
        KernelSpec k;
        k.kind_ = Kind::steklov;
        k.m_ = m;
        k.h_ = h;
        return k;
    }

    Kind kind() const { return kind_; }
    int order() const { return r_; }
    int steklov_m() const { return m_; }
    double steklov_h() const { return h_; }

    Parity parity() const {
        switch (kind_) {
        case Kind::bernoulli: return (r_ % 2) ? Parity::odd : Parity::even;
        case Kind::quasi_k1: return Parity::odd;
        case Kind::quasi_k2: return Parity::even;
        case Kind::steklov: return Parity::even;
        }
        return Parity::none;
    }

    cplx fourier_coef(long k) const {
        switch (kind_) {
        case Kind::bernoulli: return bernoulli_coef(r_, k);
        case Kind::quasi_k1: return quasi_coef(QuasiKind::k1, k);
        case Kind::quasi_k2: return quasi_coef(QuasiKind::k2, k);
        case Kind::steklov: return cplx(steklov_coef(m_, h_, k));
        }
        return {};
    }

    double eval(double theta, double tol = 1e-12) const {
        switch (kind_) {
        case Kind::bernoulli: return bernoulli_eval(r_, theta, tol);
        case Kind::quasi_k1: return quasi_eval(QuasiKind::k1, theta);
        case Kind::quasi_k2: return quasi_eval(QuasiKind::k2, theta);
        case Kind::steklov: return steklov_eval(m_, h_, theta, tol);
        }
        return 0.0;
    }

    std::vector<double> jump_points() const {
        if (kind_ == Kind::bernoulli && r_ == 1) return {0.0};
        if (kind_ == Kind::quasi_k1) return {0.0};
        return {};
    }

    /// Points of reduced smoothness; useful as quadrature breakpoints.
    std::vector<double> kink_points() const {
        switch (kind_) {
        case Kind::bernoulli: return r_ >= 2 ? std::vector<double>{0.0} : std::vector<double>{};
        case Kind::quasi_k1: return {};
        case Kind::quasi_k2: return {0.0};
        case Kind::steklov: {
            std::vector<double> knots;
            for (int p = 0; p <= m_; ++p) knots.push_back(detail::reduce_two_pi((2.0 * p - m_) * detail::pi * h_));
            return knots;
        }
        }
        return {};
    }

    std::string name() const {
        switch (kind_) {
        case Kind::bernoulli: return "B" + std::to_string(r_);
        case Kind::quasi_k1: return "K1";
        case Kind::quasi_k2: return "K2";
        case Kind::steklov:
            return "chi(m=" + std::to_string(m_) + ",h=" + std::to_string(h_) + ")";
        }
        return {};
    }

    PeriodicFn to_periodic(double tol = 1e-12) const {
        PeriodicFn f;
        KernelSpec self = *this;
        f.eval = [self, tol](double theta) { return self.eval(theta, tol); };
        f.coef = [self](long k) { return self.fourier_coef(k); };
        f.jumps = jump_points();
        f.kinks = kink_points();
        return f;
    }

  private:
    KernelSpec() = default;
    Kind kind_ = Kind::bernoulli;
    int r_ = 1;
    int m_ = 1;
    double h_ = 0.5;
};

} // namespace l1approx
