#pragma once

#include "l1approx/best_l1.hpp"
#include "l1approx/detail/constants.hpp"
#include "l1approx/fourier.hpp"
#include "l1approx/kernels.hpp"
#include "l1approx/periodic_fn.hpp"
#include "l1approx/trig_poly.hpp"

#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace l1approx {

/// Lipschitz function on [-1, 1] with its a.e. derivative.  At a kink the
/// derivative callback should return the midpoint of its one-sided limits.
/// The optional closed forms (spectrum of h(theta) = -f'(cos theta), and the
/// mean of f(cos theta)) remove all quadrature error for kinky functions
/// whose kink preimages cannot sit on a power-of-two grid.
struct LipFunction {
    std::string name;
    std::function<double(double)> f;
    std::function<double(double)> df;
    double lip_bound = 1.0;
    std::vector<double> kinks_x{};
    std::function<cplx(long)> h_coef{};
    std::optional<double> g_mean{};
};

/// Algebraic polynomial in the Chebyshev-T basis on [-1, 1].
struct ChebyPoly {
    std::vector<double> a;   // a_0..a_degree

    int degree() const { return static_cast<int>(a.size()) - 1; }

    double eval(double x) const {
        if (a.empty()) return 0.0;
        double b1 = 0.0, b2 = 0.0;
        for (int k = static_cast<int>(a.size()) - 1; k >= 1; --k) {
            const double t = 2.0 * x * b1 - b2 + a[static_cast<std::size_t>(k)];
            b2 = b1;
            b1 = t;
        }
        return x * b1 - b2 + a[0];
    }
};

struct PeriodicPair {
    PeriodicFn g;
    PeriodicFn h;
};

/// Substitution x = cos theta: g(theta) = f(cos theta) is even and 2pi
/// periodic, and g'(theta) = h(theta) sin theta with h(theta) = -f'(cos theta).
inline PeriodicPair to_periodic(const LipFunction& lip) {
    PeriodicPair out;
    out.g.eval = [f = lip.f](double theta) { return f(std::cos(theta)); };
    // cos(theta) lands within one ulp of a kink abscissa, never exactly on
    // it; snap so the derivative callback sees the kink and can return its
    // midpoint value.
    out.h.eval = [df = lip.df, kinks = lip.kinks_x](double theta) {
        double x = std::cos(theta);
        for (double k : kinks) {
            if (std::abs(x - k) < 1e-14) {
                x = k;
                break;
            }
        }
        return -df(x);
    };
    for (double x : lip.kinks_x) {
        const double theta0 = std::acos(std::clamp(x, -1.0, 1.0));
        out.g.kinks.push_back(theta0);
        out.g.kinks.push_back(detail::two_pi - theta0);
        out.h.jumps.push_back(theta0);
        out.h.jumps.push_back(detail::two_pi - theta0);
    }
    if (lip.h_coef) out.h.coef = lip.h_coef;
    return out;
}

struct Factors {
    double t;   // weight of sqrt(1 - x^2)
    double s;   // weight of |x|
};

/// Pointwise weight factors tan(pi/2n) and sec(pi/2n) - 1.
inline Factors factors(int n) {
    if (n < 2) throw std::invalid_argument("factors: n must be >= 2");
    const double x = detail::pi / (2.0 * n);
    return {std::tan(x), 1.0 / std::cos(x) - 1.0};
}

/// Degree-n Chebyshev-basis polynomial built from the convolution of h with
/// the two quasi-kernel best polynomials:
///   t_n(theta) = (h * tau_{n-1}(K1)) sin theta - (h * tau_{n-1}(K2)) cos theta + mean(g).
/// The result must come out even; a non-negligible odd part indicates a
/// construction bug and is rejected.
inline ChebyPoly build_polynomial(const LipFunction& lip, int n, int samples) {
    if (n < 2) throw std::invalid_argument("build_polynomial: n must be >= 2");
    if (!detail::is_pow2(samples) || samples < 8 * n)
        throw std::invalid_argument("build_polynomial: samples must be a power of two, at least 8n");

    PeriodicPair per = to_periodic(lip);

    CoeffMap hc;
    if (per.h.has_coef()) {
        for (long k = -n; k <= n; ++k) hc[k] = per.h.coef(k);
    } else {
        // Best effort for quadrature-only inputs: drop jump markers that are
        // off-grid rather than refuse (accuracy degrades accordingly).
        PeriodicFn hq = per.h;
        const double step = detail::two_pi / samples;
        std::erase_if(hq.jumps, [step](double q) { return std::abs(std::remainder(q, step)) > 1e-9; });
        hc = fourier_coeffs(hq, n, samples);
    }

    const TrigPoly tau1 = best_poly_candidate(KernelSpec::quasi_k1(), n);
    const TrigPoly tau2 = best_poly_candidate(KernelSpec::quasi_k2(), n);
    TrigPoly conv1(n - 1), conv2(n - 1);
    for (long k = -(n - 1); k <= n - 1; ++k) {
        conv1.set_coeff(k, hc.at(k) * tau1.coeff(k));
        conv2.set_coeff(k, hc.at(k) * tau2.coeff(k));
    }

    TrigPoly t = mul_sin(conv1);
    t -= mul_cos(conv2);

    double g0;
    if (lip.g_mean) {
        g0 = *lip.g_mean;
    } else {
        double s = 0.0;
        const double step = detail::two_pi / samples;
        for (int j = 0; j < samples; ++j) s += per.g.eval(j * step);
        g0 = s / samples;
    }
    t.add_coeff(0, g0);

    const double scale = std::max(1.0, t.coeff_abs_sum());
    for (long k = 0; k <= t.degree(); ++k) {
        const cplx even_part = 0.5 * (t.coeff(k) + t.coeff(-k));
        const cplx odd_part = 0.5 * (t.coeff(k) - t.coeff(-k));
        if (std::abs(odd_part) > 1e-10 * scale || std::abs(even_part.imag()) > 1e-10 * scale)
            throw std::runtime_error("build_polynomial: non-negligible odd part (even symmetry violated)");
    }

    ChebyPoly p;
    p.a.resize(static_cast<std::size_t>(n) + 1, 0.0);
    p.a[0] = t.coeff(0).real();
    for (long k = 1; k <= n; ++k) p.a[static_cast<std::size_t>(k)] = 2.0 * t.coeff(k).real();
    return p;
}

struct BoundReport {
    double max_slack;
    double max_ratio;
};

/// Checks |f - P| <= T(n) sqrt(1-x^2) + S(n) |x| on a Chebyshev-distributed
/// grid x_j = cos(pi j / grid).  max_slack is the largest violation (negative
/// when the bound holds with margin); max_ratio diagnoses sharpness.
inline BoundReport verify_bound(const LipFunction& lip, const ChebyPoly& p, int n, int grid) {
    if (grid < 8) throw std::invalid_argument("verify_bound: grid too small");
    const Factors w = factors(n);
    double max_slack = -1e300, max_ratio = 0.0;
    for (int j = 0; j <= grid; ++j) {
        const double theta = detail::pi * j / grid;
        const double x = std::cos(theta);
        const double err = std::abs(lip.f(x) - p.eval(x));
        const double bound = w.t * std::abs(std::sin(theta)) + w.s * std::abs(x);
        max_slack = std::max(max_slack, err - bound);
        if (bound > 1e-12) max_ratio = std::max(max_ratio, err / bound);
    }
    return {max_slack, max_ratio};
}

// ---------------------------------------------------------------------------
// Built-in test functions.

inline LipFunction lip_const(double c) {
    LipFunction lip;
    lip.name = "const";
    lip.f = [c](double) { return c; };
    lip.df = [](double) { return 0.0; };
    lip.lip_bound = 0.0;
    lip.h_coef = [](long) { return cplx(0.0); };
    lip.g_mean = c;
    return lip;
}

inline LipFunction lip_linear() {
    LipFunction lip;
    lip.name = "linear";
    lip.f = [](double x) { return x; };
    lip.df = [](double) { return 1.0; };
    lip.lip_bound = 1.0;
    lip.h_coef = [](long k) { return k == 0 ? cplx(-1.0) : cplx(0.0); };
    lip.g_mean = 0.0;
    return lip;
}

/// |x - a| for |a| < 1.  h(theta) = -sgn(cos theta - a) is a two-level square
/// wave with jumps at theta0 = arccos(a); both its spectrum and the mean of
/// |cos theta - a| have elementary closed forms.
inline LipFunction lip_abs_shifted(double a) {
    if (!(std::abs(a) < 1.0)) throw std::invalid_argument("lip_abs_shifted: need |a| < 1");
    LipFunction lip;
    lip.name = (a == 0.0) ? "abs" : "abs_shifted(" + std::to_string(a) + ")";
    lip.f = [a](double x) { return std::abs(x - a); };
    lip.df = [a](double x) { return static_cast<double>(detail::sign_of(x - a)); };
    lip.lip_bound = 1.0;
    lip.kinks_x = {a};
    const double theta0 = std::acos(a);
    lip.h_coef = [theta0, a](long k) {
        if (k == 0) return cplx(1.0 - 2.0 * theta0 / detail::pi);
        return cplx(-2.0 * std::sin(k * theta0) / (detail::pi * static_cast<double>(k)));
    };
    lip.g_mean = (2.0 * std::sin(theta0) + a * (detail::pi - 2.0 * theta0)) / detail::pi;
    return lip;
}

inline LipFunction lip_abs() { return lip_abs_shifted(0.0); }

inline LipFunction lip_smooth_sin() {
    LipFunction lip;
    lip.name = "smooth_sin";
    lip.f = [](double x) { return std::sin(x); };
    lip.df = [](double x) { return std::cos(x); };
    lip.lip_bound = 1.0;
    return lip;
}

} // namespace l1approx
