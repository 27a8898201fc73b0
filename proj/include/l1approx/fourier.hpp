#pragma once

#include "l1approx/detail/constants.hpp"
#include "l1approx/detail/gauss_legendre.hpp"
#include "l1approx/periodic_fn.hpp"
#include "l1approx/trig_poly.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>
#include <vector>

namespace l1approx {

using CoeffMap = std::map<long, cplx>;

/// Fourier coefficients (1/2pi) int f e^{-ik theta} for |k| <= max_k via the
/// trapezoid rule on a uniform grid of `samples` points.  Exact to roundoff
/// for trigonometric polynomials of degree < samples/2; O(samples^-2) for
/// piecewise-smooth f whose jumps sit on the grid with midpoint values.
inline CoeffMap fourier_coeffs(const PeriodicFn& f, int max_k, int samples) {
    if (max_k < 0) throw std::invalid_argument("fourier_coeffs: max_k must be nonnegative");
    if (!detail::is_pow2(samples) || samples < 8 * std::max(1, max_k))
        throw std::invalid_argument("fourier_coeffs: grid too small for requested frequencies (aliasing risk)");
    const double step = detail::two_pi / samples;
    for (double q : f.jumps) {
        if (std::abs(std::remainder(q, step)) > 1e-9)
            throw std::invalid_argument("fourier_coeffs: jump point off the sample grid");
    }

    std::vector<double> fv(samples);
    std::vector<cplx> w(samples), cur(samples, cplx(1.0, 0.0));
    for (int j = 0; j < samples; ++j) {
        fv[j] = f.eval(j * step);
        w[j] = std::polar(1.0, -(j * step));
    }

    CoeffMap out;
    for (int k = 0; k <= max_k; ++k) {
        std::complex<long double> acc(0.0L, 0.0L);
        for (int j = 0; j < samples; ++j) {
            const cplx t = fv[j] * cur[j];
            acc += std::complex<long double>(t.real(), t.imag());
            cur[j] *= w[j];
        }
        const cplx v(static_cast<double>(acc.real() / samples), static_cast<double>(acc.imag() / samples));
        out[k] = v;
        if (k > 0) out[-k] = std::conj(v);
    }
    return out;
}

struct L1Result {
    double value;
    double err_estimate;
};

namespace detail {

inline double bisect_sign_change(const std::function<double(double)>& f, double a, double b, double fa) {
    for (int it = 0; it < 60 && b - a > 1e-12; ++it) {
        const double mid = 0.5 * (a + b);
        const double fm = f(mid);
        if (!std::isfinite(fm)) throw std::runtime_error("l1_norm: non-finite integrand during refinement");
        if (fm == 0.0) return mid;
        if ((fa > 0.0) == (fm > 0.0)) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    if (b - a > 1e-12) throw std::runtime_error("l1_norm: sign-change refinement did not converge");
    return 0.5 * (a + b);
}

inline double integrate_panels(const std::function<double(double)>& f, double a, double b, int panels,
                               const GaussRule& rule) {
    double total = 0.0;
    const double plen = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * plen;
        const double mid = lo + 0.5 * plen;
        const double half = 0.5 * plen;
        double s = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * f(mid + half * rule.nodes[i]);
        total += s * half;
    }
    return total;
}

} // namespace detail

/// (1/2pi) int_0^{2pi} |f|.  Without refinement this is the midpoint-free
/// trapezoid sum of |f| on the base grid.  With refinement, sign changes of f
/// between adjacent samples are bisected to 1e-12, the circle is split at
/// those roots plus any listed jumps/kinks, and each smooth single-sign piece
/// is integrated by composite Gauss-Legendre.
inline L1Result l1_norm(const PeriodicFn& f, int base_grid, bool refine) {
    if (base_grid < (1 << 10)) throw std::invalid_argument("l1_norm: base grid must be at least 2^10");

    if (!refine) {
        auto rect = [&f](int m) {
            double s = 0.0;
            const double step = detail::two_pi / m;
            for (int j = 0; j < m; ++j) s += std::abs(f.eval(j * step));
            return s / m;
        };
        const double v = rect(base_grid);
        const double coarse = rect(base_grid / 2);
        return {v, std::abs(v - coarse) + 1e-15 * std::abs(v)};
    }

    const double step = detail::two_pi / base_grid;
    std::vector<double> breaks{0.0};
    for (double q : f.jumps) breaks.push_back(detail::reduce_two_pi(q));
    for (double q : f.kinks) breaks.push_back(detail::reduce_two_pi(q));

    std::vector<double> fv(base_grid + 1);
    for (int j = 0; j <= base_grid; ++j) fv[j] = f.eval(detail::reduce_two_pi(j * step));
    for (int j = 0; j < base_grid; ++j) {
        if (fv[j] == 0.0) {
            breaks.push_back(j * step);
        } else if ((fv[j] > 0.0) != (fv[j + 1] > 0.0) && fv[j + 1] != 0.0) {
            breaks.push_back(detail::bisect_sign_change(f.eval, j * step, (j + 1) * step, fv[j]));
        }
    }

    std::sort(breaks.begin(), breaks.end());
    std::vector<double> uniq;
    for (double b : breaks) {
        if (uniq.empty() || b - uniq.back() > 1e-10) uniq.push_back(b);
    }
    uniq.push_back(detail::two_pi);

    double total32 = 0.0, total16 = 0.0;
    for (std::size_t i = 0; i + 1 < uniq.size(); ++i) {
        const double a = uniq[i], b = uniq[i + 1];
        if (b - a < 1e-13) continue;
        const int panels = std::max(1, static_cast<int>(std::ceil((b - a) / (8.0 * step))));
        total32 += std::abs(detail::integrate_panels(f.eval, a, b, panels, detail::gauss_legendre_32()));
        total16 += std::abs(detail::integrate_panels(f.eval, a, b, panels, detail::gauss_legendre_16()));
    }
    const double value = total32 / detail::two_pi;
    const double err = std::abs(total32 - total16) / detail::two_pi + 1e-15 * std::abs(value);
    return {value, err};
}

/// Convolution of a bounded function with a trigonometric polynomial:
/// coefficient-wise product hhat(k) * phat(k).  Uses the closed-form
/// coefficients of h when present, otherwise trapezoid quadrature.
inline TrigPoly convolve_poly(const PeriodicFn& h, const TrigPoly& p, int samples = 0) {
    const int d = p.degree();
    TrigPoly out(d);
    if (h.has_coef()) {
        for (long k = -d; k <= d; ++k) out.set_coeff(k, h.coef(k) * p.coeff(k));
        return out;
    }
    if (samples == 0) samples = static_cast<int>(detail::next_pow2(std::max(4096L, 8L * d)));
    const CoeffMap hc = fourier_coeffs(h, d, samples);
    for (long k = -d; k <= d; ++k) out.set_coeff(k, hc.at(k) * p.coeff(k));
    return out;
}

} // namespace l1approx
