#pragma once

#include "l1approx/detail/constants.hpp"
#include "l1approx/kernels.hpp"
#include "l1approx/trig_poly.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace l1approx {

struct PoleResidue {
    cplx pole;
    cplx residue;
};

/// Rational description of an analytic tail: simple poles off the origin plus
/// an optional principal part at the origin given as coefficients of 1/(iz)^m
/// (origin_laurent[m-1] multiplies 1/(iz)^m).
struct RationalTail {
    std::vector<PoleResidue> poles{};
    std::vector<cplx> origin_laurent{};
};

using cplxl = std::complex<long double>;

/// High-frequency continuation of a kernel spectrum: g is analytic on
/// |z| > N, vanishes at infinity, and matches fourier_coef(k) for |k| >= N+1.
/// g works in extended precision: the contour integrand grows like
/// (N+1/2)^m, so double-precision samples would drown c_m for large m.
struct AnalyticTail {
    int N = 0;
    std::function<cplxl(cplxl)> g;
    std::optional<RationalTail> rational{};
};

struct LaurentResult {
    std::vector<double> coeffs;          // c_1..c_m_max
    std::vector<double> err_estimates;
};

namespace detail {

inline constexpr long double pi_l = 3.14159265358979323846264338327950288L;

/// c_m = rho^m i^m (1/M) sum_j e^{i m t_j} g(zeta_j).  The spectral sum is
/// O(1) per term and accumulated with compensation before the rho^m scaling,
/// so roundoff amplified by rho^m stays near extended-precision eps; the
/// harmonic factor comes from sincos per (m, j) rather than a power chain.
inline std::vector<cplx> contour_coeffs(const AnalyticTail& tail, int m_max, int samples) {
    const long double rho = tail.N + 0.5L;
    std::vector<cplxl> g_at(samples);
    for (int j = 0; j < samples; ++j)
        g_at[j] = tail.g(std::polar(rho, 2.0L * pi_l * j / samples));

    std::vector<cplx> c(m_max + 1);
    long double rho_m = 1.0L;
    for (int m = 1; m <= m_max; ++m) {
        rho_m *= rho;
        long double sr = 0.0L, si = 0.0L, cr = 0.0L, ci = 0.0L;   // Kahan pairs
        for (int j = 0; j < samples; ++j) {
            const long double t = 2.0L * pi_l * static_cast<long double>(m) * j / samples;
            const long double e_re = std::cos(t), e_im = std::sin(t);
            const long double term_re = e_re * g_at[j].real() - e_im * g_at[j].imag();
            const long double term_im = e_re * g_at[j].imag() + e_im * g_at[j].real();
            long double y = term_re - cr, v = sr + y;
            cr = (v - sr) - y;
            sr = v;
            y = term_im - ci;
            v = si + y;
            ci = (v - si) - y;
            si = v;
        }
        cplxl s(sr / samples, si / samples);
        s *= rho_m;
        switch (m % 4) {   // exact lattice power i^m
        case 1: s = cplxl(-s.imag(), s.real()); break;
        case 2: s = -s; break;
        case 3: s = cplxl(s.imag(), -s.real()); break;
        default: break;
        }
        c[m] = cplx(static_cast<double>(s.real()), static_cast<double>(s.imag()));
    }
    return c;
}

inline double max_abs_on_contour(const AnalyticTail& tail, int samples = 1024) {
    const long double rho = tail.N + 0.5L;
    double m = 0.0;
    for (int j = 0; j < samples; ++j) {
        const long double t = static_cast<long double>(two_pi) * j / samples;
        m = std::max(m, static_cast<double>(std::abs(tail.g(std::polar(rho, t)))));
    }
    return m;
}

} // namespace detail

/// Laurent coefficients c_m = (1/2pi i) oint (i zeta)^m g(zeta) dzeta/zeta on
/// the circle |zeta| = N + 1/2, by the trapezoid rule (spectrally accurate
/// for g analytic in a neighbourhood of the contour).  Error estimates come
/// from grid doubling; estimates that stop shrinking flag a g that is not
/// analytic on the contour.
inline LaurentResult laurent_coeffs(const AnalyticTail& tail, int m_max, int samples) {
    if (m_max < 1) throw std::invalid_argument("laurent_coeffs: m_max must be >= 1");
    if (samples < 256 || !detail::is_pow2(samples))
        throw std::invalid_argument("laurent_coeffs: samples must be a power of two, at least 256");

    const std::vector<cplx> c4 = detail::contour_coeffs(tail, m_max, samples / 4);
    const std::vector<cplx> c2 = detail::contour_coeffs(tail, m_max, samples / 2);
    const std::vector<cplx> c1 = detail::contour_coeffs(tail, m_max, samples);

    double scale = 1.0, err = 0.0, prev = 0.0;
    bool finite = true;
    for (int m = 1; m <= m_max; ++m) {
        finite = finite && std::isfinite(c1[m].real()) && std::isfinite(c1[m].imag()) &&
                 std::isfinite(c2[m].real()) && std::isfinite(c2[m].imag());
        scale = std::max(scale, std::abs(c1[m]));
        err = std::max(err, std::abs(c1[m] - c2[m]));
        prev = std::max(prev, std::abs(c2[m] - c4[m]));
    }
    // Roundoff floor: the integrand reaches (N+1/2)^m_max * max|g|, and the
    // doubling estimate bottoms out at extended-precision noise of that size.
    const double mg = detail::max_abs_on_contour(tail, 256);
    const double noise = 1e-15 * std::pow(tail.N + 0.5, m_max) * std::max(1.0, mg);
    if (!finite || (err > std::max(0.5 * prev, noise)))
        throw std::runtime_error("laurent_coeffs: estimates not shrinking under grid doubling "
                                 "(g not analytic on the contour?)");

    LaurentResult out;
    out.coeffs.resize(m_max);
    out.err_estimates.resize(m_max);
    for (int m = 1; m <= m_max; ++m) {
        if (std::abs(c1[m].imag()) > std::max(1e-9 * scale, 16.0 * noise))
            throw std::runtime_error("laurent_coeffs: non-real coefficient (tail not conjugate-symmetric)");
        out.coeffs[m - 1] = c1[m].real();
        out.err_estimates[m - 1] = std::abs(c1[m] - c2[m]) + noise;
    }
    return out;
}

/// Exact c_m from the rational form: each simple pole p with residue rho of g
/// contributes (ip)^m rho / p, and an origin principal part a_m/(iz)^m
/// contributes a_m to c_m alone.
inline std::vector<double> residue_coeffs(const AnalyticTail& tail, int m_max) {
    if (!tail.rational) throw std::invalid_argument("residue_coeffs: rational form not supplied");
    if (m_max < 1) throw std::invalid_argument("residue_coeffs: m_max must be >= 1");
    const double rho_contour = tail.N + 0.5;
    for (const PoleResidue& pr : tail.rational->poles) {
        if (std::abs(pr.pole) >= rho_contour - 1e-9)
            throw std::invalid_argument("residue_coeffs: pole on or outside the contour");
    }
    std::vector<double> c(m_max, 0.0);
    std::vector<cplx> power(tail.rational->poles.size(), cplx(1.0));
    for (int m = 1; m <= m_max; ++m) {
        cplx acc(0.0);
        for (std::size_t i = 0; i < power.size(); ++i) {
            const PoleResidue& pr = tail.rational->poles[i];
            power[i] *= cplx(0.0, 1.0) * pr.pole;   // running (i p)^m, exact for lattice poles
            acc += power[i] * pr.residue / pr.pole;
        }
        if (static_cast<std::size_t>(m) <= tail.rational->origin_laurent.size())
            acc += tail.rational->origin_laurent[m - 1];
        if (std::abs(acc.imag()) > 1e-12 * std::max(1.0, std::abs(acc)))
            throw std::runtime_error("residue_coeffs: non-real coefficient");
        c[m - 1] = acc.real();
    }
    return c;
}

/// Truncated expansion K = T_N + sum_m c_m (B_m - S_N(B_m, .)).
struct BernoulliSeriesRep {
    TrigPoly t_n;
    int N = 0;
    std::vector<double> coeffs;   // c_1..c_R
    double tail_bound = 0.0;
};

/// N-th Fourier partial sum of the Bernoulli kernel:
/// S_N(B_m, theta) = 2 sum_{k=1..N} cos(k theta - pi m / 2) / k^m.
inline double bernoulli_partial_sum(int m, int N, double theta) {
    if (m < 1) throw std::invalid_argument("bernoulli_partial_sum: order must be >= 1");
    double s = 0.0;
    const double phase = detail::pi * m / 2.0;
    for (int k = 1; k <= N; ++k) s += std::cos(k * theta - phase) / std::pow(static_cast<double>(k), m);
    return 2.0 * s;
}

/// Assemble the representation for a kernel whose tail continuation is given:
/// T_N from the kernel spectrum, c_m exact from residues when available and
/// from the contour otherwise.  tail_bound uses |c_m| <= M_g (N+1/2)^m and
/// the uniform estimate |B_m - S_N(B_m)| <= 6 (N+1)^{-m}.
inline BernoulliSeriesRep make_rep(const KernelSpec& kernel, const AnalyticTail& tail, int truncation,
                                   int samples = 4096) {
    if (truncation < 1 || truncation > detail::max_bernoulli_order)
        throw std::invalid_argument("make_rep: truncation out of range");
    BernoulliSeriesRep rep;
    rep.N = tail.N;
    rep.t_n = TrigPoly(tail.N);
    for (long k = -tail.N; k <= tail.N; ++k) rep.t_n.set_coeff(k, kernel.fourier_coef(k));
    rep.coeffs = tail.rational ? residue_coeffs(tail, truncation) : laurent_coeffs(tail, truncation, samples).coeffs;
    const double mg = detail::max_abs_on_contour(tail);
    const double ratio = (tail.N + 0.5) / (tail.N + 1.0);
    rep.tail_bound = 6.0 * mg * std::pow(ratio, truncation + 1) / (1.0 - ratio);
    return rep;
}

namespace detail {

inline double reconstruct_value(const BernoulliSeriesRep& rep, double theta) {
    double v = eval_trig(rep.t_n, theta);
    for (std::size_t m = 1; m <= rep.coeffs.size(); ++m) {
        const double c = rep.coeffs[m - 1];
        if (c == 0.0) continue;
        v += c * (bernoulli_eval(static_cast<int>(m), theta) -
                  bernoulli_partial_sum(static_cast<int>(m), rep.N, theta));
    }
    return v;
}

} // namespace detail

/// Evaluate the truncated representation; requires the stored tail bound to
/// be below tol.  Pointwise agreement with the kernel holds away from the
/// sawtooth jump when c_1 is active.
inline double reconstruct(const BernoulliSeriesRep& rep, double theta, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("reconstruct: tol must be positive");
    if (rep.tail_bound > tol)
        throw std::invalid_argument("reconstruct: truncation tail bound exceeds requested tolerance");
    return detail::reconstruct_value(rep, theta);
}

/// Canonical analytic tails of the two quasi kernels (N = 1, poles at +/-1).
inline AnalyticTail quasi_tail(QuasiKind which) {
    AnalyticTail tail;
    tail.N = 1;
    if (which == QuasiKind::k1) {
        tail.g = [](cplxl z) { return z / (cplxl(0.0L, 1.0L) * (z * z - 1.0L)); };
        tail.rational = RationalTail{{{cplx(1.0), cplx(0.0, -0.5)}, {cplx(-1.0), cplx(0.0, -0.5)}}, {}};
    } else {
        tail.g = [](cplxl z) { return -1.0L / (z * z - 1.0L); };
        tail.rational = RationalTail{{{cplx(1.0), cplx(-0.5)}, {cplx(-1.0), cplx(0.5)}}, {}};
    }
    return tail;
}

struct GoldenCheck {
    double max_grid_error = 0.0;
    double max_coef_error = 0.0;
};

/// Cross-validates the Bernoulli-series expansion of a quasi kernel against
/// its direct evaluation on a grid (excluding a one-cell neighbourhood of the
/// jump) and checks the spectrum identity sum_m c_m/(ik)^m = khat(k) for
/// N < |k| <= 64.
inline GoldenCheck golden_formula_check(QuasiKind which, int grid, int truncation) {
    if (grid < 16) throw std::invalid_argument("golden_formula_check: grid too small");
    const KernelSpec kernel = (which == QuasiKind::k1) ? KernelSpec::quasi_k1() : KernelSpec::quasi_k2();
    const AnalyticTail tail = quasi_tail(which);
    const BernoulliSeriesRep rep = make_rep(kernel, tail, truncation);

    GoldenCheck out;
    for (int j = 1; j < grid; ++j) {
        const double theta = detail::two_pi * j / grid;
        const double err = std::abs(quasi_eval(which, theta) - detail::reconstruct_value(rep, theta));
        out.max_grid_error = std::max(out.max_grid_error, err);
    }
    for (long k = -64; k <= 64; ++k) {
        if (k == 0) continue;
        cplx recon;
        if (std::labs(k) <= tail.N) {
            recon = rep.t_n.coeff(k);
        } else {
            const cplx ik(0.0, static_cast<double>(k));
            cplx p(1.0);
            for (std::size_t m = 1; m <= rep.coeffs.size(); ++m) {
                p /= ik;
                recon += rep.coeffs[m - 1] * p;
            }
        }
        out.max_coef_error = std::max(out.max_coef_error, std::abs(recon - kernel.fourier_coef(k)));
    }
    return out;
}

} // namespace l1approx
