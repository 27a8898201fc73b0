#pragma once

#include "l1approx/detail/constants.hpp"
#include "l1approx/detail/odd_series.hpp"
#include "l1approx/favard.hpp"
#include "l1approx/fourier.hpp"
#include "l1approx/kernels.hpp"
#include "l1approx/trig_poly.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

namespace l1approx {

enum class PatternKind { sin_n, cos_n };

/// Extremal dual test function sgn sin(n theta) or sgn cos(n theta): unit
/// sup-norm, spectrum supported on odd multiples of n, hence annihilating
/// every trigonometric polynomial of degree <= n-1.
struct SignPattern {
    PatternKind kind = PatternKind::sin_n;
    int n = 1;
    bool flipped = false;

    static SignPattern sin_pattern(int n) { return {PatternKind::sin_n, n, false}; }
    static SignPattern cos_pattern(int n, bool flipped = false) { return {PatternKind::cos_n, n, flipped}; }

    double eval(double theta) const {
        const double v = (kind == PatternKind::sin_n) ? std::sin(n * theta) : std::cos(n * theta);
        const double s = static_cast<double>(detail::sign_of(v));
        return flipped ? -s : s;
    }

    /// Fourier coefficient at integer frequency `freq`: (2/pi)/(ik) at
    /// freq = kn for odd k (sine), (2/pi)(-1)^((k-1)/2)/k (cosine).
    cplx coef(long freq) const {
        if (freq % n != 0) return {};
        const long k = freq / n;
        if (k % 2 == 0) return {};
        cplx v;
        if (kind == PatternKind::sin_n) {
            v = (2.0 / detail::pi) / cplx(0.0, static_cast<double>(k));
        } else {
            v = cplx((2.0 / detail::pi) * detail::alt4(k) / static_cast<double>(k));
        }
        return flipped ? -v : v;
    }
};

/// Two-sided enclosure of a best-approximation value: `lower` from duality,
/// `upper` from an explicit candidate polynomial.
struct Certificate {
    KernelSpec kernel = KernelSpec::bernoulli(1);
    int n = 2;
    double lower = 0.0;
    double upper = 0.0;
    double gap = 0.0;
    TrigPoly candidate;
    std::optional<double> closed_form;
    double quadrature_err = 0.0;

    bool within(double tol) const { return gap <= tol; }
};

namespace detail {

/// Dense linear solve with partial pivoting; a is row-major n x n.
inline std::vector<double> solve_linear(std::vector<double> a, std::vector<double> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r * n + col]) > std::abs(a[piv * n + col])) piv = r;
        if (std::abs(a[piv * n + col]) < 1e-14)
            throw std::runtime_error("solve_linear: singular interpolation system");
        if (piv != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a[col * n + c], a[piv * n + c]);
            std::swap(b[col], b[piv]);
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a[r * n + col] / a[col * n + col];
            if (f == 0.0) continue;
            for (std::size_t c = col; c < n; ++c) a[r * n + c] -= f * a[col * n + c];
            b[r] -= f * b[col];
        }
    }
    std::vector<double> x(n);
    for (std::size_t r = n; r-- > 0;) {
        double s = b[r];
        for (std::size_t c = r + 1; c < n; ++c) s -= a[r * n + c] * x[c];
        x[r] = s / a[r * n + r];
    }
    return x;
}

/// Collapsed dual sum for the Steklov kernel at half-odd-integer h*n:
/// sin(pi h n k) is +/-1 there, and the k (mod 4) sign pattern reduces the
/// series to lambda(m+1) (odd m) or beta(m+1) (even m).
inline double steklov_dual_exact(int m, double h, int n) {
    const double s = (m % 2) ? lambda_odd(m + 1.0) : beta_odd(m + 1.0);
    return (4.0 / pi) * std::abs(s) / std::pow(pi * h * n, m);
}

/// Generic Steklov dual attempt: direct partial sum over odd k with a
/// conservative tail bound subtracted, so the result stays a valid lower
/// bound for |integral|.
inline double steklov_dual_generic(int m, double h, int n) {
    const long kmax = 200001;
    double sum = 0.0;
    for (long k = 1; k <= kmax; k += 2) {
        const double x = pi * h * n * k;
        sum += alt4(k) * std::pow(std::sin(x) / x, m) / static_cast<double>(k);
    }
    const double tail = std::pow(pi * h * n, -m) * std::pow(static_cast<double>(kmax), -m) / (2.0 * m);
    return std::max(0.0, (4.0 / pi) * (std::abs(sum) - tail));
}

} // namespace detail

/// Duality lower bound |(1/2pi) int K conj(sigma)|, evaluated analytically
/// from the closed-form spectra: the sum over odd k of fourier_coef(kn)
/// against the pattern coefficients, with the slowly converging cases summed
/// by series acceleration so the error is a pure tail bound below tol.
inline double dual_lower(const KernelSpec& kernel, int n, const SignPattern& pattern, double tol) {
    if (pattern.n != n) throw std::invalid_argument("dual_lower: pattern index must equal n");
    if (n < 1) throw std::invalid_argument("dual_lower: n must be >= 1");
    if (!(tol > 0.0)) throw std::invalid_argument("dual_lower: tol must be positive");

    switch (kernel.kind()) {
    case KernelSpec::Kind::bernoulli: {
        const int r = kernel.order();
        const bool odd = r % 2 != 0;
        if (odd != (pattern.kind == PatternKind::sin_n)) return 0.0;
        const double s = odd ? detail::lambda_odd(r + 1.0) : detail::beta_odd(r + 1.0);
        return (4.0 / detail::pi) * std::abs(s) / std::pow(static_cast<double>(n), r);
    }
    case KernelSpec::Kind::quasi_k1: {
        if (pattern.kind != PatternKind::sin_n) return 0.0;
        if (n < 2) throw std::invalid_argument("dual_lower: quasi kernels need n >= 2");
        return (4.0 / (detail::pi * n)) * detail::odd_pf_series(1.0 / n);
    }
    case KernelSpec::Kind::quasi_k2: {
        if (pattern.kind != PatternKind::cos_n) return 0.0;
        if (n < 2) throw std::invalid_argument("dual_lower: quasi kernels need n >= 2");
        const double a2 = 1.0 / (static_cast<double>(n) * n);
        double sum = 0.0, p = a2;
        for (int m = 1; m < 600; ++m) {
            const double term = p * detail::beta_odd(2.0 * m + 1.0);
            sum += term;
            if (std::abs(term) < 1e-18) break;
            p *= a2;
        }
        return (4.0 / detail::pi) * sum;
    }
    case KernelSpec::Kind::steklov: {
        if (pattern.kind != PatternKind::cos_n) return 0.0;
        const int m = kernel.steklov_m();
        const double h = kernel.steklov_h();
        if (h <= 1.0 / (2.0 * m * n) * (1.0 + 1e-12)) return 1.0;   // support inside one cos_n lobe
        const double q = 2.0 * n * h;
        const double qr = std::round(q);
        if (std::abs(q - qr) <= 1e-9 && static_cast<long>(qr) % 2 == 1)
            return detail::steklov_dual_exact(m, h, n);
        return detail::steklov_dual_generic(m, h, n);
    }
    }
    return 0.0;
}

/// Known best-approximation values: K_r/n^r for Bernoulli kernels,
/// tan(pi/2n) and sec(pi/2n)-1 for the quasi kernels; none for Steklov.
inline std::optional<double> closed_form_value(const KernelSpec& kernel, int n) {
    switch (kernel.kind()) {
    case KernelSpec::Kind::bernoulli: {
        if (n < 1) throw std::invalid_argument("closed_form_value: n must be >= 1");
        const int r = kernel.order();
        const double kr = (r <= max_exact_favard) ? favard_exact(r).value : favard_series(r, 1e-15);
        return kr / std::pow(static_cast<double>(n), r);
    }
    case KernelSpec::Kind::quasi_k1:
        if (n < 2) throw std::invalid_argument("closed_form_value: quasi kernels need n >= 2");
        return std::tan(detail::pi / (2.0 * n));
    case KernelSpec::Kind::quasi_k2:
        if (n < 2) throw std::invalid_argument("closed_form_value: quasi kernels need n >= 2");
        return 1.0 / std::cos(detail::pi / (2.0 * n)) - 1.0;
    case KernelSpec::Kind::steklov: return std::nullopt;
    }
    return std::nullopt;
}

/// Equidistant-node interpolant in the parity-matched half basis: odd kernels
/// through theta = k pi / n (k = 1..n-1, sine basis; 0 and pi come free),
/// even kernels through theta = (2k+1) pi / (2n) (k = 0..n-1, cosine basis).
inline TrigPoly best_poly_candidate(const KernelSpec& kernel, int n) {
    if (n < 2) throw std::invalid_argument("best_poly_candidate: n must be >= 2");
    const Parity parity = kernel.parity();
    if (parity == Parity::none) throw std::invalid_argument("best_poly_candidate: kernel parity undefined");

    const bool odd = parity == Parity::odd;
    const std::size_t dim = odd ? n - 1 : n;
    std::vector<double> a(dim * dim), rhs(dim), nodes(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        nodes[i] = odd ? (i + 1) * detail::pi / n : (2.0 * i + 1.0) * detail::pi / (2.0 * n);
        rhs[i] = kernel.eval(nodes[i], 1e-13);
        for (std::size_t j = 0; j < dim; ++j)
            a[i * dim + j] = odd ? std::sin((j + 1.0) * nodes[i]) : std::cos(static_cast<double>(j) * nodes[i]);
    }
    const std::vector<double> x = detail::solve_linear(a, rhs);

    for (std::size_t i = 0; i < dim; ++i) {
        double resid = -rhs[i];
        for (std::size_t j = 0; j < dim; ++j)
            resid += (odd ? std::sin((j + 1.0) * nodes[i]) : std::cos(static_cast<double>(j) * nodes[i])) * x[j];
        if (std::abs(resid) > 1e-8 * std::max(1.0, std::abs(rhs[i])))
            throw std::runtime_error("best_poly_candidate: interpolation residual too large");
    }

    TrigPoly p(n - 1);
    if (odd) {
        for (std::size_t j = 0; j < dim; ++j) p += sin_poly(static_cast<int>(j + 1), x[j]);
    } else {
        for (std::size_t j = 0; j < dim; ++j) p += cos_poly(static_cast<int>(j), x[j]);
    }
    return p;
}

/// Sandwich certification: duality lower bound against the refined L1 norm of
/// kernel minus interpolant.  A gap above tol is reported in the certificate,
/// never silently accepted.
inline Certificate certify(const KernelSpec& kernel, int n, double tol) {
    if (n < 2) throw std::invalid_argument("certify: n must be >= 2");
    if (!(tol > 0.0)) throw std::invalid_argument("certify: tol must be positive");

    Certificate cert;
    cert.kernel = kernel;
    cert.n = n;
    cert.candidate = best_poly_candidate(kernel, n);
    const SignPattern pattern = (kernel.parity() == Parity::odd) ? SignPattern::sin_pattern(n)
                                                                 : SignPattern::cos_pattern(n);
    cert.lower = dual_lower(kernel, n, pattern, std::min(tol * 1e-3, 1e-12));

    PeriodicFn diff;
    const KernelSpec k = kernel;
    const TrigPoly cand = cert.candidate;
    diff.eval = [k, cand](double theta) { return k.eval(theta, 1e-13) - eval_trig(cand, theta); };
    diff.jumps = kernel.jump_points();
    diff.kinks = kernel.kink_points();
    const int grid = static_cast<int>(detail::next_pow2(std::max(4096L, 32L * n)));
    const L1Result u = l1_norm(diff, grid, true);
    cert.upper = u.value;
    cert.quadrature_err = u.err_estimate;
    cert.gap = cert.upper - cert.lower;
    cert.closed_form = closed_form_value(kernel, n);
    return cert;
}

/// Grid diagnostic: does kernel - candidate carry the sign pattern sigma at
/// every off-node sample?
inline bool sign_agreement(const KernelSpec& kernel, const TrigPoly& candidate, const SignPattern& pattern,
                           int grid) {
    if (grid < 2) throw std::invalid_argument("sign_agreement: grid too small");
    for (int j = 0; j < grid; ++j) {
        const double theta = (j + 0.5) * detail::two_pi / grid;
        const double d = kernel.eval(theta, 1e-13) - eval_trig(candidate, theta);
        if (std::abs(d) <= 1e-12) continue;
        const double s = pattern.eval(theta);
        if (s != 0.0 && detail::sign_of(d) != detail::sign_of(s)) return false;
    }
    return true;
}

enum class SteklovRegime { flat, exact, bound };

inline const char* regime_name(SteklovRegime r) {
    switch (r) {
    case SteklovRegime::flat: return "FLAT";
    case SteklovRegime::exact: return "EXACT";
    case SteklovRegime::bound: return "BOUND";
    }
    return "?";
}

/// Best-approximation classification for the Steklov kernel.
/// `value` is 1 in the flat regime and K_m/(pi h n)^m otherwise; in the bound
/// regime that is only an upper estimate and `certified` is false, with a
/// numerical sandwich attempt attached.
struct SteklovBest {
    SteklovRegime regime = SteklovRegime::bound;
    double value = 0.0;
    bool certified = false;
    double attempt_lower = 0.0;
    double attempt_upper = 0.0;
};

inline SteklovBest steklov_best(int m, double h, int n, double tol) {
    if (m < 1) throw std::invalid_argument("steklov_best: m must be >= 1");
    if (!(h > 0.0) || h > 1.0) throw std::invalid_argument("steklov_best: need 0 < h <= 1");
    if (m * h >= 1.0) throw std::invalid_argument("steklov_best: need m*h < 1");
    if (n < 1) throw std::invalid_argument("steklov_best: n must be >= 1");
    if (!(tol > 0.0)) throw std::invalid_argument("steklov_best: tol must be positive");

    SteklovBest out;
    const double favard_bound = favard_exact(m).value / std::pow(detail::pi * h * n, m);

    // Half-odd-integer h*n wins the overlap with the flat regime (only
    // possible at m = 1, h = 1/2n, where both give the value 1).
    const double q = 2.0 * n * h;
    const double qr = std::round(q);
    if (std::abs(q - qr) <= 1e-9 && static_cast<long>(qr) % 2 == 1) {
        out.regime = SteklovRegime::exact;
        out.value = favard_bound;
        out.attempt_lower = detail::steklov_dual_exact(m, h, n);
        out.attempt_upper = favard_bound;
        out.certified = std::abs(out.attempt_lower - favard_bound) <= tol;
        return out;
    }

    if (h <= 1.0 / (2.0 * m * n) * (1.0 + 1e-12)) {
        // Support of the kernel fits inside one lobe of cos(n theta): the
        // duality integral equals the full mass and the zero polynomial
        // already achieves it.
        out.regime = SteklovRegime::flat;
        out.value = 1.0;
        out.certified = true;
        out.attempt_lower = out.attempt_upper = 1.0;
        return out;
    }

    out.regime = SteklovRegime::bound;
    out.value = favard_bound;
    out.certified = false;
    const KernelSpec chi = KernelSpec::steklov(m, h);
    out.attempt_lower = dual_lower(chi, n, SignPattern::cos_pattern(n), tol);
    TrigPoly cand = (n >= 2) ? best_poly_candidate(chi, n) : cos_poly(0, 1.0);
    PeriodicFn diff;
    diff.eval = [chi, cand](double theta) { return chi.eval(theta, 1e-13) - eval_trig(cand, theta); };
    diff.kinks = chi.kink_points();
    out.attempt_upper = l1_norm(diff, 4096, true).value;
    return out;
}

/// Best polynomial for a quasi kernel assembled from the Bernoulli-kernel
/// interpolants, term by term over the odd (K1) or even (K2) orders.  The
/// omitted tail is geometric; with R around 30 the coefficients agree with
/// the direct interpolant to quadrature accuracy.
inline TrigPoly quasi_tau_series(QuasiKind which, int n, int terms) {
    if (n < 2) throw std::invalid_argument("quasi_tau_series: n must be >= 2");
    if (terms < 1) throw std::invalid_argument("quasi_tau_series: need at least one term");
    TrigPoly acc;
    if (which == QuasiKind::k1) {
        if (2 * terms + 1 > detail::max_bernoulli_order)
            throw std::invalid_argument("quasi_tau_series: truncation too deep");
        acc = sin_poly(1, 0.5);
        for (int r = 0; r <= terms; ++r) {
            TrigPoly t = best_poly_candidate(KernelSpec::bernoulli(2 * r + 1), n);
            t *= (r % 2) ? -1.0 : 1.0;
            acc += t;
            acc -= sin_poly(1, 2.0);
        }
    } else {
        if (2 * terms > detail::max_bernoulli_order)
            throw std::invalid_argument("quasi_tau_series: truncation too deep");
        acc = cos_poly(0, 1.0) + cos_poly(1, 0.5);
        for (int r = 1; r <= terms; ++r) {
            TrigPoly t = best_poly_candidate(KernelSpec::bernoulli(2 * r), n);
            t *= (r % 2) ? 1.0 : -1.0;
            acc += t;
            acc += cos_poly(1, 2.0);
        }
    }
    return acc;
}

} // namespace l1approx
