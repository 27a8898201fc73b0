#pragma once

#include "l1approx/detail/constants.hpp"

#include <cmath>
#include <stdexcept>

namespace l1approx::detail {

inline double rising(double s, int k) {
    double p = 1.0;
    for (int i = 0; i < k; ++i) p *= s + i;
    return p;
}

struct TailSum {
    double value;
    double rem_bound;
};

/// Euler-Maclaurin tail of sum_{j>=j0} (2j+1)^{-s}, s > 1.  The correction
/// terms alternate and envelope the remainder, so rem_bound is the magnitude
/// of the first omitted term.
inline TailSum lambda_odd_tail(double s, long j0) {
    const double u = 2.0 * j0 + 1.0;
    const double gu = std::pow(u, -s);
    double t = u * gu / (2.0 * (s - 1.0));
    t += 0.5 * gu;
    t += (s / 6.0) * gu / u;
    t -= (rising(s, 3) / 90.0) * gu / (u * u * u);
    t += (rising(s, 5) / 945.0) * gu / std::pow(u, 5);
    const double last = (rising(s, 7) / 9450.0) * gu / std::pow(u, 7);
    t -= last;
    return {t, std::abs(last)};
}

/// Boole-summation tail of sum_{j>=j0} (-1)^j (2j+1)^{-s} (signed value).
inline TailSum beta_odd_tail(double s, long j0) {
    const double u = 2.0 * j0 + 1.0;
    const double gu = std::pow(u, -s);
    double t = 0.5 * gu;
    t += 0.5 * s * gu / u;
    t -= (rising(s, 3) / 6.0) * gu / (u * u * u);
    t += (rising(s, 5) / 15.0) * gu / std::pow(u, 5);
    const double last = (17.0 * 128.0 / 80640.0) * rising(s, 7) * gu / std::pow(u, 7);
    t -= last;
    const double sign = (j0 % 2) ? -1.0 : 1.0;
    return {sign * t, std::abs(last)};
}

/// lambda(s) = sum_{j>=0} (2j+1)^{-s}: direct head plus accelerated tail.
inline TailSum lambda_odd_sum(double s, long j_direct = 64) {
    if (!(s > 1.0)) throw std::invalid_argument("lambda_odd_sum: need s > 1");
    double sum = 0.0;
    for (long j = j_direct - 1; j >= 0; --j) sum += std::pow(2.0 * j + 1.0, -s);
    const TailSum tail = lambda_odd_tail(s, j_direct);
    return {sum + tail.value, tail.rem_bound};
}

/// beta(s) = sum_{j>=0} (-1)^j (2j+1)^{-s}.
inline TailSum beta_odd_sum(double s, long j_direct = 64) {
    if (!(s > 0.0)) throw std::invalid_argument("beta_odd_sum: need s > 0");
    double sum = 0.0;
    for (long j = j_direct - 1; j >= 0; --j) {
        const double term = std::pow(2.0 * j + 1.0, -s);
        sum += (j % 2) ? -term : term;
    }
    const TailSum tail = beta_odd_tail(s, j_direct);
    return {sum + tail.value, tail.rem_bound};
}

inline double lambda_odd(double s) { return lambda_odd_sum(s).value; }
inline double beta_odd(double s) { return beta_odd_sum(s).value; }

/// sum_{k>=0} 1/((2k+1)^2 - z^2) for |z| well inside the direct head
/// (poles at odd integers are the caller's concern).  The tail past the head
/// is expanded in powers of z^2, each power summed by lambda_odd_tail.
inline double odd_pf_series(double z, long j_direct = 64) {
    double sum = 0.0;
    const double z2 = z * z;
    for (long k = j_direct - 1; k >= 0; --k) {
        const double u = 2.0 * k + 1.0;
        sum += 1.0 / (u * u - z2);
    }
    double zp = 1.0;
    for (int m = 0; m < 64; ++m) {
        const double term = zp * lambda_odd_tail(2 * m + 2, j_direct).value;
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
        zp *= z2;
    }
    return sum;
}

} // namespace l1approx::detail
