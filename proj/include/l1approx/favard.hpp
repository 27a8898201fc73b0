#pragma once

#include "l1approx/detail/constants.hpp"
#include "l1approx/detail/odd_series.hpp"
#include "l1approx/detail/zigzag.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace l1approx {

inline constexpr int max_exact_favard = 64;

/// K_r together with its exact rational multiple of pi^r.
struct FavardConstant {
    int r = 0;
    double value = 1.0;
    detail::bigint num = 1;
    detail::bigint den = 1;

    std::string rational_string() const {
        return num.str() + "/" + den.str() + "*pi^" + std::to_string(r);
    }
};

/// K_r from the defining odd-denominator series: (4/pi) sum 1/(2k+1)^{r+1}
/// for odd r, the alternating variant for even r.  Heads are summed directly
/// and the remainders are driven below tol by Euler-Maclaurin (odd r) or
/// Boole (even r) tail corrections.
inline double favard_series(int r, double tol) {
    if (r < 1) throw std::invalid_argument("favard_series: r must be >= 1");
    if (!(tol > 0.0)) throw std::invalid_argument("favard_series: tol must be positive");
    const double s = r + 1.0;
    long head = 64;
    for (int attempt = 0; attempt < 16; ++attempt, head *= 2) {
        const detail::TailSum t =
            (r % 2) ? detail::lambda_odd_sum(s, head) : detail::beta_odd_sum(s, head);
        if (t.rem_bound <= tol) return (4.0 / detail::pi) * t.value;
    }
    throw std::runtime_error("favard_series: tail bound did not reach tolerance");
}

/// Exact K_r = A_r pi^r / (2^r r!) with A_r the r-th zigzag number from the
/// boustrophedon recurrence.  Big-integer arithmetic throughout; conversion
/// to double only at the boundary.  Supported for r <= 64.
inline FavardConstant favard_exact(int r) {
    if (r < 0 || r > max_exact_favard)
        throw std::invalid_argument("favard_exact: supported range is 0 <= r <= 64");
    FavardConstant k;
    k.r = r;
    k.num = detail::zigzag_numbers()[r];
    k.den = (detail::bigint(1) << r) * detail::factorial_big(r);
    const detail::bigint g = boost::multiprecision::gcd(k.num, k.den);
    k.num /= g;
    k.den /= g;
    k.value = static_cast<double>(k.num) / static_cast<double>(k.den) * std::pow(detail::pi, r);
    return k;
}

/// Generating function sum K_r z^r = tan(pi z / 2) + sec(pi z / 2), |z| < 1.
inline double generating_value(double z) {
    if (!(std::abs(z) < 1.0)) throw std::invalid_argument("generating_value: need |z| < 1 (pole at z = 1)");
    const double x = detail::pi * z / 2.0;
    return std::tan(x) + 1.0 / std::cos(x);
}

/// Partial-fraction series sum_{k>=0} 1/((2k+1)^2 - z^2), which equals
/// (pi/4z) tan(pi z/2); the z = 0 limit is pi^2/8.
inline double partial_fraction_tan(double z, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("partial_fraction_tan: tol must be positive");
    if (z == 0.0) return detail::lambda_odd(2.0);
    const double nearest_odd = 2.0 * std::round((std::abs(z) - 1.0) / 2.0) + 1.0;
    if (std::abs(std::abs(z) - nearest_odd) < 1e-12)
        throw std::invalid_argument("partial_fraction_tan: z at a pole (odd integer)");
    if (!(std::abs(z) < 64.0)) throw std::invalid_argument("partial_fraction_tan: |z| too large");
    return detail::odd_pf_series(z);
}

} // namespace l1approx
