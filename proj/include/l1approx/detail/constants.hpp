#pragma once

namespace l1approx::detail {

inline constexpr double pi = 3.14159265358979323846264338327950288;
inline constexpr double two_pi = 2.0 * pi;

/// Reduce theta into [0, 2*pi).
inline double reduce_two_pi(double theta) {
    double t = theta - two_pi * static_cast<long long>(theta / two_pi);
    if (t < 0.0) t += two_pi;
    if (t >= two_pi) t = 0.0;
    return t;
}

inline int sign_of(double x) { return (x > 0.0) - (x < 0.0); }

/// (-1)^((k-1)/2) for odd k of either sign: +1 when k = 1 (mod 4), -1 when k = 3 (mod 4).
inline int alt4(long k) { return ((k % 4 + 4) % 4 == 1) ? 1 : -1; }

inline bool is_pow2(long m) { return m > 0 && (m & (m - 1)) == 0; }

inline long next_pow2(long m) {
    long p = 1;
    while (p < m) p <<= 1;
    return p;
}

} // namespace l1approx::detail
