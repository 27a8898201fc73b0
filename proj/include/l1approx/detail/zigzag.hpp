#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <vector>

namespace l1approx::detail {

using bigint = boost::multiprecision::cpp_int;

inline constexpr int max_zigzag = 96;

/// Zigzag (up/down) numbers A_0..A_96 from the boustrophedon triangle:
/// T(0,0) = 1, T(n,0) = 0, T(n,k) = T(n,k-1) + T(n-1,n-k), A_n = T(n,n).
inline const std::vector<bigint>& zigzag_numbers() {
    static const std::vector<bigint> table = [] {
        std::vector<bigint> a;
        a.reserve(max_zigzag + 1);
        std::vector<bigint> prev{1};
        a.emplace_back(1);
        for (int n = 1; n <= max_zigzag; ++n) {
            std::vector<bigint> row(n + 1);
            row[0] = 0;
            for (int k = 1; k <= n; ++k) row[k] = row[k - 1] + prev[n - k];
            a.push_back(row[n]);
            prev = std::move(row);
        }
        return a;
    }();
    return table;
}

inline bigint factorial_big(int n) {
    bigint f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

/// Bernoulli number B_m as double. Even orders come from the exact integer
/// identity B_{2n} = (-1)^{n-1} * 2n * A_{2n-1} / (2^{2n} (2^{2n}-1)), which
/// avoids the cancellation of the usual double recurrence.
inline double bernoulli_number(int m) {
    if (m < 0 || m > max_zigzag) throw std::invalid_argument("bernoulli_number: order out of range");
    if (m == 0) return 1.0;
    if (m == 1) return -0.5;
    if (m % 2 == 1) return 0.0;
    const int n = m / 2;
    const bigint num = bigint(m) * zigzag_numbers()[m - 1];
    const bigint den = (bigint(1) << m) * ((bigint(1) << m) - 1);
    const double v = static_cast<double>(num) / static_cast<double>(den);
    return (n % 2 == 1) ? v : -v;
}

} // namespace l1approx::detail
