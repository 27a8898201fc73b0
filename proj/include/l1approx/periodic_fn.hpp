#pragma once

#include "l1approx/trig_poly.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace l1approx {

/// Real-valued 2*pi-periodic function.  At a listed jump the evaluator must
/// return the midpoint of the one-sided limits; kinks are derivative breaks.
/// `coef`, when set, returns the exact Fourier coefficient for any integer
/// frequency and is preferred over quadrature wherever both would work.
struct PeriodicFn {
    std::function<double(double)> eval;
    std::vector<double> jumps{};
    std::vector<double> kinks{};
    std::function<cplx(long)> coef{};

    double operator()(double theta) const { return eval(theta); }
    bool has_coef() const { return static_cast<bool>(coef); }
};

inline PeriodicFn to_periodic_fn(const TrigPoly& p) {
    PeriodicFn f;
    f.eval = [p](double theta) { return eval_trig(p, theta); };
    f.coef = [p](long k) { return p.coeff(k); };
    return f;
}

inline PeriodicFn constant_fn(double c) {
    PeriodicFn f;
    f.eval = [c](double) { return c; };
    f.coef = [c](long k) { return k == 0 ? cplx(c) : cplx(0.0); };
    return f;
}

} // namespace l1approx
