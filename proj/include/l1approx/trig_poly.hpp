#pragma once

#include "l1approx/detail/constants.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace l1approx {

using cplx = std::complex<double>;

/// Trigonometric polynomial sum_{|k| <= degree} c_k e^{ik theta} with a dense
/// two-sided coefficient array.  Missing coefficients are zero; a real-valued
/// polynomial satisfies c_{-k} = conj(c_k).
class TrigPoly {
  public:
    TrigPoly() : c_(1) {}
    explicit TrigPoly(int degree) : c_(2 * static_cast<std::size_t>(check(degree)) + 1) {}

    int degree() const { return (static_cast<int>(c_.size()) - 1) / 2; }

    cplx coeff(long k) const {
        if (std::labs(k) > degree()) return {};
        return c_[static_cast<std::size_t>(k + degree())];
    }

    void set_coeff(long k, cplx v) {
        if (std::labs(k) > degree()) throw std::out_of_range("TrigPoly::set_coeff: |k| exceeds degree");
        c_[static_cast<std::size_t>(k + degree())] = v;
    }

    void add_coeff(long k, cplx v) { set_coeff(k, coeff(k) + v); }

    /// Grow (never shrink) the coefficient band.
    void resize_degree(int degree) {
        if (degree < this->degree()) return;
        std::vector<cplx> next(2 * static_cast<std::size_t>(degree) + 1);
        const int shift = degree - this->degree();
        for (std::size_t i = 0; i < c_.size(); ++i) next[i + shift] = c_[i];
        c_ = std::move(next);
    }

    cplx eval_complex(double theta) const {
        const cplx w = std::polar(1.0, theta);
        cplx acc = 0.0;
        for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) acc = acc * w + c_[i];
        return acc * std::polar(1.0, -degree() * theta);
    }

    bool is_real(double tol = 1e-12) const {
        for (long k = 0; k <= degree(); ++k)
            if (std::abs(coeff(-k) - std::conj(coeff(k))) > tol) return false;
        return true;
    }

    double coeff_abs_sum() const {
        double s = 0.0;
        for (const cplx& v : c_) s += std::abs(v);
        return s;
    }

    TrigPoly& operator+=(const TrigPoly& o) {
        resize_degree(o.degree());
        for (long k = -o.degree(); k <= o.degree(); ++k) add_coeff(k, o.coeff(k));
        return *this;
    }

    TrigPoly& operator-=(const TrigPoly& o) {
        resize_degree(o.degree());
        for (long k = -o.degree(); k <= o.degree(); ++k) add_coeff(k, -o.coeff(k));
        return *this;
    }

    TrigPoly& operator*=(double s) {
        for (cplx& v : c_) v *= s;
        return *this;
    }

    friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) { return a += b; }
    friend TrigPoly operator-(TrigPoly a, const TrigPoly& b) { return a -= b; }
    friend TrigPoly operator*(TrigPoly a, double s) { return a *= s; }
    friend TrigPoly operator*(double s, TrigPoly a) { return a *= s; }

  private:
    static int check(int degree) {
        if (degree < 0) throw std::invalid_argument("TrigPoly: negative degree");
        return degree;
    }

    std::vector<cplx> c_;
};

/// Evaluate a real-valued TrigPoly; the imaginary residue must stay below
/// 1e-12 relative to the coefficient mass, otherwise the coefficients are
/// corrupted (conjugate symmetry broken).
inline double eval_trig(const TrigPoly& p, double theta) {
    const cplx v = p.eval_complex(theta);
    const double scale = std::max(1.0, p.coeff_abs_sum());
    if (std::abs(v.imag()) > 1e-12 * scale)
        throw std::runtime_error("eval_trig: imaginary residue above threshold (corrupted coefficients)");
    return v.real();
}

/// Coefficient-space multiplication by sin(theta): shifts frequencies by one.
inline TrigPoly mul_sin(const TrigPoly& p) {
    TrigPoly q(p.degree() + 1);
    const cplx half_over_i(0.0, -0.5);   // 1/(2i)
    for (long k = -q.degree(); k <= q.degree(); ++k)
        q.set_coeff(k, (p.coeff(k - 1) - p.coeff(k + 1)) * half_over_i);
    return q;
}

inline TrigPoly mul_cos(const TrigPoly& p) {
    TrigPoly q(p.degree() + 1);
    for (long k = -q.degree(); k <= q.degree(); ++k)
        q.set_coeff(k, 0.5 * (p.coeff(k - 1) + p.coeff(k + 1)));
    return q;
}

/// b * sin(j theta) as a TrigPoly.
inline TrigPoly sin_poly(int j, double b) {
    TrigPoly p(j);
    p.set_coeff(j, cplx(0.0, -0.5 * b));
    p.set_coeff(-j, cplx(0.0, 0.5 * b));
    return p;
}

/// a * cos(j theta) as a TrigPoly (a constant when j = 0).
inline TrigPoly cos_poly(int j, double a) {
    TrigPoly p(j);
    if (j == 0) {
        p.set_coeff(0, a);
    } else {
        p.set_coeff(j, 0.5 * a);
        p.set_coeff(-j, 0.5 * a);
    }
    return p;
}

} // namespace l1approx
