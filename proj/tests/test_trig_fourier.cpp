#include "l1approx/fourier.hpp"
#include "l1approx/kernels.hpp"

#include "support/oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>

using namespace l1approx;
using Catch::Approx;
namespace kd = l1approx::detail;

namespace {

TrigPoly random_real_poly(std::mt19937& rng, int degree) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    TrigPoly p(degree);
    p.set_coeff(0, u(rng));
    for (int k = 1; k <= degree; ++k) {
        const cplx c(u(rng), u(rng));
        p.set_coeff(k, c);
        p.set_coeff(-k, std::conj(c));
    }
    return p;
}

} // namespace

TEST_CASE("eval_trig on elementary polynomials") {
    TrigPoly sine = sin_poly(1, 1.0);
    CHECK(eval_trig(sine, kd::pi / 2) == Approx(1.0).margin(1e-14));

    TrigPoly one = cos_poly(0, 1.0);
    CHECK(eval_trig(one, 0.37) == Approx(1.0).margin(1e-14));
    CHECK(eval_trig(one, 5.1) == Approx(1.0).margin(1e-14));

    TrigPoly cos2 = cos_poly(2, 1.0);
    CHECK(eval_trig(cos2, kd::pi / 4) == Approx(0.0).margin(1e-14));
}

TEST_CASE("eval_trig rejects corrupted coefficients") {
    TrigPoly p(1);
    p.set_coeff(1, cplx(1.0, 0.0));   // no conjugate partner
    CHECK_FALSE(p.is_real());
    CHECK_THROWS_AS(eval_trig(p, 0.7), std::runtime_error);
}

TEST_CASE("fourier_coeffs of cos theta") {
    PeriodicFn f;
    f.eval = [](double t) { return std::cos(t); };
    const CoeffMap c = fourier_coeffs(f, 2, 1 << 10);
    CHECK(std::abs(c.at(1) - cplx(0.5)) < 1e-14);
    CHECK(std::abs(c.at(-1) - cplx(0.5)) < 1e-14);
    CHECK(std::abs(c.at(0)) < 1e-14);
    CHECK(std::abs(c.at(2)) < 1e-14);
}

TEST_CASE("fourier_coeffs of the box function") {
    const double h = 0.25;
    PeriodicFn box;
    box.eval = [h](double t) {
        double x = kd::reduce_two_pi(t);
        if (x > kd::pi) x -= kd::two_pi;
        const double edge = kd::pi * h;
        if (std::abs(std::abs(x) - edge) < 1e-13) return 0.5 / h;
        return std::abs(x) < edge ? 1.0 / h : 0.0;
    };
    box.jumps = {kd::pi * h, kd::two_pi - kd::pi * h};
    const CoeffMap c = fourier_coeffs(box, 4, 1 << 14);
    // sinc spectrum sin(pi h k)/(pi h k); at k = 2, h = 1/4 this is 2/pi
    CHECK(c.at(2).real() == Approx(2.0 / kd::pi).margin(1e-7));
    CHECK(c.at(1).real() == Approx(std::sin(kd::pi * h) / (kd::pi * h)).margin(1e-7));
    CHECK(std::abs(c.at(0) - cplx(1.0)) < 1e-7);
}

TEST_CASE("fourier_coeffs of the sawtooth at high resolution") {
    const CoeffMap c = fourier_coeffs(KernelSpec::bernoulli(1).to_periodic(), 3, 1 << 16);
    CHECK(std::abs(c.at(3) - cplx(0.0, -1.0 / 3.0)) < 1e-8);
}

TEST_CASE("fourier_coeffs input validation") {
    PeriodicFn f;
    f.eval = [](double t) { return std::sin(t); };
    CHECK_THROWS_AS(fourier_coeffs(f, 64, 256), std::invalid_argument);   // aliasing risk
    CHECK_THROWS_AS(fourier_coeffs(f, 4, 100), std::invalid_argument);    // not a power of two

    PeriodicFn g = f;
    g.jumps = {0.1234567};   // not on any power-of-two grid
    CHECK_THROWS_AS(fourier_coeffs(g, 4, 1 << 10), std::invalid_argument);
}

TEST_CASE("l1_norm closed-form examples") {
    PeriodicFn sine;
    sine.eval = [](double t) { return std::sin(t); };
    const L1Result r = l1_norm(sine, 1 << 12, true);
    CHECK(r.value == Approx(2.0 / kd::pi).margin(1e-12));

    const L1Result b1 = l1_norm(KernelSpec::bernoulli(1).to_periodic(), 1 << 12, true);
    CHECK(b1.value == Approx(kd::pi / 2).margin(1e-12));

    PeriodicFn zero;
    zero.eval = [](double) { return 0.0; };
    CHECK(l1_norm(zero, 1 << 10, false).value == 0.0);
}

TEST_CASE("l1_norm refine matches exact piecewise integration") {
    // triangle wave |theta - pi| - pi/2: exact L1 mean is pi/4
    PeriodicFn tri;
    tri.eval = [](double t) { return std::abs(kd::reduce_two_pi(t) - kd::pi) - kd::pi / 2; };
    tri.kinks = {0.0, kd::pi};
    const L1Result r = l1_norm(tri, 1 << 11, true);
    CHECK(std::abs(r.value - kd::pi / 4) <= r.err_estimate + 1e-12);
    CHECK(r.value == Approx(kd::pi / 4).margin(1e-12));
}

TEST_CASE("l1_norm base grid validation") {
    PeriodicFn f;
    f.eval = [](double) { return 1.0; };
    CHECK_THROWS_AS(l1_norm(f, 512, false), std::invalid_argument);
}

TEST_CASE("convolve_poly") {
    SECTION("averaging against the constant function") {
        TrigPoly p(3);
        p.set_coeff(0, 2.5);
        p.set_coeff(2, cplx(0.5, 0.25));
        p.set_coeff(-2, cplx(0.5, -0.25));
        const TrigPoly q = convolve_poly(constant_fn(1.0), p);
        CHECK(std::abs(q.coeff(0) - cplx(2.5)) < 1e-15);
        CHECK(std::abs(q.coeff(2)) < 1e-15);
    }
    SECTION("cos theta halves the first harmonic") {
        PeriodicFn h;
        h.eval = [](double t) { return std::cos(t); };
        TrigPoly p(1);
        p.set_coeff(1, 1.0);
        const TrigPoly q = convolve_poly(h, p);
        CHECK(std::abs(q.coeff(1) - cplx(0.5)) < 1e-13);
    }
    SECTION("sign pattern via closed-form spectrum") {
        PeriodicFn sgn;
        sgn.eval = [](double t) { return static_cast<double>(kd::sign_of(std::sin(t))); };
        sgn.coef = [](long k) {
            if (k == 0 || k % 2 == 0) return cplx(0.0);
            return (2.0 / kd::pi) / cplx(0.0, static_cast<double>(k));
        };
        TrigPoly p(1);
        p.set_coeff(1, 1.0);
        const TrigPoly q = convolve_poly(sgn, p);
        CHECK(std::abs(q.coeff(1) - 2.0 / (kd::pi * cplx(0.0, 1.0))) < 1e-15);
    }
}

TEST_CASE("property: coefficient roundtrip is the identity below Nyquist") {
    std::mt19937 rng(20160621);
    for (int trial = 0; trial < 25; ++trial) {
        const int deg = 1 + static_cast<int>(rng() % 10);
        const TrigPoly p = random_real_poly(rng, deg);
        const CoeffMap c = fourier_coeffs(to_periodic_fn(p), deg, 1 << 10);
        for (long k = -deg; k <= deg; ++k) {
            INFO("deg=" << deg << " k=" << k);
            CHECK(std::abs(c.at(k) - p.coeff(k)) < 1e-12);
        }
    }
}

TEST_CASE("property: L1 norm below the coefficient L2 norm") {
    std::mt19937 rng(271828);
    for (int trial = 0; trial < 25; ++trial) {
        const int deg = 1 + static_cast<int>(rng() % 8);
        const TrigPoly p = random_real_poly(rng, deg);
        double l2sq = 0.0;
        for (long k = -deg; k <= deg; ++k) l2sq += std::norm(p.coeff(k));
        const double l1 = l1_norm(to_periodic_fn(p), 1 << 11, true).value;
        CHECK(l1 <= std::sqrt(l2sq) + 1e-10);
    }
}

TEST_CASE("mul_sin and mul_cos shift frequencies") {
    std::mt19937 rng(99);
    const TrigPoly p = random_real_poly(rng, 5);
    const TrigPoly ps = mul_sin(p);
    const TrigPoly pc = mul_cos(p);
    for (double theta : {0.3, 1.7, 4.4}) {
        CHECK(eval_trig(ps, theta) == Approx(eval_trig(p, theta) * std::sin(theta)).margin(1e-13));
        CHECK(eval_trig(pc, theta) == Approx(eval_trig(p, theta) * std::cos(theta)).margin(1e-13));
    }
}
