#include "l1approx/bernoulli_series.hpp"

#include "support/oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

using namespace l1approx;
using Catch::Approx;
namespace kd = l1approx::detail;

TEST_CASE("laurent_coeffs on the canonical tails") {
    SECTION("K1 tail: alternating odd coefficients") {
        const LaurentResult r = laurent_coeffs(quasi_tail(QuasiKind::k1), 12, 1 << 12);
        CHECK(r.coeffs[0] == Approx(1.0).margin(1e-10));
        CHECK(std::abs(r.coeffs[1]) < 1e-10);
        CHECK(r.coeffs[2] == Approx(-1.0).margin(1e-10));
        CHECK(r.coeffs[4] == Approx(1.0).margin(1e-10));
    }
    SECTION("pure Laurent monomial 1/(iz)") {
        AnalyticTail t;
        t.N = 0;
        t.g = [](cplxl z) { return 1.0L / (cplxl(0.0L, 1.0L) * z); };
        const LaurentResult r = laurent_coeffs(t, 8, 1 << 10);
        CHECK(r.coeffs[0] == Approx(1.0).margin(1e-12));
        for (int m = 2; m <= 8; ++m) CHECK(std::abs(r.coeffs[m - 1]) < 1e-12);
    }
    SECTION("K2 tail: alternating even coefficients c_{2r} = (-1)^{r+1}") {
        const LaurentResult r = laurent_coeffs(quasi_tail(QuasiKind::k2), 12, 1 << 12);
        CHECK(std::abs(r.coeffs[0]) < 1e-10);
        CHECK(r.coeffs[1] == Approx(1.0).margin(1e-10));
        CHECK(r.coeffs[3] == Approx(-1.0).margin(1e-10));
        CHECK(r.coeffs[5] == Approx(1.0).margin(1e-10));
    }
    CHECK_THROWS_AS(laurent_coeffs(quasi_tail(QuasiKind::k1), 4, 128), std::invalid_argument);
}

TEST_CASE("laurent_coeffs flags a pole on the contour") {
    AnalyticTail t;
    t.N = 1;
    t.g = [](cplxl z) { return 1.0L / (z - 1.5L); };   // pole exactly on |z| = 1.5
    CHECK_THROWS_AS(laurent_coeffs(t, 8, 1 << 12), std::runtime_error);
}

TEST_CASE("residue_coeffs") {
    SECTION("K1 and K2 patterns") {
        const std::vector<double> c1 = residue_coeffs(quasi_tail(QuasiKind::k1), 41);
        for (int r = 0; 2 * r + 1 <= 41; ++r) {
            CHECK(c1[2 * r] == Approx((r % 2) ? -1.0 : 1.0).margin(1e-12));
            if (2 * r + 2 <= 41) CHECK(std::abs(c1[2 * r + 1]) < 1e-12);
        }
        const std::vector<double> c2 = residue_coeffs(quasi_tail(QuasiKind::k2), 40);
        for (int r = 1; 2 * r <= 40; ++r) {
            CHECK(c2[2 * r - 1] == Approx((r % 2) ? 1.0 : -1.0).margin(1e-12));
            CHECK(std::abs(c2[2 * r - 2]) < 1e-12);
        }
    }
    SECTION("origin-only principal part") {
        AnalyticTail t;
        t.N = 0;
        t.g = [](cplxl z) { return 1.0L / std::pow(cplxl(0.0L, 1.0L) * z, 3); };
        t.rational = RationalTail{{}, {cplx(0.0), cplx(0.0), cplx(1.0)}};
        const std::vector<double> c = residue_coeffs(t, 6);
        CHECK(c[2] == 1.0);
        CHECK(c[0] == 0.0);
        CHECK(c[5] == 0.0);
    }
    SECTION("pole outside the contour is rejected") {
        AnalyticTail t;
        t.N = 0;
        t.g = [](cplxl z) { return 1.0L / (z - 2.0L); };
        t.rational = RationalTail{{{cplx(2.0), cplx(1.0)}}, {}};
        CHECK_THROWS_AS(residue_coeffs(t, 4), std::invalid_argument);
    }
    SECTION("missing rational form is rejected") {
        AnalyticTail t;
        t.N = 0;
        t.g = [](cplxl z) { return 1.0L / z; };
        CHECK_THROWS_AS(residue_coeffs(t, 4), std::invalid_argument);
    }
}

TEST_CASE("contour and residue coefficients agree to 1e-10") {
    for (QuasiKind which : {QuasiKind::k1, QuasiKind::k2}) {
        const AnalyticTail tail = quasi_tail(which);
        const LaurentResult numeric = laurent_coeffs(tail, 40, 1 << 12);
        const std::vector<double> exact = residue_coeffs(tail, 40);
        for (int m = 1; m <= 40; ++m) {
            INFO((which == QuasiKind::k1 ? "K1" : "K2") << " m=" << m);
            CHECK(std::abs(numeric.coeffs[m - 1] - exact[m - 1]) <= 1e-10);
        }
    }
}

TEST_CASE("coefficient growth and parity transfer") {
    for (QuasiKind which : {QuasiKind::k1, QuasiKind::k2}) {
        const AnalyticTail tail = quasi_tail(which);
        const LaurentResult r = laurent_coeffs(tail, 30, 1 << 12);
        const double mg = kd::max_abs_on_contour(tail);
        for (int m = 1; m <= 30; ++m) {
            CHECK(std::abs(r.coeffs[m - 1]) <= mg * std::pow(tail.N + 0.5, m) * (1.0 + 1e-9));
            const bool odd_kernel = which == QuasiKind::k1;
            if (odd_kernel == (m % 2 == 0)) CHECK(std::abs(r.coeffs[m - 1]) <= 1e-10);
        }
    }
}

TEST_CASE("tail analyticity checks") {
    for (QuasiKind which : {QuasiKind::k1, QuasiKind::k2}) {
        const AnalyticTail tail = quasi_tail(which);
        const KernelSpec kernel = (which == QuasiKind::k1) ? KernelSpec::quasi_k1() : KernelSpec::quasi_k2();
        // decay at infinity
        for (double radius : {1e3, 1e6})
            CHECK(static_cast<double>(std::abs(tail.g(cplxl(radius, radius)))) < 1e-2);
        // g interpolates the kernel spectrum beyond N
        for (long k = tail.N + 1; k <= tail.N + 64; ++k) {
            const cplxl gp = tail.g(cplxl(static_cast<long double>(k)));
            const cplxl gm = tail.g(cplxl(static_cast<long double>(-k)));
            CHECK(std::abs(cplx(double(gp.real()), double(gp.imag())) - kernel.fourier_coef(k)) < 1e-13);
            CHECK(std::abs(cplx(double(gm.real()), double(gm.imag())) - kernel.fourier_coef(-k)) < 1e-13);
        }
    }
}

TEST_CASE("reconstruct") {
    SECTION("quasi kernels away from the jump") {
        const BernoulliSeriesRep rep1 = make_rep(KernelSpec::quasi_k1(), quasi_tail(QuasiKind::k1), 80);
        CHECK(rep1.tail_bound <= 1e-7);
        CHECK(reconstruct(rep1, kd::pi / 2, 1e-7) == Approx(0.0).margin(1e-8));
        const BernoulliSeriesRep rep2 = make_rep(KernelSpec::quasi_k2(), quasi_tail(QuasiKind::k2), 80);
        CHECK(reconstruct(rep2, kd::pi / 2, 1e-7) == Approx(kd::pi / 2).margin(1e-8));
    }
    SECTION("all-zero coefficients reduce to the polynomial part") {
        BernoulliSeriesRep rep;
        rep.N = 2;
        rep.t_n = TrigPoly(2);
        rep.t_n.set_coeff(0, 0.75);
        rep.t_n.set_coeff(1, cplx(0.25, 0.1));
        rep.t_n.set_coeff(-1, cplx(0.25, -0.1));
        rep.coeffs = {0.0, 0.0, 0.0};
        rep.tail_bound = 0.0;
        CHECK(reconstruct(rep, 1.3, 1e-12) == Approx(eval_trig(rep.t_n, 1.3)).margin(1e-15));
    }
    SECTION("tail bound above tol is rejected") {
        const BernoulliSeriesRep rep = make_rep(KernelSpec::quasi_k1(), quasi_tail(QuasiKind::k1), 10);
        CHECK_THROWS_AS(reconstruct(rep, 1.0, 1e-9), std::invalid_argument);
    }
}

TEST_CASE("golden formula cross-validation") {
    const GoldenCheck g1 = golden_formula_check(QuasiKind::k1, 4096, 40);
    CHECK(g1.max_grid_error <= 1e-8);
    CHECK(g1.max_coef_error <= 1e-8);
    const GoldenCheck g2 = golden_formula_check(QuasiKind::k2, 4096, 40);
    CHECK(g2.max_grid_error <= 1e-8);
    CHECK(g2.max_coef_error <= 1e-8);

    // shallow truncation only promises the geometric envelope 6 sum 2^-m
    const GoldenCheck shallow = golden_formula_check(QuasiKind::k1, 512, 2);
    CHECK(shallow.max_grid_error <= 6.0 * (std::pow(2.0, -3) / (1.0 - 0.25)));
}

TEST_CASE("reconstruction spectrum matches the kernel spectrum") {
    for (QuasiKind which : {QuasiKind::k1, QuasiKind::k2}) {
        const KernelSpec kernel = (which == QuasiKind::k1) ? KernelSpec::quasi_k1() : KernelSpec::quasi_k2();
        const BernoulliSeriesRep rep = make_rep(kernel, quasi_tail(which), 60);
        // |k| <= N: the polynomial part carries the kernel coefficients
        for (long k = -rep.N; k <= rep.N; ++k)
            CHECK(std::abs(rep.t_n.coeff(k) - kernel.fourier_coef(k)) < 1e-14);
        // N < |k| <= 64: sum_m c_m / (ik)^m reproduces the spectrum
        for (long k = rep.N + 1; k <= 64; ++k) {
            cplx acc, p(1.0);
            const cplx ik(0.0, static_cast<double>(k));
            for (std::size_t m = 1; m <= rep.coeffs.size(); ++m) {
                p /= ik;
                acc += rep.coeffs[m - 1] * p;
            }
            INFO("k=" << k);
            CHECK(std::abs(acc - kernel.fourier_coef(k)) <= 1e-8);
        }
    }
}

TEST_CASE("uniform envelope of the partial-sum remainders") {
    // |B_m - S_N(B_m)| <= 6 (N+1)^{-m} holds once m >= (N+3)/2 (absolute
    // summation of the tail gives 2 (N+1)^{-m} (1 + (N+1)/(m-1)) <= 6
    // (N+1)^{-m} there); that regime covers every truncation tail in use,
    // where m runs past the truncation order.
    for (int capN = 0; capN <= 4; ++capN) {
        for (int m = std::max(1, (capN + 4) / 2); m <= 12; ++m) {
            double worst = 0.0;
            for (int j = 1; j < 512; ++j) {
                const double theta = kd::two_pi * j / 512;
                worst = std::max(worst,
                                 std::abs(bernoulli_eval(m, theta) - bernoulli_partial_sum(m, capN, theta)));
            }
            INFO("N=" << capN << " m=" << m);
            CHECK(worst <= 6.0 * std::pow(capN + 1.0, -m));
        }
    }

    // For small m relative to N the constant is optimistic: the sawtooth
    // remainder |B_1 - S_1(B_1)| peaks near the jump at pi > 6/2.
    double sup = 0.0;
    for (double theta : {1e-6, 1e-4, 1e-2}) sup = std::max(sup, std::abs(bernoulli_eval(1, theta) - bernoulli_partial_sum(1, 1, theta)));
    CHECK(sup > 3.0);
    CHECK(sup < 3.25);
}
