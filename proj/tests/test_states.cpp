#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "entdyn/channel.hpp"
#include "entdyn/measures.hpp"
#include "entdyn/states.hpp"
#include "support.hpp"

using namespace entdyn;

TEST_CASE("GHZ constructors place the superposition on the right basis pair") {
    const DensityMatrix standard = make_ghz(GhzSpec::from_a2(GhzFamily::I, 0.5));
    CHECK(pi_tangle(standard).pi == doctest::Approx(1.0).epsilon(1e-11));

    const DensityMatrix product = make_ghz(GhzSpec::from_a2(GhzFamily::I, 1.0));
    CHECK(std::abs(pi_tangle(product).pi) <= 1e-12);

    // Family II at t=0 carries pi = 4 a^2 b^2.
    for (double a2 : {0.2, 0.5, 0.85}) {
        const DensityMatrix s = make_ghz(GhzSpec::from_a2(GhzFamily::II, a2, 0.9));
        CHECK(pi_tangle(s).pi == doctest::Approx(4.0 * a2 * (1.0 - a2)).epsilon(1e-10));
    }

    CHECK_THROWS_AS(make_ghz(GhzSpec{GhzFamily::I, 0.9, 0.9, 0.0}), std::invalid_argument);
}

TEST_CASE("W constructors") {
    const double s = std::sqrt(1.0 / 3.0);
    const DensityMatrix w1 = make_w(WSpec{WFamily::W1, s, s, s, 0.0, 0.0});
    CHECK(pi_tangle(w1).pi == doctest::Approx(4.0 * (std::sqrt(5.0) - 1.0) / 9.0).epsilon(1e-11));

    const DensityMatrix product = make_w(WSpec{WFamily::W1, 0.0, 0.0, 1.0, 0.0, 0.0});
    CHECK(std::abs(pi_tangle(product).pi) <= 1e-12);

    CHECK_THROWS_AS(make_w(WSpec{WFamily::W1, 1.0, 1.0, 1.0, 0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("W1 pi at t=0 equals the pure-state closed form") {
    // pi(0) = (4/3)[a^2 sqrt(a^4+4b^2c^2) + b^2 sqrt(b^4+4a^2c^2)
    //              + c^2 sqrt(c^4+4a^2b^2) - (a^4+b^4+c^4)].
    for (const auto& [a2, b2] : std::vector<std::pair<double, double>>{
             {1.0 / 3, 1.0 / 3}, {0.5, 0.25}, {0.2, 0.7}, {0.6, 0.15}}) {
        const double c2 = 1.0 - a2 - b2;
        const WSpec spec = WSpec::from_squares(WFamily::W1, a2, b2, c2, 0.4, 1.3);
        const double expected =
            4.0 / 3.0 *
            (a2 * std::sqrt(a2 * a2 + 4.0 * b2 * c2) + b2 * std::sqrt(b2 * b2 + 4.0 * a2 * c2) +
             c2 * std::sqrt(c2 * c2 + 4.0 * a2 * b2) - (a2 * a2 + b2 * b2 + c2 * c2));
        CHECK(pi_tangle(make_w(spec)).pi == doctest::Approx(expected).epsilon(1e-10));
    }
}

TEST_CASE("LU relations hold exactly as constructed") {
    auto flipped = [](const DensityMatrix& rho, bool flip_a, bool flip_b, bool flip_c) {
        const ComplexMatrix sx = pauli_x();
        const ComplexMatrix i2 = ComplexMatrix::identity(2);
        const ComplexMatrix u = kron(kron(flip_a ? sx : i2, flip_b ? sx : i2), flip_c ? sx : i2);
        ComplexMatrix m = u * rho.matrix() * u.adjoint();
        return DensityMatrix(3, std::move(m));
    };
    for (double a2 : {0.3, 0.5, 0.8}) {
        const double delta = 1.1;
        const DensityMatrix s1 = make_ghz(GhzSpec::from_a2(GhzFamily::I, a2, delta));
        const DensityMatrix s2 = make_ghz(GhzSpec::from_a2(GhzFamily::II, a2, delta));
        const DensityMatrix s3 = make_ghz(GhzSpec::from_a2(GhzFamily::III, a2, delta));
        CHECK(flipped(s2, false, false, true).matrix().max_abs_diff(s1.matrix()) <= 1e-15);
        CHECK(flipped(s3, false, true, true).matrix().max_abs_diff(s1.matrix()) <= 1e-15);
    }
    const WSpec w1 = WSpec::from_squares(WFamily::W1, 0.5, 0.2, 0.3, 0.7, 2.4);
    const WSpec w2{WFamily::W2, w1.a, w1.b, w1.c, w1.delta1, w1.delta2};
    CHECK(flipped(make_w(w1), true, true, true).matrix().max_abs_diff(make_w(w2).matrix()) <= 1e-15);
}

TEST_CASE("mixture endpoints and spectrum") {
    const DensityMatrix ghz = make_mixture(MixtureSpec{1.0});
    CHECK(ghz.matrix().max_abs_diff(test::pure3(test::ghz_amps()).matrix()) <= 1e-15);

    const DensityMatrix w = make_mixture(MixtureSpec{0.0});
    CHECK(w.matrix().max_abs_diff(test::pure3(test::w_amps()).matrix()) <= 1e-15);

    const auto ev = hermitian_eigenvalues(make_mixture(MixtureSpec{0.5}).matrix());
    CHECK(ev[7] == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(ev[6] == doctest::Approx(0.5).epsilon(1e-13));
    for (int i = 0; i < 6; ++i) CHECK(std::abs(ev[i]) <= 1e-13);

    CHECK_THROWS_AS(make_mixture(MixtureSpec{1.2}), std::invalid_argument);
}

TEST_CASE("all constructors emit exact density matrices") {
    for (double a2 : {0.0, 0.4, 1.0}) {
        const DensityDiagnostics d = validate_density(make_ghz(GhzSpec::from_a2(GhzFamily::III, a2, 0.2)));
        CHECK(d.hermiticity_deviation == 0.0);
        CHECK(d.trace_deviation <= 1e-15);
        CHECK(d.min_eigenvalue >= -1e-14);
    }
    const DensityDiagnostics d = validate_density(make_mixture(MixtureSpec{0.37}));
    CHECK(d.hermiticity_deviation == 0.0);
    CHECK(d.trace_deviation <= 1e-15);
    CHECK(d.min_eigenvalue >= -1e-14);
}

TEST_CASE("tau_mixture knees, continuity and growth") {
    const double p0 = tau_mixture_p0();
    const double p1 = tau_mixture_p1();
    CHECK(p0 == doctest::Approx(0.626851).epsilon(1e-6));
    CHECK(p1 == doctest::Approx(0.70868).epsilon(1e-4));

    CHECK(std::abs(tau_mixture(p0)) <= 1e-14);
    const double eps = 1e-9;
    CHECK(std::abs(tau_mixture(p0 - eps) - tau_mixture(p0 + eps)) <= 1e-8);
    CHECK(std::abs(tau_mixture(p1 - eps) - tau_mixture(p1 + eps)) <= 1e-8);
    CHECK(tau_mixture(1.0) == 1.0);

    // Independent high-precision route for the middle branch.
    const long double p = 0.65L;
    const long double ref =
        p * p - (8.0L * std::sqrt(6.0L) / 9.0L) * std::sqrt(p * (1.0L - p) * (1.0L - p) * (1.0L - p));
    CHECK(std::abs(tau_mixture(0.65) - static_cast<double>(ref)) <= 1e-12);
    CHECK(tau_mixture(0.65) == doctest::Approx(0.059019).epsilon(1e-4));

    double prev = 0.0;
    for (int i = 0; i <= 1000; ++i) {
        const double p_val = p0 + (1.0 - p0) * i / 1000.0;
        const double tau = tau_mixture(p_val);
        CHECK(tau >= prev - 1e-12);
        prev = tau;
    }
    CHECK_THROWS_AS(tau_mixture(-0.1), std::invalid_argument);
    CHECK_THROWS_AS(tau_mixture(1.1), std::invalid_argument);
}

TEST_CASE("GHZ symmetry deviation: ideal state is invariant, evolution breaks it") {
    const DensityMatrix ghz = make_ghz(GhzSpec::from_a2(GhzFamily::I, 0.5));
    CHECK(ghz_symmetry_deviation(ghz) <= 1e-14);

    const DensityMatrix evolved = evolve_three_direct(ghz, std::sqrt(0.5));
    CHECK(ghz_symmetry_deviation(evolved) > 0.01);

    // W breaks the simultaneous-flip symmetry already at t=0.
    CHECK(ghz_symmetry_deviation(test::pure3(test::w_amps())) > 0.01);
}

TEST_CASE("amplitude helpers expose the raw vectors") {
    const auto v = ghz_amplitudes(GhzSpec::from_a2(GhzFamily::IV, 0.36, 0.5));
    CHECK(std::abs(v[2]) == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(std::abs(v[5]) == doctest::Approx(0.8).epsilon(1e-15));
    CHECK(std::arg(v[5]) == doctest::Approx(0.5).epsilon(1e-15));

    const auto w = w_amplitudes(WSpec::from_squares(WFamily::W2, 0.25, 0.25, 0.5, 0.3, 0.0));
    CHECK(std::abs(w[6]) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(std::abs(w[5]) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(std::abs(w[3]) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
}
