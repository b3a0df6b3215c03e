#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "entdyn/catalog.hpp"
#include "entdyn/channel.hpp"
#include "entdyn/measures.hpp"
#include "entdyn/states.hpp"

using namespace entdyn;

namespace {

DensityMatrix evolved_ghz(GhzFamily family, double a2, double delta, Amplitude P) {
    return evolve_three_direct(make_ghz(GhzSpec::from_a2(family, a2, delta)), P);
}

DensityMatrix evolved_w(WFamily family, double a2, double b2, double d1, double d2, Amplitude P) {
    return evolve_three_direct(make_w(WSpec::from_squares(family, a2, b2, 1.0 - a2 - b2, d1, d2)), P);
}

}  // namespace

TEST_CASE("Q function endpoints and agreement with the numeric negativity") {
    for (double a2 : {0.2, 0.5, 0.8}) {
        const double q1 = q_function(a2, Amplitude{1.0});
        CHECK(q1 == doctest::Approx(2.0 * std::sqrt(a2 * (1.0 - a2))).epsilon(1e-13));
        CHECK(std::abs(q_function(a2, Amplitude{0.0})) <= 1e-15);
    }
    CHECK_THROWS_AS(q_function(1.5, Amplitude{1.0}), std::invalid_argument);

    // a^2 = 0.6, lambda = 3 gamma0, gamma0 t = 1.
    const ReservoirParams res = ReservoirParams::from_ratio(3.0);
    const Amplitude P = amplitude(1.0, res);
    CHECK(P.value == doctest::Approx(0.6903).epsilon(1e-4));
    const double numeric = negativity(evolved_ghz(GhzFamily::I, 0.6, 0.0, P), Qubit::A);
    CHECK(q_function(0.6, P) == doctest::Approx(numeric).epsilon(1e-10));
}

TEST_CASE("ESD condition") {
    CHECK_FALSE(esd_condition(0.5, Amplitude{1.0}));
    CHECK(esd_condition(0.0, Amplitude{0.9}));
    CHECK(esd_condition(0.0, Amplitude{1.0}));

    // Threshold for a^2 = 0.2: (1-P^2)^3 = 1/4, solved numerically.
    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);  // mid is P^2
        (std::pow(1.0 - mid, 3) > 0.25 ? lo : hi) = mid;
    }
    const double p2_threshold = 0.5 * (lo + hi);
    CHECK(p2_threshold == doctest::Approx(0.37004).epsilon(1e-4));
    CHECK(esd_condition(0.2, Amplitude{std::sqrt(p2_threshold - 1e-9)}));
    CHECK_FALSE(esd_condition(0.2, Amplitude{std::sqrt(p2_threshold + 1e-9)}));
}

TEST_CASE("ESD time: threshold crossing, no-death case, instant case") {
    const ReservoirParams res = ReservoirParams::from_ratio(3.0);

    const auto t_star = esd_time(0.2, res);
    REQUIRE(t_star.has_value());
    // The condition and Q share the same root; cross-check via Q's sign change.
    CHECK(q_function(0.2, amplitude(*t_star - 1e-4, res)) > 0.0);
    CHECK(q_function(0.2, amplitude(*t_star + 1e-4, res)) < 0.0);
    // Root of (1-P^2)^3 = 1/4 under the Markovian closed form.
    CHECK(*t_star == doctest::Approx(1.224526).epsilon(1e-4));

    CHECK(!esd_time(0.6, res).has_value());
    CHECK(esd_time(0.0, res).value() == 0.0);
    CHECK_THROWS_AS(esd_time(0.2, ReservoirParams::from_ratio(0.5)), std::invalid_argument);
}

TEST_CASE("closed pi-tangles equal the numeric engine on spot grids") {
    const double deltas[4] = {0.0, 0.4, 2.1, 5.0};
    int k = 0;
    for (GhzFamily family : {GhzFamily::I, GhzFamily::II, GhzFamily::III, GhzFamily::IV}) {
        const double delta = deltas[k++ % 4];
        for (double a2 : {0.1, 0.35, 0.62, 0.9}) {
            for (double P : {1.0, 0.83, 0.55, 0.21, 0.0, -0.47, -0.9}) {
                const GhzPiClosed closed = pi_ghz_closed(family, a2, Amplitude{P});
                const PiTangleReport num = pi_tangle(evolved_ghz(family, a2, delta, Amplitude{P}));
                CHECK(std::abs(closed.pi - num.pi) <= 1e-10);
                for (int q = 0; q < 3; ++q)
                    CHECK(std::abs(closed.one_vs_rest[q] - num.one_vs_rest[q]) <= 1e-10);
            }
        }
    }
}

TEST_CASE("pi closed forms at P=1 reduce to 4 a^2 b^2 for every family") {
    for (GhzFamily family : {GhzFamily::I, GhzFamily::II, GhzFamily::III, GhzFamily::IV})
        for (double a2 : {0.15, 0.5, 0.77})
            CHECK(pi_ghz_closed(family, a2, Amplitude{1.0}).pi ==
                  doctest::Approx(4.0 * a2 * (1.0 - a2)).epsilon(1e-12));
}

TEST_CASE("type III mirrors type II under a <-> b") {
    for (double a2 : {0.2, 0.45, 0.7}) {
        for (double P : {0.9, 0.5, -0.3}) {
            const GhzPiClosed two = pi_ghz_closed(GhzFamily::II, a2, Amplitude{P});
            const GhzPiClosed three = pi_ghz_closed(GhzFamily::III, 1.0 - a2, Amplitude{P});
            // N_A(BC), N_B(AC) of III equal N_(AB)C, N_A(BC) of II.
            CHECK(three.one_vs_rest[0] == doctest::Approx(two.one_vs_rest[2]).epsilon(1e-13));
            CHECK(three.one_vs_rest[1] == doctest::Approx(two.one_vs_rest[0]).epsilon(1e-13));
        }
    }
}

TEST_CASE("family ordering flips between small and large a^2 (non-Markovian)") {
    const ReservoirParams res = ReservoirParams::from_ratio(0.001);
    for (int i = 0; i <= 60; ++i) {
        const Amplitude P = amplitude(150.0 * i / 60.0, res);
        const double lo1 = pi_ghz_closed(GhzFamily::I, 0.1, P).pi;
        const double lo2 = pi_ghz_closed(GhzFamily::II, 0.1, P).pi;
        const double lo3 = pi_ghz_closed(GhzFamily::III, 0.1, P).pi;
        CHECK(lo3 >= lo2 - 1e-10);
        CHECK(lo2 >= lo1 - 1e-10);
        const double hi1 = pi_ghz_closed(GhzFamily::I, 0.9, P).pi;
        const double hi2 = pi_ghz_closed(GhzFamily::II, 0.9, P).pi;
        const double hi3 = pi_ghz_closed(GhzFamily::III, 0.9, P).pi;
        CHECK(hi1 >= hi2 - 1e-10);
        CHECK(hi2 >= hi3 - 1e-10);
    }
}

TEST_CASE("tau upper bounds") {
    for (GhzFamily family : {GhzFamily::I, GhzFamily::II, GhzFamily::III}) {
        for (double a2 : {0.25, 0.5, 0.75}) {
            CHECK(tau_upper_bound(family, a2, Amplitude{1.0}) ==
                  doctest::Approx(4.0 * a2 * (1.0 - a2)).epsilon(1e-12));
            CHECK(std::abs(tau_upper_bound(family, a2, Amplitude{0.0})) <= 1e-15);
        }
    }
    // Type II at a^2 = 1/2, P^2 = 1/2: 4 * 1/4 * 1/4 / (3/4) = 1/3.
    CHECK(tau_upper_bound(GhzFamily::II, 0.5, Amplitude{std::sqrt(0.5)}) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-13));
    CHECK_THROWS_AS(tau_upper_bound(GhzFamily::IV, 0.5, Amplitude{1.0}), std::invalid_argument);

    // The type-II bound equals lambda_2 times the residual of |phi_II>.
    for (double a2 : {0.3, 0.6}) {
        for (double P : {0.9, 0.6, 0.35}) {
            const double p2 = P * P;
            const double lam = p2 * (a2 + (1.0 - a2) * p2);
            const double n2 = a2 + (1.0 - a2) * p2;
            const double tau_phi = 4.0 * a2 * (1.0 - a2) * p2 / (n2 * n2);
            CHECK(tau_upper_bound(GhzFamily::II, a2, Amplitude{P}) ==
                  doctest::Approx(lam * tau_phi).epsilon(1e-12));
        }
    }
}

TEST_CASE("spectral decompositions reconstruct the evolved states") {
    for (GhzFamily family : {GhzFamily::I, GhzFamily::II, GhzFamily::III}) {
        for (double a2 : {0.0, 0.3, 0.5, 0.9, 1.0}) {
            for (double P : {1.0, 0.8, 0.5, 0.0, -0.66}) {
                const double delta = 0.8;
                const SpectralDecomposition sd = spectral_ghz(family, a2, delta, Amplitude{P});
                double total = 0.0;
                for (double w : sd.weights) {
                    CHECK(w >= -1e-14);
                    total += w;
                }
                CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
                const DensityMatrix ref = evolved_ghz(family, a2, delta, Amplitude{P});
                CHECK(sd.reconstruct().max_abs_diff(ref.matrix()) <= 1e-12);
            }
        }
    }
}

TEST_CASE("type I spectral weights sum via the closed expression") {
    // Lambda+ + Lambda- = 1 - 3 b^2 P^2 (1-P^2); the six projector weights
    // supply the rest of the trace.
    for (double a2 : {0.2, 0.6}) {
        for (double P : {0.9, 0.4}) {
            const SpectralDecomposition sd = spectral_ghz(GhzFamily::I, a2, 0.0, Amplitude{P});
            const double b2 = 1.0 - a2, p2 = P * P, u = 1.0 - p2;
            CHECK(sd.weights[0] + sd.weights[1] ==
                  doctest::Approx(1.0 - 3.0 * b2 * p2 * u).epsilon(1e-13));
        }
    }
}

TEST_CASE("type II spectral decomposition at P=1 is the pure state") {
    const SpectralDecomposition sd = spectral_ghz(GhzFamily::II, 0.4, 0.3, Amplitude{1.0});
    CHECK(sd.weights[0] == doctest::Approx(1.0).epsilon(1e-14));
    for (size_t k = 1; k < sd.weights.size(); ++k) CHECK(std::abs(sd.weights[k]) <= 1e-14);
}

TEST_CASE("W1 closed form matches the numeric engine (including phases)") {
    for (const auto& [a2, b2] : std::vector<std::pair<double, double>>{
             {1.0 / 3, 1.0 / 3}, {0.5, 0.25}, {0.2, 0.5}, {0.6, 0.1}}) {
        const WSpec spec = WSpec::from_squares(WFamily::W1, a2, b2, 1.0 - a2 - b2, 0.3, 1.2);
        for (double P : {1.0, 0.8, 0.55, 0.3, 0.0, -0.6}) {
            const WPiClosed closed = pi_w1_closed(spec.a, spec.b, spec.c, Amplitude{P});
            const PiTangleReport num =
                pi_tangle(evolved_w(WFamily::W1, a2, b2, 0.3, 1.2, Amplitude{P}));
            CHECK(std::abs(closed.pi - num.pi) <= 1e-9);
            for (int q = 0; q < 3; ++q) {
                CHECK(std::abs(closed.one_vs_rest[q] - num.one_vs_rest[q]) <= 1e-10);
                CHECK(std::abs(closed.pairs[q] - num.pairs[q]) <= 1e-10);
            }
            // The explicit pi expression agrees with its own pieces.
            const auto sq = [](double x) { return x * x; };
            const double assembled =
                (sq(closed.one_vs_rest[0]) + sq(closed.one_vs_rest[1]) + sq(closed.one_vs_rest[2]) -
                 2.0 * (sq(closed.pairs[0]) + sq(closed.pairs[1]) + sq(closed.pairs[2]))) /
                3.0;
            CHECK(closed.pi == doctest::Approx(assembled).epsilon(1e-11));
        }
    }
    CHECK_THROWS_AS(pi_w1_closed(1.0, 1.0, 1.0, Amplitude{1.0}), std::invalid_argument);
}

TEST_CASE("W1 closed form endpoints") {
    const double s = std::sqrt(1.0 / 3.0);
    CHECK(pi_w1_closed(s, s, s, Amplitude{1.0}).pi ==
          doctest::Approx(4.0 * (std::sqrt(5.0) - 1.0) / 9.0).epsilon(1e-12));
    const WPiClosed dead = pi_w1_closed(s, s, s, Amplitude{0.0});
    CHECK(std::abs(dead.pi) <= 1e-15);
    for (int q = 0; q < 3; ++q) {
        CHECK(std::abs(dead.one_vs_rest[q]) <= 1e-15);
        CHECK(std::abs(dead.pairs[q]) <= 1e-15);
    }
}

TEST_CASE("symmetric W2 closed form") {
    // P = 1 must land on the W anchor through the (sqrt5 - 1) arithmetic.
    const WPiClosed at1 = pi_w2_symmetric_closed(Amplitude{1.0});
    CHECK(at1.pi == doctest::Approx(4.0 * (std::sqrt(5.0) - 1.0) / 9.0).epsilon(1e-12));
    CHECK(at1.pairs[0] == doctest::Approx((std::sqrt(5.0) - 1.0) / 3.0).epsilon(1e-12));

    // Knee continuity at P^2 = 2 - sqrt(2).
    const double knee = 2.0 - std::sqrt(2.0);
    const double below = pi_w2_symmetric_closed(Amplitude{std::sqrt(knee - 1e-9)}).pairs[0];
    const double above = pi_w2_symmetric_closed(Amplitude{std::sqrt(knee + 1e-9)}).pairs[0];
    CHECK(below == 0.0);
    CHECK(std::abs(above) <= 1e-8);

    // Below the knee the pair negativity vanishes and pi = N^2.
    const Amplitude P{std::sqrt(0.5)};
    const WPiClosed mid = pi_w2_symmetric_closed(P);
    CHECK(mid.pairs[0] == 0.0);
    CHECK(mid.pi == doctest::Approx(mid.one_vs_rest[0] * mid.one_vs_rest[0]).epsilon(1e-14));

    // Numeric oracle across a grid, both signs of P.
    for (double Pv : {1.0, 0.9, 0.766, 0.7, 0.5, 0.2, 0.0, -0.8}) {
        const PiTangleReport num =
            pi_tangle(evolved_w(WFamily::W2, 1.0 / 3, 1.0 / 3, 0.4, 2.1, Amplitude{Pv}));
        const WPiClosed closed = pi_w2_symmetric_closed(Amplitude{Pv});
        CHECK(std::abs(closed.pi - num.pi) <= 1e-9);
        CHECK(std::abs(closed.one_vs_rest[0] - num.one_vs_rest[0]) <= 1e-10);
        CHECK(std::abs(closed.pairs[0] - num.pairs[0]) <= 1e-10);
    }
}

TEST_CASE("sigma_II spectral decomposition") {
    const double d1 = 0.9, d2 = 2.3;
    const SpectralDecomposition sd = sigma_w2_spectral(d1, d2);

    // Orthonormal vectors.
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) {
            cplx dot = 0.0;
            for (int k = 0; k < 8; ++k) dot += std::conj(sd.vectors[i][k]) * sd.vectors[j][k];
            CHECK(std::abs(dot - (i == j ? cplx{1.0, 0.0} : cplx{0.0, 0.0})) <= 1e-15);
        }

    // Direct assembly of sigma_II for symmetric amplitudes.
    ComplexMatrix sigma(8);
    const double third = 1.0 / 3.0;
    sigma(1, 1) = sigma(2, 2) = sigma(4, 4) = third;
    sigma(1, 2) = (1.0 / 6.0) * std::polar(1.0, d1);
    sigma(1, 4) = (1.0 / 6.0) * std::polar(1.0, d2);
    sigma(2, 4) = (1.0 / 6.0) * std::polar(1.0, -(d1 - d2));
    sigma(2, 1) = std::conj(sigma(1, 2));
    sigma(4, 1) = std::conj(sigma(1, 4));
    sigma(4, 2) = std::conj(sigma(2, 4));
    CHECK(sd.reconstruct().max_abs_diff(sigma) <= 1e-14);

    // Assembled rho^W_II(t) equals the channel evolution of |W2>.
    for (double P : {0.85, 0.5, -0.4}) {
        const double p2 = P * P, u = 1.0 - p2;
        const DensityMatrix w2 = make_w(WSpec::from_squares(WFamily::W2, third, third, third, d1, d2));
        ComplexMatrix assembled(8);
        assembled(0, 0) = u * u;
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) assembled(i, j) += p2 * p2 * w2(i, j);
        const ComplexMatrix sig = sd.reconstruct();
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) assembled(i, j) += 2.0 * p2 * u * sig(i, j);
        CHECK(assembled.max_abs_diff(evolve_three_direct(w2, P).matrix()) <= 1e-12);
    }
}

TEST_CASE("closed W concurrences match the Wootters oracle") {
    const double s = std::sqrt(1.0 / 3.0);
    CHECK(concurrence_w_closed(WFamily::W1, s, s, s, Amplitude{1.0})[0] ==
          doctest::Approx(2.0 / 3.0).epsilon(1e-13));

    // Type II at small P is fully dead (ESD).
    const auto dead = concurrence_w_closed(WFamily::W2, s, s, s, Amplitude{0.4});
    for (double c : dead) CHECK(c == 0.0);

    for (WFamily family : {WFamily::W1, WFamily::W2}) {
        for (const auto& [a2, b2] : std::vector<std::pair<double, double>>{
                 {1.0 / 3, 1.0 / 3}, {0.5, 0.25}, {0.2, 0.5}}) {
            const WSpec spec = WSpec::from_squares(family, a2, b2, 1.0 - a2 - b2, 0.0, 0.0);
            const DensityMatrix rho0 = make_w(spec);
            for (int i = 0; i <= 20; ++i) {
                const double P = i / 20.0;
                const DensityMatrix rho = evolve_three_direct(rho0, P);
                const auto closed = concurrence_w_closed(family, spec.a, spec.b, spec.c, Amplitude{P});
                CHECK(std::abs(closed[0] - concurrence(partial_trace(rho, {Qubit::A, Qubit::B}))) <= 1e-10);
                CHECK(std::abs(closed[1] - concurrence(partial_trace(rho, {Qubit::A, Qubit::C}))) <= 1e-10);
                CHECK(std::abs(closed[2] - concurrence(partial_trace(rho, {Qubit::B, Qubit::C}))) <= 1e-10);
            }
        }
    }
}

TEST_CASE("closed pi vanishes at the decoherence zeros") {
    const double s = std::sqrt(1.0 / 3.0);
    for (double ratio : {0.01, 0.001}) {
        const ReservoirParams res = ReservoirParams::from_ratio(ratio);
        for (double tn : amplitude_zeros(res, 5)) {
            const Amplitude P = amplitude(tn, res);
            for (GhzFamily family : {GhzFamily::I, GhzFamily::II, GhzFamily::III, GhzFamily::IV})
                CHECK(pi_ghz_closed(family, 0.5, P).pi <= 1e-9);
            CHECK(pi_w1_closed(s, s, s, P).pi <= 1e-9);
            CHECK(pi_w2_symmetric_closed(P).pi <= 1e-9);
        }
    }
}
