#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "entdyn/catalog.hpp"
#include "entdyn/channel.hpp"
#include "entdyn/measures.hpp"
#include "entdyn/sweep.hpp"

namespace entdyn {

namespace {

class AuditRun {
public:
    explicit AuditRun(double tolerance) : tol_(tolerance) {}

    void record(const std::string& check, const std::string& location, double value, double bound) {
        ++report_.checks;
        if (value > report_.worst_gap) {
            report_.worst_gap = value;
            report_.worst_gap_location = check + " @ " + location;
        }
        if (value > bound) {
            ++report_.violation_count;
            if (report_.violations.size() < 50)
                report_.violations.push_back({check, location, value, bound});
        }
    }

    void require(const std::string& check, const std::string& location, bool ok) {
        ++report_.checks;
        if (!ok) {
            ++report_.violation_count;
            if (report_.violations.size() < 50)
                report_.violations.push_back({check, location, 1.0, 0.0});
        }
    }

    double tol() const { return tol_; }
    AuditReport take() { return std::move(report_); }

private:
    double tol_;
    AuditReport report_;
};

std::string loc(const char* fam, double a2, double ratio, double t) {
    std::ostringstream os;
    os << fam << " a2=" << a2 << " lambda/gamma0=" << ratio << " gamma0_t=" << t;
    return os.str();
}

DensityMatrix random_density(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix g(8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) g(i, j) = cplx{gauss(rng), gauss(rng)};
    ComplexMatrix w = g * g.adjoint();
    const double tr = w.trace().real();
    ComplexMatrix m(8);
    for (int i = 0; i < 8; ++i) {
        m(i, i) = cplx{w(i, i).real() / tr, 0.0};
        for (int j = i + 1; j < 8; ++j) {
            const cplx v = 0.5 * (w(i, j) + std::conj(w(j, i))) / tr;
            m(i, j) = v;
            m(j, i) = std::conj(v);
        }
    }
    return DensityMatrix(3, std::move(m));
}

// Closed-form pi-tangles against the numeric engine, both regimes, with
// nonzero phases to exercise the full evolution tables.
void audit_closed_vs_numeric(AuditRun& run) {
    const double regimes[2] = {3.0, 0.01};
    const double t_max[2] = {5.0, 50.0};
    const int n_t = 31;

    for (GhzFamily family : {GhzFamily::I, GhzFamily::II, GhzFamily::III, GhzFamily::IV}) {
        const char* name = family == GhzFamily::I    ? "ghz1"
                           : family == GhzFamily::II ? "ghz2"
                           : family == GhzFamily::III ? "ghz3"
                                                       : "ghz4";
        for (int r = 0; r < 2; ++r) {
            const ReservoirParams res = ReservoirParams::from_ratio(regimes[r]);
            for (int k = 0; k < 20; ++k) {
                const double a2 = 0.025 + 0.05 * k;
                const GhzSpec spec = GhzSpec::from_a2(family, a2, 0.4);
                const DensityMatrix rho0 = make_ghz(spec);
                for (int i = 0; i < n_t; ++i) {
                    const double t = t_max[r] * i / (n_t - 1);
                    const Amplitude P = amplitude(t, res);
                    const PiTangleReport num = pi_tangle(evolve_three_direct(rho0, P));
                    const double closed = pi_ghz_closed(family, a2, P).pi;
                    run.record("pi_closed_vs_numeric", loc(name, a2, regimes[r], t),
                               std::abs(closed - num.pi), run.tol());
                    for (int q = 0; q < 3; ++q)
                        run.record("ghz_two_tangle_zero", loc(name, a2, regimes[r], t),
                                   num.pairs[q], 1e-10);
                }
            }
        }
    }

    for (int r = 0; r < 2; ++r) {
        const ReservoirParams res = ReservoirParams::from_ratio(regimes[r]);
        for (int k = 0; k < 20; ++k) {
            // Deterministic lattice of (a^2, b^2) pairs inside the simplex.
            const double a2 = 0.04 + 0.045 * k;
            const double b2 = (1.0 - a2) * (0.25 + 0.5 * (k % 4) / 3.0);
            const double c2 = 1.0 - a2 - b2;
            const WSpec spec = WSpec::from_squares(WFamily::W1, a2, b2, c2, 0.3, 1.2);
            const DensityMatrix rho0 = make_w(spec);
            for (int i = 0; i < n_t; ++i) {
                const double t = t_max[r] * i / (n_t - 1);
                const Amplitude P = amplitude(t, res);
                const PiTangleReport num = pi_tangle(evolve_three_direct(rho0, P));
                const double closed = pi_w1_closed(spec.a, spec.b, spec.c, P).pi;
                run.record("pi_closed_vs_numeric", loc("w1", a2, regimes[r], t),
                           std::abs(closed - num.pi), run.tol());
            }
        }
    }

    const WSpec w2 = WSpec::from_squares(WFamily::W2, 1.0 / 3, 1.0 / 3, 1.0 / 3, 0.7, 2.0);
    const DensityMatrix w2_rho0 = make_w(w2);
    for (int r = 0; r < 2; ++r) {
        const ReservoirParams res = ReservoirParams::from_ratio(regimes[r]);
        for (int i = 0; i < 301; ++i) {
            const double t = t_max[r] * i / 300.0;
            const Amplitude P = amplitude(t, res);
            const PiTangleReport num = pi_tangle(evolve_three_direct(w2_rho0, P));
            const double closed = pi_w2_symmetric_closed(P).pi;
            run.record("pi_closed_vs_numeric", loc("w2", 1.0 / 3, regimes[r], t),
                       std::abs(closed - num.pi), run.tol());
        }
    }
}

void audit_kraus_vs_direct(AuditRun& run) {
    std::mt19937_64 rng(0x5eedba5eull);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int s = 0; s < 100; ++s) {
        const DensityMatrix rho = random_density(rng);
        for (int k = 0; k < 10; ++k) {
            const double P = unif(rng);
            const DensityMatrix direct = evolve_three_direct(rho, P);
            const DensityMatrix kraus = evolve_three_kraus(rho, P);
            std::ostringstream os;
            os << "state#" << s << " P=" << P;
            run.record("kraus_vs_direct", os.str(), direct.matrix().max_abs_diff(kraus.matrix()),
                       1e-13);
        }
    }
}

void audit_esd_indicator(AuditRun& run) {
    const ReservoirParams res = ReservoirParams::from_ratio(3.0);
    for (int k = 0; k <= 40; ++k) {
        const double a2 = k / 40.0;
        for (int i = 0; i <= 100; ++i) {
            const double t = 5.0 * i / 100.0;
            const Amplitude P = amplitude(t, res);
            const double q = q_function(a2, P);
            if (std::abs(q) < 1e-12) continue;  // indicator undecidable at fp boundary
            const bool dead = pi_ghz_closed(GhzFamily::I, a2, P).pi == 0.0;
            run.require("esd_indicator_matches_condition", loc("ghz1", a2, 3.0, t),
                        dead == esd_condition(a2, P));
        }
    }
}

void audit_orderings(AuditRun& run) {
    // Fig. 3: lambda = 0.001 gamma0; type ordering flips between small and
    // large a^2.
    const ReservoirParams res = ReservoirParams::from_ratio(0.001);
    for (double a2 : {0.1, 0.9}) {
        for (int i = 0; i <= 200; ++i) {
            const double t = 150.0 * i / 200.0;
            const Amplitude P = amplitude(t, res);
            const double pi1 = pi_ghz_closed(GhzFamily::I, a2, P).pi;
            const double pi2 = pi_ghz_closed(GhzFamily::II, a2, P).pi;
            const double pi3 = pi_ghz_closed(GhzFamily::III, a2, P).pi;
            const double lo = a2 < 0.5 ? pi1 : pi3;
            const double hi = a2 < 0.5 ? pi3 : pi1;
            run.record("ghz_family_ordering", loc("ghz", a2, 0.001, t),
                       std::max(pi2 - hi, std::max(lo - pi2, 0.0)), 1e-10);
        }
    }

    // W robustness: type I beats type II for the pi-tangle and the
    // concurrences, in both regimes.
    const double s = std::sqrt(1.0 / 3.0);
    for (double ratio : {3.0, 0.01, 0.001}) {
        const ReservoirParams res_w = ReservoirParams::from_ratio(ratio);
        const double t_max = ratio > 2.0 ? 5.0 : (ratio > 0.005 ? 50.0 : 150.0);
        for (int i = 0; i <= 200; ++i) {
            const double t = t_max * i / 200.0;
            const Amplitude P = amplitude(t, res_w);
            const double pi_1 = pi_w1_closed(s, s, s, P).pi;
            const double pi_2 = pi_w2_symmetric_closed(P).pi;
            run.record("w_pi_robustness", loc("w", 1.0 / 3, ratio, t), pi_2 - pi_1, 1e-10);
            const auto c1 = concurrence_w_closed(WFamily::W1, s, s, s, P);
            const auto c2 = concurrence_w_closed(WFamily::W2, s, s, s, P);
            for (int q = 0; q < 3; ++q)
                run.record("w_concurrence_robustness", loc("w", 1.0 / 3, ratio, t),
                           c2[q] - c1[q], 1e-10);
        }
    }
}

void audit_concurrence_closed(AuditRun& run) {
    const double regimes[2] = {3.0, 0.01};
    const double t_max[2] = {5.0, 50.0};
    const std::pair<double, double> squares[5] = {
        {1.0 / 3, 1.0 / 3}, {0.5, 0.25}, {0.2, 0.5}, {0.6, 0.1}, {0.15, 0.15}};
    for (WFamily family : {WFamily::W1, WFamily::W2}) {
        const char* name = family == WFamily::W1 ? "w1" : "w2";
        for (int r = 0; r < 2; ++r) {
            const ReservoirParams res = ReservoirParams::from_ratio(regimes[r]);
            for (const auto& [a2, b2] : squares) {
                const WSpec spec = WSpec::from_squares(family, a2, b2, 1.0 - a2 - b2, 0.5, 1.7);
                const DensityMatrix rho0 = make_w(spec);
                for (int i = 0; i < 21; ++i) {
                    const double t = t_max[r] * i / 20.0;
                    const Amplitude P = amplitude(t, res);
                    const DensityMatrix rho = evolve_three_direct(rho0, P);
                    const auto closed = concurrence_w_closed(family, spec.a, spec.b, spec.c, P);
                    const double num[3] = {
                        concurrence(partial_trace(rho, {Qubit::A, Qubit::B})),
                        concurrence(partial_trace(rho, {Qubit::A, Qubit::C})),
                        concurrence(partial_trace(rho, {Qubit::B, Qubit::C}))};
                    for (int q = 0; q < 3; ++q)
                        run.record("concurrence_closed_vs_wootters", loc(name, a2, regimes[r], t),
                                   std::abs(closed[q] - num[q]), run.tol());
                }
            }
        }
    }
}

void audit_nonmarkovian_vanishing(AuditRun& run) {
    const double s = std::sqrt(1.0 / 3.0);
    for (double ratio : {0.01, 0.001}) {
        const ReservoirParams res = ReservoirParams::from_ratio(ratio);
        const std::vector<double> zeros = amplitude_zeros(res, 3);
        for (double tn : zeros) {
            const Amplitude P = amplitude(tn, res);
            for (double a2 : {0.3, 0.5, 0.7})
                for (GhzFamily family : {GhzFamily::I, GhzFamily::II, GhzFamily::III, GhzFamily::IV})
                    run.record("pi_vanishes_at_tn", loc("ghz", a2, ratio, tn),
                               pi_ghz_closed(family, a2, P).pi, 1e-9);
            run.record("pi_vanishes_at_tn", loc("w1", 1.0 / 3, ratio, tn),
                       pi_w1_closed(s, s, s, P).pi, 1e-9);
            run.record("pi_vanishes_at_tn", loc("w2", 1.0 / 3, ratio, tn),
                       pi_w2_symmetric_closed(P).pi, 1e-9);
        }
    }
}

}  // namespace

AuditReport run_audit(double tolerance) {
    if (!(tolerance > 0.0)) throw std::invalid_argument("run_audit: tolerance must be positive");
    AuditRun run(tolerance);
    audit_closed_vs_numeric(run);
    audit_kraus_vs_direct(run);
    audit_esd_indicator(run);
    audit_orderings(run);
    audit_concurrence_closed(run);
    audit_nonmarkovian_vanishing(run);
    return run.take();
}

std::string audit_summary(const AuditReport& report) {
    std::ostringstream os;
    os << "audit: " << report.checks << " checks, " << report.violation_count << " violations\n";
    os << "worst gap: " << report.worst_gap;
    if (!report.worst_gap_location.empty()) os << " (" << report.worst_gap_location << ")";
    os << "\n";
    for (const AuditViolation& v : report.violations)
        os << "violation: " << v.check << " @ " << v.location << " value=" << v.value
           << " bound=" << v.bound << "\n";
    if (report.violation_count > static_cast<long>(report.violations.size()))
        os << "(" << (report.violation_count - report.violations.size()) << " more suppressed)\n";
    return os.str();
}

}  // namespace entdyn
