#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <doctest.h>

#include "lk/diagnostics.hpp"

using namespace lk;

namespace {

const double kPi = std::acos(-1.0);

// strip characteristic reduces to a one-variable maximization:
//   sup_x 2 / (sqrt(1+x^2) (arctan x + delta)),  delta = pi (b+a)/(b-a)
double strip_H_oracle(double a, double b) {
    const double delta = kPi * (b + a) / (b - a);
    double best = 0.0;
    const int n = 2'000'000;
    for (int i = 0; i <= n; ++i) {
        const double u = -0.5 * kPi + 1e-9 + (kPi - 2e-9) * i / n;
        const double x = std::tan(u);
        best = std::max(best, 2.0 / (std::sqrt(1.0 + x * x) * (std::atan(x) + delta)));
    }
    return best;
}

}  // namespace

TEST_CASE("characteristic of the constant term vanishes") {
    CHECK(estimate_H(DrivingTerm::constant(Complex{1.0, 0.0}), 0.0) == 0.0);
    CHECK(estimate_H(DrivingTerm::constant(Complex{2.0, 1.5}), 0.0) == 0.0);
}

TEST_CASE("sector characteristic equals twice the opening exponent") {
    for (const double alpha : {0.25, 0.5, 0.75}) {
        const double H = estimate_H(DrivingTerm::sector_from_alpha(alpha), 0.0);
        CHECK(std::abs(H - 2.0 * alpha) / (2.0 * alpha) < 0.02);
    }
}

TEST_CASE("strip characteristic matches the one-variable reduction") {
    for (const auto& [a, b] : std::vector<std::pair<double, double>>{{0.5, 2.0}, {0.9, 1.2}}) {
        const double H = estimate_H(DrivingTerm::strip(a, b), 0.0);
        const double oracle = strip_H_oracle(a, b);
        CHECK(std::abs(H - oracle) / oracle < 0.02);
    }
}

TEST_CASE("characteristic estimate converges under grid refinement") {
    const DrivingTerm term = DrivingTerm::sector(2.0);
    const double coarse = estimate_H(term, 0.0, 64, 64);
    const double fine = estimate_H(term, 0.0, 512, 512);
    CHECK(std::abs(fine - coarse) / fine < 0.01);
    CHECK(fine >= coarse - 1e-12);  // finer grid can only find a larger sup
}

TEST_CASE("composition never increases the characteristic") {
    std::mt19937 rng(41);
    std::uniform_real_distribution<double> rad(0.0, 0.6), ang(0.0, 2.0 * kPi);
    const DrivingTerm base = DrivingTerm::sector_from_alpha(0.5);
    const double H_base = estimate_H(base, 0.0, 128, 128);
    for (int trial = 0; trial < 12; ++trial) {
        SelfMap phi;
        if (trial < 6) {
            phi = SelfMap{ang(rng), Complex{0.0, 0.0}, false};  // pure rotation
        } else {
            phi = SelfMap{ang(rng), std::polar(rad(rng), ang(rng)), trial % 2 == 0};
        }
        const double H_comp = estimate_H(DrivingTerm::composed(base, phi), 0.0, 128, 128);
        CAPTURE(trial);
        CHECK(H_comp <= H_base + 1e-3);
    }
}

TEST_CASE("growth fit of the constant term is flat") {
    const GrowthFit fit = fit_growth(DrivingTerm::constant(Complex{1.0, 0.0}), GrowthCondition::Est1, 0.0);
    CHECK(std::abs(fit.C - 1.0) < 1e-6);
    CHECK(std::abs(fit.alpha) < 1e-6);
    CHECK(fit.satisfied);
}

TEST_CASE("half-plane ratio grows like the inverse square root") {
    const GrowthFit fit = fit_growth(DrivingTerm::half_plane(0.3), GrowthCondition::Est1, 0.0);
    CHECK(std::abs(fit.alpha - 0.5) < 0.05);
    CHECK(fit.satisfied);
}

TEST_CASE("sector lower bound recovers the opening exponent") {
    const double alpha0 = 0.5;
    const GrowthFit fit =
        fit_growth(DrivingTerm::sector_from_alpha(alpha0), GrowthCondition::Est2, 0.0);
    CHECK(std::abs(fit.alpha - alpha0) < 0.05);
    CHECK(fit.satisfied);
    // the fitted floor really is a floor: spot-check Re p >= (1-r)^a/(1+r)^a shape
    const DrivingTerm term = DrivingTerm::sector_from_alpha(alpha0);
    for (double r : {0.9, 0.99, 0.999}) {
        double min_re = 1e300;
        for (int j = 0; j < 512; ++j) {
            min_re = std::min(min_re,
                              term.evaluate(std::polar(r, 2.0 * kPi * j / 512.0), 0.0).real());
        }
        const double floor = std::pow((1.0 - r) / (1.0 + r), alpha0);
        CHECK(min_re >= floor * 0.999);
    }
}

TEST_CASE("hypothesis verdicts for the catalogue") {
    const auto hp = check_hypotheses(DrivingTerm::half_plane(0.3));
    REQUIRE(hp.count("theorem3_halfplane") == 1);
    CHECK(hp.at("theorem3_halfplane").verdict == Verdict::HoldsOnGrid);
    CHECK(hp.at("theorem3_halfplane").value >= 0.3 - 1e-9);

    const auto sec = check_hypotheses(DrivingTerm::sector(1.0));
    REQUIRE(sec.count("theorem5_sector") == 1);
    CHECK(sec.at("theorem5_sector").verdict == Verdict::HoldsOnGrid);

    const auto pk = check_hypotheses(DrivingTerm::point_kernel(0.0));
    REQUIRE(pk.count("theorem4_strip") == 1);
    CHECK(pk.at("theorem4_strip").verdict == Verdict::Fails);

    const auto st = check_hypotheses(DrivingTerm::strip(0.5, 2.0));
    CHECK(st.at("theorem4_strip").verdict == Verdict::HoldsOnGrid);
    CHECK(st.at("theorem2_regularity").verdict == Verdict::HoldsOnGrid);
}

TEST_CASE("square-root norm of sampled drivers") {
    std::vector<double> t, flat, sqrt_like, linear;
    const int n = 2000;
    for (int i = 0; i <= n; ++i) {
        const double ti = static_cast<double>(i) / n;
        t.push_back(ti);
        flat.push_back(0.7);
        sqrt_like.push_back(std::sqrt(ti));
        linear.push_back(ti);
    }
    CHECK(driver_sqrt_norm(t, flat, 0.1).value == 0.0);
    CHECK(driver_sqrt_norm(t, flat, 0.1).empty_window == false);

    // |sqrt(t)-sqrt(s)|/sqrt(t-s) peaks at s=0 with value 1
    const SqrtNorm s = driver_sqrt_norm(t, sqrt_like, 1.1);
    CHECK(s.value == doctest::Approx(1.0).epsilon(1e-6));

    // linear driver: quotient sqrt(|t-s|), maximized at the window edge
    const SqrtNorm l = driver_sqrt_norm(t, linear, 0.25);
    CHECK(l.value == doctest::Approx(0.5).epsilon(0.01));

    // window smaller than any sample gap
    const SqrtNorm e = driver_sqrt_norm(t, linear, 1e-9);
    CHECK(e.value == 0.0);
    CHECK(e.empty_window);
}

TEST_CASE("full report wires the pieces together") {
    const DiagnosticsReport rep = make_report(DrivingTerm::sector_from_alpha(0.5), 0.0);
    CHECK(std::abs(rep.H - 1.0) < 0.02);
    REQUIRE(rep.predicted_holder.has_value());
    CHECK(std::abs(*rep.predicted_holder - 0.5) < 0.01);
    CHECK(rep.est1.satisfied);
    CHECK(rep.est2.satisfied);
    CHECK(rep.hypotheses.at("theorem5_sector").verdict == Verdict::HoldsOnGrid);
    CHECK(rep.hypotheses.at("theorem2_regularity").verdict == Verdict::HoldsOnGrid);
}

TEST_CASE("boundary derivative bound tracks the characteristic") {
    // Re(z p'(z))/Re p <= H/(2(1-r)) (1+o(1)): sampled check for the sector
    const double alpha = 0.5;
    const DrivingTerm term = DrivingTerm::sector_from_alpha(alpha);
    const double H = estimate_H(term, 0.0);
    for (double r : {0.9, 0.99, 0.999}) {
        for (int j = 0; j < 256; ++j) {
            const Complex z = std::polar(r, 2.0 * kPi * j / 256.0);
            const Complex p = term.evaluate(z, 0.0);
            const Complex dp = term.evaluate_derivative(z, 0.0);
            const double lhs = (z * dp).real() / p.real();
            CHECK(lhs <= H * 1.05 / (2.0 * (1.0 - r)));
        }
    }
}
