#include <cmath>
#include <complex>
#include <vector>

#include <doctest.h>

#include "lk/boundary.hpp"

using namespace lk;

namespace {

const double kPi = std::acos(-1.0);

FlowField make_field(DrivingTerm term, double horizon) {
    FlowField f;
    f.term = std::move(term);
    f.direction = FlowDirection::Forward;
    f.horizon = horizon;
    return f;
}

BoundaryCurve circle_curve(double image_radius, int n, double seed_radius = 0.999) {
    BoundaryCurve c;
    c.time = 0.0;
    c.radius = seed_radius;
    for (int j = 0; j < n; ++j) c.points.push_back(std::polar(image_radius, 2.0 * kPi * j / n));
    return c;
}

BoundaryCurve figure_eight(int n_half = 40) {
    // two tangent loops traversed as one closed polyline: crosses itself
    BoundaryCurve c;
    c.radius = 0.999;
    for (int j = 0; j < n_half; ++j) {
        const double th = 2.0 * kPi * j / n_half;
        c.points.push_back(Complex{1.0, 0.0} + std::polar(1.0, th));
    }
    for (int j = 0; j < n_half; ++j) {
        const double th = kPi - 2.0 * kPi * j / n_half;
        c.points.push_back(Complex{-1.0, 0.0} + std::polar(1.0, th));
    }
    return c;
}

}  // namespace

TEST_CASE("traced image of the constant flow is a circle") {
    const FlowField f = make_field(DrivingTerm::constant(Complex{1.0, 0.0}), 1.0);
    const BoundaryCurve curve = trace_boundary(f, 1.0, 0.999, 64);
    REQUIRE(curve.size() == 64);
    const double expect = 0.999 * std::exp(-1.0);
    for (const Complex w : curve.points) CHECK(std::abs(std::abs(w) - expect) < 1e-9);
    CHECK(std::abs(curve.seed(0) - Complex{0.999, 0.0}) < 1e-15);
}

TEST_CASE("trace resolution only adds points, never moves them") {
    const FlowField f = make_field(DrivingTerm::half_plane(0.3), 0.5);
    const BoundaryCurve c16 = trace_boundary(f, 0.5, 0.99, 16);
    const BoundaryCurve c32 = trace_boundary(f, 0.5, 0.99, 32);
    for (int j = 0; j < 16; ++j) {
        CHECK(std::abs(c16.points[j] - c32.points[2 * j]) < 1e-9);
    }
}

TEST_CASE("two-radius consistency within the Hoelder displacement bound") {
    const FlowField f = make_field(DrivingTerm::sector_from_alpha(0.5), 1.0);
    const HolderEstimate est = estimate_holder(f, 1.0);
    const BoundaryCurve outer = trace_boundary(f, 1.0, 0.9995, 64);
    const BoundaryCurve inner = trace_boundary(f, 1.0, 0.999, 64);
    for (int j = 0; j < 64; ++j) {
        const double displacement = std::abs(outer.points[j] - inner.points[j]);
        CHECK(displacement <= 2.0 * est.constant * std::pow(5e-4, est.exponent));
    }
}

TEST_CASE("trace input validation") {
    const FlowField f = make_field(DrivingTerm::constant(Complex{1.0, 0.0}), 1.0);
    CHECK_THROWS(trace_boundary(f, 1.0, 0.999, 8));    // too few points
    CHECK_THROWS(trace_boundary(f, 1.0, 0.5, 64));     // radius below the near-boundary band
    CHECK_THROWS(trace_boundary(f, 1.0, 1.0, 64));     // on the circle
}

TEST_CASE("Hoelder exponent of the exact dilation is one") {
    const FlowField f = make_field(DrivingTerm::constant(Complex{1.0, 0.0}), 1.0);
    const HolderEstimate est = estimate_holder(f, 1.0);
    CHECK(std::abs(est.exponent - 1.0) < 1e-6);
    CHECK(est.constant == doctest::Approx(std::exp(-1.0)).epsilon(1e-4));
    CHECK_FALSE(est.disagreement);
}

TEST_CASE("sector exponent stays above the predicted floor") {
    const FlowField f = make_field(DrivingTerm::sector_from_alpha(0.5), 1.0);
    const HolderEstimate est = estimate_holder(f, 1.0);
    CHECK(est.exponent >= 0.4);
    CHECK(est.exponent <= 1.0);
}

TEST_CASE("Hoelder estimate is robust to the integrator tolerance") {
    FlowField f = make_field(DrivingTerm::half_plane(0.3), 0.2);
    const double a = estimate_holder(f, 0.2).exponent;
    f.tol.rel /= 2.0;
    f.tol.abs /= 2.0;
    const double b = estimate_holder(f, 0.2).exponent;
    CHECK(std::abs(a - b) < 0.1);
}

TEST_CASE("three-point ratio of similarity images is exactly one") {
    const BoundaryCurve c = circle_curve(0.37, 64);
    const ThreePointResult r = three_point_ratio(c);
    CHECK(r.normalized_ratio == doctest::Approx(1.0).epsilon(1e-12));

    // rotation + scaling invariance
    BoundaryCurve rotated = c;
    for (Complex& w : rotated.points) w *= std::polar(3.0, 1.1);
    CHECK(three_point_ratio(rotated).normalized_ratio == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("three-point ratio of the constant flow image") {
    const FlowField f = make_field(DrivingTerm::constant(Complex{1.0, 0.0}), 1.0);
    const BoundaryCurve c = trace_boundary(f, 1.0, 0.999, 128);
    CHECK(three_point_ratio(c).normalized_ratio == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("three-point ratio rejects degenerate curves") {
    BoundaryCurve degenerate = circle_curve(0.5, 32);
    degenerate.points[3] = degenerate.points[7];
    CHECK_THROWS(three_point_ratio(degenerate));
}

TEST_CASE("small-time window bound for the sector") {
    FlowField f = make_field(DrivingTerm::sector_from_alpha(0.5), 1.0);
    const double t0 = find_small_time_window(f);
    REQUIRE(t0 > 0.0);
    const BoundaryCurve c = trace_boundary(f, t0 * 0.9, 0.95, 96);
    CHECK(three_point_ratio(c).normalized_ratio <= 5.0 / 3.0 + 0.05);
}

TEST_CASE("rectifiable circle length") {
    const FlowField f = make_field(DrivingTerm::constant(Complex{1.0, 0.0}), 1.0);
    const RectifiabilityResult r = rectifiability(f, 1.0);
    CHECK(r.converged);
    const double expect = 2.0 * kPi * 0.999 * std::exp(-1.0);
    CHECK(std::abs(r.length - expect) / expect < 1e-3);
    // n-doubling consistency on the recorded ladder
    REQUIRE(r.lengths.size() >= 2);
    const double last = r.lengths.back();
    const double prev = r.lengths[r.lengths.size() - 2];
    CHECK(std::abs(last - prev) / last < 0.005);
}

TEST_CASE("slit-like image stays rectifiable") {
    const FlowField f = make_field(DrivingTerm::point_kernel(0.0), 0.2);
    const RectifiabilityResult r = rectifiability(f, 0.2);
    CHECK(r.converged);
    for (std::size_t i = 1; i < r.lengths.size(); ++i) {
        CHECK(r.lengths[i] >= r.lengths[i - 1] - 1e-12);  // refinement can only add length
    }
}

TEST_CASE("jordan check accepts circles and rejects a figure eight") {
    CHECK(jordan_check(circle_curve(0.4, 48)));
    CHECK_FALSE(jordan_check(figure_eight()));
}

TEST_CASE("strip image at unit time is a Jordan curve") {
    const FlowField f = make_field(DrivingTerm::strip(0.5, 2.0), 1.0);
    CHECK(jordan_check(trace_boundary(f, 1.0, 0.999, 256)));
}

TEST_CASE("inverse modulus of a dilation is linear") {
    FlowField f = make_field(DrivingTerm::constant(Complex{1.0, 0.0}), 1.0);
    f.tol.rel = f.tol.abs = 1e-12;
    const std::vector<double> deltas{0.002, 0.01, 0.05};
    const auto samples = inverse_modulus(f, 1.0, deltas);
    REQUIRE(samples.size() == deltas.size());
    double prev = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        CHECK(samples[i].first == deltas[i]);
        // discrete max over pairs at image distance <= delta: e^T * delta, short
        // of the continuum value by at most one seed spacing
        CHECK(samples[i].second <= std::exp(1.0) * deltas[i] * (1.0 + 1e-9));
        CHECK(samples[i].second >= std::exp(1.0) * deltas[i] - 2.0 * kPi * 0.999 / 512.0);
        CHECK(samples[i].second >= prev);  // nondecreasing in delta
        prev = samples[i].second;
    }
}

TEST_CASE("inverse modulus vanishes with delta for the half-plane term") {
    const FlowField f = make_field(DrivingTerm::half_plane(0.3), 1.0);
    const auto samples = inverse_modulus(f, 1.0, {1e-5, 1e-4, 0.001, 0.01, 0.1});
    for (std::size_t i = 1; i < samples.size(); ++i) {
        CHECK(samples[i].second >= samples[i - 1].second);
    }
    CHECK(samples.front().second < samples.back().second);
    CHECK(samples.front().second < 0.1);  // vanishes with delta at this resolution
}

TEST_CASE("splitting into one piece is the direct flow") {
    const FlowField f = make_field(DrivingTerm::half_plane(0.3), 0.4);
    const SplitResult r = split_composition(f, 0.4, 1);
    REQUIRE(r.pieces.size() == 1);
    CHECK(r.composition_error < 1e-12);
}

TEST_CASE("splitting the constant flow gives equal exponential pieces") {
    FlowField f = make_field(DrivingTerm::constant(Complex{1.0, 0.0}), 1.0);
    f.tol.rel = f.tol.abs = 1e-12;
    const SplitResult r = split_composition(f, 1.0, 4);
    REQUIRE(r.pieces.size() == 4);
    for (const SplitPiece& piece : r.pieces) {
        CHECK(piece.t_end - piece.t_begin == doctest::Approx(0.25).epsilon(1e-12));
        // per piece w = z e^{-1/4}: max |w_z - 1| = 1 - e^{-1/4}
        CHECK(piece.max_wz_deviation ==
              doctest::Approx(1.0 - std::exp(-0.25)).epsilon(1e-6));
    }
    CHECK(r.composition_error < 1e-9);
    CHECK(r.window_criterion);  // 1 - e^{-1/4} < 1/4
    for (const SplitPiece& piece : r.pieces) CHECK(piece.window_ok);
}

TEST_CASE("fine splitting of the sector flow satisfies the distortion window") {
    FlowField f = make_field(DrivingTerm::sector_from_alpha(0.5), 1.0);
    const double t0 = find_small_time_window(f);
    const int n = static_cast<int>(std::ceil(1.0 / t0)) + 1;
    const SplitResult r = split_composition(f, 1.0, n);
    CHECK(r.window_criterion);
    for (const SplitPiece& piece : r.pieces) {
        CHECK(piece.max_wz_deviation <= 0.25 + 1e-9);
        CHECK(piece.window_ok);
    }
    CHECK(r.composition_error < 1e-6);
}

TEST_CASE("composition error shrinks as the split refines nothing") {
    // splitting is exact regardless of n (flow semigroup property)
    FlowField f = make_field(DrivingTerm::strip(0.5, 2.0), 0.8);
    for (int n : {2, 4, 8}) {
        const SplitResult r = split_composition(f, 0.8, n);
        CAPTURE(n);
        CHECK(r.composition_error < 1e-7);
    }
}
