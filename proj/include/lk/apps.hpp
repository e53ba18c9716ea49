#pragma once

#include <string>
#include <vector>

#include "lk/boundary.hpp"
#include "lk/driving.hpp"
#include "lk/flow.hpp"

namespace lk {

// Raised when a coupled step detects a degenerate configuration
// (self-intersecting boundary, loss of positivity, vanishing derivative).
class CoupledHalt : public std::runtime_error {
public:
    CoupledHalt(std::string reason, int step)
        : std::runtime_error(reason + " at step " + std::to_string(step)), step_(step) {}
    int step() const { return step_; }

private:
    int step_;
};

struct CoupledStepRecord {
    SpectralMeasure measure;
    double dt = 0.0;
    double scale = 0.0;  // dt/dtau at this step
};

// Snapshot of the density-coupled evolution. boundary[i] is the image of
// radius * e^{i angles[i]} under the composed flow; wz[i] the co-evolved
// derivative surrogate for |f'| on the circle.
struct CoupledState {
    int step = 0;
    double time = 0.0;          // accumulated tau
    double radius = 0.0;        // reference circle radius of the initial map
    std::vector<double> angles;
    std::vector<Complex> boundary;
    std::vector<Complex> wz;
    SpectralMeasure measure;
    double timescale_accumulated = 0.0;  // accumulated physical time sum(dt * scale)
    std::vector<CoupledStepRecord> history;
};

struct HeleShawConfig {
    Tolerances tol;
    bool check_jordan = true;
};

struct SmoothnessPrediction {
    double growth_exponent = 0.0;  // predicted |p*_z| growth exponent 1-k
    bool applicable = false;       // regularity machinery applies to the built term
    bool bounds_ok = false;        // a/b < Re p* < b/a verified on a grid
    double min_re = 0.0, max_re = 0.0;
};

struct DensitySample {
    double theta = 0.0;
    double xi = 0.0;
    bool flagged = false;  // distance never reached delta
};

CoupledState initial_coupled_state(double radius, int n);

CoupledState hele_shaw_step(const CoupledState& state, double dt, const HeleShawConfig& config);

// Flow r*zhat through the recorded step history (the coupled map itself).
Complex coupled_map(const CoupledState& state, Complex zhat, const Tolerances& tol = {});

// Carleson-Makarov distance density: per grid angle, the bisected epsilon
// with dist(f((1-eps) e^{i theta}), boundary polyline) = delta.
std::vector<DensitySample> carleson_makarov_density(const CoupledState& state, double delta);

SmoothnessPrediction smoothness_prediction(const std::vector<double>& xi, double k, double a,
                                           double b);

BoundaryCurve coupled_boundary(const CoupledState& state);

double polygon_area(const std::vector<Complex>& points);

}  // namespace lk
