#pragma once

#include <vector>

#include "lk/flow.hpp"

namespace lk {

// Ordered closed polyline of near-boundary images w(r e^{i theta_j}, time),
// theta equispaced starting at 0, first/last identified (not duplicated).
struct BoundaryCurve {
    double time = 0.0;
    double radius = 0.0;
    std::vector<Complex> points;

    std::size_t size() const { return points.size(); }
    double seed_angle(std::size_t i) const;
    Complex seed(std::size_t i) const;
};

struct HolderEstimate {
    double exponent = 1.0;        // primary, from the |w_z| radial fit
    double constant = 1.0;
    double pairwise_exponent = 1.0;  // secondary, from |w(z1)-w(z2)| pairs
    bool disagreement = false;       // |primary - secondary| > 0.1
    bool insufficient_range = false;
};

struct ThreePointResult {
    double normalized_ratio = 0.0;  // max (|wi-wj|/|wi-wk|) / (|zi-zj|/|zi-zk|)
    double bounded_turning = 0.0;   // max |wi-wj|/|wi-wk| over sampled triples
};

struct RectifiabilityResult {
    double length = 0.0;  // finest refinement
    bool converged = false;
    std::vector<double> lengths;  // per refinement level
};

struct SplitPiece {
    double t_begin = 0.0;
    double t_end = 0.0;
    double max_wz_deviation = 0.0;  // max |w_z - 1| over the check grid
    bool window_ok = false;         // 3/4..5/4 two-point window on sampled pairs
};

struct SplitResult {
    std::vector<SplitPiece> pieces;
    double composition_error = 0.0;  // max mismatch against the direct flow
    bool window_criterion = false;   // all pieces have max |w_z - 1| <= 1/4
};

BoundaryCurve trace_boundary(const FlowField& field, double time, double radius, int n);

HolderEstimate estimate_holder(const FlowField& field, double time);

ThreePointResult three_point_ratio(const BoundaryCurve& curve);

RectifiabilityResult rectifiability(const FlowField& field, double time, double radius = 0.999);

double polyline_length(const BoundaryCurve& curve);

// true iff no two non-adjacent segments of the closed polyline intersect
bool jordan_check(const BoundaryCurve& curve);

// Empirical modulus of continuity of the inverse map: for every requested
// delta, the max seed distance over image pairs at distance <= delta.
std::vector<std::pair<double, double>> inverse_modulus(const FlowField& field, double time,
                                                       const std::vector<double>& deltas,
                                                       double radius = 0.999, int n = 512);

// Composition splitting w = f_1 o ... o f_n into n equal time slices, with
// verification against the direct flow and the distortion-window report.
SplitResult split_composition(const FlowField& field, double time, int n,
                              double check_radius = 0.95, int probes = 100);

// Largest t <= horizon with max |w_z(z,t)-1| <= 1/4 over a 64-point circle
// grid at check_radius, found by bisection.
double find_small_time_window(const FlowField& field, double check_radius = 0.95);

}  // namespace lk
