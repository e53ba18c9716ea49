#pragma once

#include <vector>

#include "lk/driving.hpp"
#include "lk/types.hpp"

namespace lk {

// Forward: dw/dt = -w p(w,t), |w| shrinks.
// Backward: dw/dt = +w p(w,t), |w| grows toward the unit circle.
enum class FlowDirection { Forward, Backward };

struct Tolerances {
    double rel = 1e-10;
    double abs = 1e-10;
    double boundary = 1e-6;  // Backward stops at |w| >= 1 - boundary
};

struct FlowField {
    DrivingTerm term = DrivingTerm::constant(Complex{1.0, 0.0});
    FlowDirection direction = FlowDirection::Forward;
    double horizon = 1.0;
    Tolerances tol;
    double max_step = 0.0;  // 0 = no cap beyond the adaptive controller
};

struct TrajectorySample {
    double t;
    Complex w;
    Complex wz;
};

enum class ExitStatus { HorizonReached, BoundaryReached, StepFailure };

struct Trajectory {
    Complex seed;
    std::vector<TrajectorySample> samples;
    ExitStatus exit = ExitStatus::HorizonReached;
    Complex gamma;  // last point when BoundaryReached (raw, not projected)

    const TrajectorySample& back() const { return samples.back(); }
};

// Joint adaptive integration of (w, w_z); w_z(.,t_begin) = wz0.
Trajectory integrate(const FlowField& field, Complex seed);
Trajectory integrate_from(const FlowField& field, Complex seed, double t_begin, double t_end,
                          Complex wz0 = Complex{1.0, 0.0});

std::vector<Trajectory> integrate_grid(const FlowField& field, const std::vector<Complex>& seeds);

struct RadialSample {
    double rho;
    double t;
    Complex w;
};

// Resample a trajectory indexed by rho = |w| (radial change of variable),
// monotone cubic in rho. count = 0 keeps the native sample count.
std::vector<RadialSample> radial_reparametrize(const Trajectory& traj, std::size_t count = 0);

// Length of the trajectory portion with |w| in (r, 1), measured in the
// (w, t) metric sqrt(|dw|^2 + dt^2). Requires r > 1/2.
double arc_length_in_annulus(const Trajectory& traj, double r);

// log|w_z| at the trajectory end reconstructed from the rho-integral
// of (1 + Re(w p_z)/Re p)/rho, independent quadrature route.
double log_derivative_from_integral(const FlowField& field, const Trajectory& traj);

}  // namespace lk
