#pragma once

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lk/types.hpp"

namespace lk {

// Piecewise-constant-in-time parameter schedule. A plain number is a
// schedule with a single knot at t = 0.
class Schedule {
public:
    Schedule(double value = 0.0) : knots_{{0.0, value}} {}
    explicit Schedule(std::vector<std::pair<double, double>> knots);

    double at(double t) const;
    bool is_constant() const { return knots_.size() == 1; }
    const std::vector<std::pair<double, double>>& knots() const { return knots_; }

private:
    std::vector<std::pair<double, double>> knots_;
};

// Discrete nonnegative measure on the circle, total weight 1.
struct SpectralMeasure {
    struct Atom {
        double theta;   // in [0, 2*pi)
        double weight;  // >= 0
    };
    std::vector<Atom> atoms;
    double raw_mass = 1.0;  // mass before weight renormalization

    void validate() const;
    double total_weight() const;
};

// Holomorphic self-map of the disc:
//   phi(z) = e^{i rotation} * [z if multiply_by_z] * (z - point)/(1 - conj(point) z)
// With point = 0 and multiply_by_z = false this is a rotation.
struct SelfMap {
    double rotation = 0.0;
    Complex point{0.0, 0.0};
    bool multiply_by_z = false;

    Complex operator()(Complex z) const;
    Complex derivative(Complex z) const;
};

// A driving term p(z,t): holomorphic in z on the disc, Re p > 0,
// evaluable together with its z-derivative.
class DrivingTerm {
public:
    static DrivingTerm constant(Complex c);
    static DrivingTerm half_plane(Schedule k);
    static DrivingTerm strip(double a, double b);
    static DrivingTerm sector(double C);
    static DrivingTerm sector_from_alpha(double alpha);
    static DrivingTerm point_kernel(Schedule u);
    static DrivingTerm measure(SpectralMeasure mu);
    static DrivingTerm composed(DrivingTerm base, SelfMap phi);

    Complex evaluate(Complex z, double t) const;
    Complex evaluate_derivative(Complex z, double t) const;

    // Re p(0,t) of the raw (un-normalized) term.
    double value_at_origin(double t) const;

    bool time_normalized() const { return normalize_; }
    std::string family_name() const;
    std::string describe() const;

    struct Constant { Complex c; };
    struct HalfPlane { Schedule k; };
    struct Strip { double a, b; };
    struct Sector { double C, alpha; };
    struct PointKernel { Schedule u; };
    struct Measure { SpectralMeasure mu; };
    struct Composed {
        std::shared_ptr<const DrivingTerm> base;
        SelfMap phi;
    };
    using Kind = std::variant<Constant, HalfPlane, Strip, Sector, PointKernel, Measure, Composed>;

    const Kind& kind() const { return kind_; }

private:
    friend std::pair<DrivingTerm, std::function<double(double)>> renormalize_time(const DrivingTerm&);

    explicit DrivingTerm(Kind kind) : kind_(std::move(kind)) {}

    Complex raw_evaluate(Complex z, double t) const;
    Complex raw_derivative(Complex z, double t) const;

    Kind kind_;
    bool normalize_ = false;  // divide by Re p(0,t) on evaluation
};

// Midpoint-rule discretization of a density xi(theta) >= 0 into n atoms,
// renormalized to total mass 1; the pre-normalization mass is kept in
// raw_mass so callers can recover the time-scale factor.
SpectralMeasure herglotz_from_density(const std::function<double(double)>& xi, int n);

// Same, from samples already taken at given angles (uniform bins assumed).
SpectralMeasure herglotz_from_samples(const std::vector<double>& angles,
                                      const std::vector<double>& values);

// Change of time t -> tau making p*(0,tau) = 1; the second member is the
// multiplicative factor dt/dtau = 1/p(0,t).
std::pair<DrivingTerm, std::function<double(double)>> renormalize_time(const DrivingTerm& term);

}  // namespace lk
