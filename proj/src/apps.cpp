#include "lk/apps.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace lk {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double point_segment_distance(Complex p, Complex a, Complex b) {
    const Complex ab = b - a;
    const double len2 = std::norm(ab);
    if (len2 == 0.0) return std::abs(p - a);
    double s = ((p - a).real() * ab.real() + (p - a).imag() * ab.imag()) / len2;
    s = std::clamp(s, 0.0, 1.0);
    return std::abs(p - (a + s * ab));
}

double point_polyline_distance(Complex p, const std::vector<Complex>& poly) {
    double best = 1e300;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        best = std::min(best,
                        point_segment_distance(p, poly[i], poly[(i + 1) % poly.size()]));
    }
    return best;
}

DrivingTerm normalized_measure_term(const SpectralMeasure& mu) {
    return renormalize_time(DrivingTerm::measure(mu)).first;
}

}  // namespace

CoupledState initial_coupled_state(double radius, int n) {
    if (!(radius > 0.0 && radius < 1.0)) {
        throw std::invalid_argument("initial radius must lie in (0,1)");
    }
    if (n < 16) {
        throw std::invalid_argument("coupled state needs at least 16 boundary points");
    }
    CoupledState st;
    st.radius = radius;
    st.angles.resize(n);
    st.boundary.resize(n);
    st.wz.assign(n, Complex{1.0, 0.0});
    SpectralMeasure mu;
    for (int i = 0; i < n; ++i) {
        st.angles[i] = kTwoPi * i / n;
        st.boundary[i] = std::polar(radius, st.angles[i]);
        mu.atoms.push_back({st.angles[i], 1.0 / n});
    }
    mu.raw_mass = 1.0;
    st.measure = std::move(mu);
    return st;
}

BoundaryCurve coupled_boundary(const CoupledState& state) {
    BoundaryCurve curve;
    curve.time = state.time;
    curve.radius = state.radius;
    curve.points = state.boundary;
    return curve;
}

double polygon_area(const std::vector<Complex>& points) {
    double twice = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const Complex a = points[i];
        const Complex b = points[(i + 1) % points.size()];
        twice += a.real() * b.imag() - b.real() * a.imag();
    }
    return 0.5 * std::abs(twice);
}

CoupledState hele_shaw_step(const CoupledState& state, double dt, const HeleShawConfig& config) {
    if (!(dt >= 0.0)) {
        throw std::invalid_argument("step length must be nonnegative");
    }
    CoupledState next = state;
    next.step = state.step + 1;
    if (dt == 0.0) {
        return next;
    }

    std::vector<double> xi(state.angles.size());
    for (std::size_t i = 0; i < state.wz.size(); ++i) {
        const double d = std::abs(state.wz[i]);
        if (d < 1e-12) {
            throw CoupledHalt("derivative vanished on the circle (cusp)", state.step);
        }
        xi[i] = 1.0 / (d * d);
    }
    SpectralMeasure mu = herglotz_from_samples(state.angles, xi);
    const double scale = 1.0 / mu.raw_mass;  // dt/dtau, p(0) equals the raw mass
    const DrivingTerm term = normalized_measure_term(mu);

    FlowField field{term, FlowDirection::Backward, dt, config.tol};
    for (std::size_t i = 0; i < state.boundary.size(); ++i) {
        Trajectory traj;
        try {
            traj = integrate_from(field, state.boundary[i], 0.0, dt, state.wz[i]);
        } catch (const std::domain_error& e) {
            throw CoupledHalt(std::string("flow left the admissible disc: ") + e.what(),
                              state.step);
        }
        if (traj.exit == ExitStatus::StepFailure) {
            throw CoupledHalt("integration step failure", state.step);
        }
        if (traj.exit == ExitStatus::BoundaryReached) {
            throw CoupledHalt("reference map saturated the unit circle", state.step);
        }
        next.boundary[i] = traj.back().w;
        next.wz[i] = traj.back().wz;
    }

    if (config.check_jordan && !jordan_check(coupled_boundary(next))) {
        throw CoupledHalt("boundary self-intersection", state.step);
    }

    next.time = state.time + dt;
    next.timescale_accumulated = state.timescale_accumulated + dt * scale;
    next.measure = mu;
    next.history.push_back({std::move(mu), dt, scale});
    return next;
}

Complex coupled_map(const CoupledState& state, Complex zhat, const Tolerances& tol) {
    Complex w = state.radius * zhat;
    for (const CoupledStepRecord& rec : state.history) {
        FlowField field{normalized_measure_term(rec.measure), FlowDirection::Backward, rec.dt,
                        tol};
        const Trajectory traj = integrate_from(field, w, 0.0, rec.dt);
        w = traj.back().w;
    }
    return w;
}

std::vector<DensitySample> carleson_makarov_density(const CoupledState& state, double delta) {
    if (!(delta > 0.0)) {
        throw std::invalid_argument("delta must be positive");
    }
    std::vector<DensitySample> out;
    out.reserve(state.angles.size());
    const double eps_lo = 1e-9;
    const double eps_hi = 1.0 - 1e-6;
    for (double th : state.angles) {
        auto dist_at = [&](double eps) {
            const Complex zhat = std::polar(1.0 - eps, th);
            return point_polyline_distance(coupled_map(state, zhat), state.boundary);
        };
        DensitySample s;
        s.theta = th;
        if (dist_at(eps_hi) < delta) {
            s.xi = eps_hi;
            s.flagged = true;  // delta never reached inside the domain
        } else if (dist_at(eps_lo) >= delta) {
            s.xi = eps_lo;
        } else {
            double lo = eps_lo, hi = eps_hi;
            for (int it = 0; it < 50; ++it) {
                const double mid = 0.5 * (lo + hi);
                if (dist_at(mid) < delta) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            s.xi = 0.5 * (lo + hi);
        }
        out.push_back(s);
    }
    return out;
}

SmoothnessPrediction smoothness_prediction(const std::vector<double>& xi, double k, double a,
                                           double b) {
    if (!(k > 0.0 && k < 1.0)) {
        throw std::invalid_argument("density Hoelder exponent must lie in (0,1)");
    }
    if (!(0.0 < a && a < b)) {
        throw std::invalid_argument("density bounds need 0 < a < b");
    }
    SmoothnessPrediction pred;
    pred.growth_exponent = 1.0 - k;

    std::vector<double> angles(xi.size());
    for (std::size_t i = 0; i < xi.size(); ++i) {
        angles[i] = kTwoPi * static_cast<double>(i) / static_cast<double>(xi.size());
    }
    const DrivingTerm term = normalized_measure_term(herglotz_from_samples(angles, xi));

    pred.min_re = 1e300;
    pred.max_re = -1e300;
    // keep a few atom spacings away from the circle: closer in, the discrete
    // atoms are indistinguishable from the continuous density they sample
    const double r_max =
        std::min(0.999, 1.0 - 5.0 / static_cast<double>(xi.size()));
    for (int i = 0; i < 32; ++i) {
        const double r = r_max * i / 31.0;
        for (int j = 0; j < 64; ++j) {
            const double re = term.evaluate(std::polar(r, kTwoPi * j / 64), 0.0).real();
            pred.min_re = std::min(pred.min_re, re);
            pred.max_re = std::max(pred.max_re, re);
        }
    }
    pred.bounds_ok = pred.min_re > a / b && pred.max_re < b / a;
    pred.applicable = pred.bounds_ok;
    return pred;
}

}  // namespace lk
