#include "lk/flow.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "lk/interp.hpp"

namespace lk {

namespace {

using State = std::array<Complex, 2>;  // (w, wz)

// Dormand-Prince 5(4) coefficients.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
constexpr double e1 = 35.0 / 384 - 5179.0 / 57600, e3 = 500.0 / 1113 - 7571.0 / 16695,
                 e4 = 125.0 / 192 - 393.0 / 640, e5 = -2187.0 / 6784 + 92097.0 / 339200,
                 e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;

struct Rhs {
    const DrivingTerm& term;
    double sign;  // -1 forward, +1 backward

    // false when a stage point escapes the guarded disc (caller halves h)
    bool operator()(double t, const State& y, State& dy) const {
        const Complex w = y[0];
        if (!is_finite(w) || std::abs(w) > kGuardRadius) return false;
        const Complex p = term.evaluate(w, t);
        const Complex pz = term.evaluate_derivative(w, t);
        dy[0] = sign * w * p;
        dy[1] = sign * (y[1] * p + w * y[1] * pz);
        return true;
    }
};

double error_norm(const State& y, const State& ynew, const State& err, const Tolerances& tol) {
    double norm = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        const double scale = tol.abs + tol.rel * std::max(std::abs(y[i]), std::abs(ynew[i]));
        norm = std::max(norm, std::abs(err[i]) / scale);
    }
    return norm;
}

}  // namespace

Trajectory integrate_from(const FlowField& field, Complex seed, double t_begin, double t_end,
                          Complex wz0) {
    require_interior(seed);
    if (field.direction == FlowDirection::Backward &&
        std::abs(seed) >= 1.0 - field.tol.boundary) {
        throw std::domain_error("backward seed already at the boundary tolerance");
    }
    if (!(t_end > t_begin)) {
        throw std::invalid_argument("integration interval must have positive length");
    }

    Trajectory traj;
    traj.seed = seed;

    const Rhs rhs{field.term, field.direction == FlowDirection::Forward ? -1.0 : 1.0};
    const double boundary_stop = 1.0 - field.tol.boundary;

    double t = t_begin;
    State y{seed, wz0};
    traj.samples.push_back({t, y[0], y[1]});

    State k1;
    bool have_k1 = rhs(t, y, k1);
    if (!have_k1) {
        traj.exit = ExitStatus::StepFailure;
        return traj;
    }

    auto step_cap = [&](double h) {
        h = std::min(h, 0.5 * (1.0 - std::abs(y[0])));  // |p| may grow like (1-r)^-alpha
        if (field.max_step > 0.0) h = std::min(h, field.max_step);
        return std::min(h, t_end - t);
    };

    double h = step_cap(std::min(1e-3, t_end - t_begin));

    while (t < t_end) {
        if (h < 1e-15 * std::max(1.0, std::abs(t))) {
            traj.exit = ExitStatus::StepFailure;
            return traj;
        }

        State k2, k3, k4, k5, k6, k7, ytmp, ynew, yerr;
        bool ok = true;
        auto stage = [&](double c, const State& incr, State& k) {
            for (std::size_t i = 0; i < 2; ++i) ytmp[i] = y[i] + h * incr[i];
            if (!rhs(t + c * h, ytmp, k)) ok = false;
        };

        State incr;
        incr = {a21 * k1[0], a21 * k1[1]};
        stage(c2, incr, k2);
        if (ok) {
            for (int i = 0; i < 2; ++i) incr[i] = a31 * k1[i] + a32 * k2[i];
            stage(c3, incr, k3);
        }
        if (ok) {
            for (int i = 0; i < 2; ++i) incr[i] = a41 * k1[i] + a42 * k2[i] + a43 * k3[i];
            stage(c4, incr, k4);
        }
        if (ok) {
            for (int i = 0; i < 2; ++i)
                incr[i] = a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i];
            stage(c5, incr, k5);
        }
        if (ok) {
            for (int i = 0; i < 2; ++i)
                incr[i] = a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i];
            stage(1.0, incr, k6);
        }
        if (ok) {
            for (int i = 0; i < 2; ++i) {
                ynew[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] +
                                      b6 * k6[i]);
            }
            if (!rhs(t + h, ynew, k7)) ok = false;
        }

        if (!ok) {
            h *= 0.5;
            continue;
        }

        for (int i = 0; i < 2; ++i) {
            yerr[i] = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                           e7 * k7[i]);
        }
        const double err = error_norm(y, ynew, yerr, field.tol);

        if (err <= 1.0) {
            t += h;
            y = ynew;
            k1 = k7;  // FSAL
            traj.samples.push_back({t, y[0], y[1]});

            if (field.direction == FlowDirection::Backward &&
                std::abs(y[0]) >= boundary_stop) {
                traj.exit = ExitStatus::BoundaryReached;
                traj.gamma = y[0];
                return traj;
            }

            double factor = err > 0.0 ? 0.9 * std::pow(err, -0.2) : 5.0;
            factor = std::clamp(factor, 0.2, 5.0);
            h = step_cap(h * factor);
            if (t >= t_end) break;
            if (h <= 0.0) h = 1e-14;
        } else {
            const double factor = std::clamp(0.9 * std::pow(err, -0.2), 0.1, 1.0);
            h *= factor;
        }
    }

    traj.exit = ExitStatus::HorizonReached;
    return traj;
}

Trajectory integrate(const FlowField& field, Complex seed) {
    return integrate_from(field, seed, 0.0, field.horizon);
}

std::vector<Trajectory> integrate_grid(const FlowField& field, const std::vector<Complex>& seeds) {
    std::vector<Trajectory> out;
    out.reserve(seeds.size());
    for (const Complex& s : seeds) {
        out.push_back(integrate(field, s));
    }
    return out;
}

std::vector<RadialSample> radial_reparametrize(const Trajectory& traj, std::size_t count) {
    const auto& s = traj.samples;
    if (s.size() < 2) {
        throw std::invalid_argument("reparametrization needs >= 2 samples");
    }
    const bool decreasing = std::abs(s[1].w) < std::abs(s[0].w);
    std::vector<double> rho(s.size()), tt(s.size()), wr(s.size()), wi(s.size());
    for (std::size_t j = 0; j < s.size(); ++j) {
        // ascending in rho
        const std::size_t k = decreasing ? s.size() - 1 - j : j;
        rho[j] = std::abs(s[k].w);
        tt[j] = s[k].t;
        wr[j] = s[k].w.real();
        wi[j] = s[k].w.imag();
        if (j > 0 && !(rho[j] > rho[j - 1])) {
            throw std::invalid_argument("trajectory modulus is not strictly monotone");
        }
    }

    std::vector<RadialSample> out;
    if (count == 0 || count == s.size()) {
        out.reserve(s.size());
        for (std::size_t j = 0; j < s.size(); ++j) {
            out.push_back({rho[j], tt[j], Complex{wr[j], wi[j]}});
        }
        return out;
    }

    MonotoneCubic t_of_rho(rho, tt);
    MonotoneCubic wr_of_rho(rho, wr);
    MonotoneCubic wi_of_rho(rho, wi);
    out.reserve(count);
    for (std::size_t j = 0; j < count; ++j) {
        const double r =
            rho.front() + (rho.back() - rho.front()) * static_cast<double>(j) /
                              static_cast<double>(count - 1);
        out.push_back({r, t_of_rho(r), Complex{wr_of_rho(r), wi_of_rho(r)}});
    }
    return out;
}

double arc_length_in_annulus(const Trajectory& traj, double r) {
    if (!(r > 0.5 && r < 1.0)) {
        throw std::domain_error("annulus arc length requires 1/2 < r < 1");
    }
    const auto& s = traj.samples;
    double len = 0.0;
    for (std::size_t j = 0; j + 1 < s.size(); ++j) {
        double r0 = std::abs(s[j].w), r1 = std::abs(s[j + 1].w);
        Complex w0 = s[j].w, w1 = s[j + 1].w;
        double t0 = s[j].t, t1 = s[j + 1].t;
        const double lo = std::min(r0, r1), hi = std::max(r0, r1);
        if (hi <= r) continue;
        double f0 = 0.0, f1 = 1.0;
        if (lo < r) {
            // clip the crossing segment linearly in modulus
            const double f = (r - r0) / (r1 - r0);
            if (r0 < r) f0 = f; else f1 = f;
        }
        const Complex wa = w0 + f0 * (w1 - w0);
        const Complex wb = w0 + f1 * (w1 - w0);
        const double ta = t0 + f0 * (t1 - t0);
        const double tb = t0 + f1 * (t1 - t0);
        len += std::hypot(std::abs(wb - wa), tb - ta);
    }
    return len;
}

double log_derivative_from_integral(const FlowField& field, const Trajectory& traj) {
    const auto& s = traj.samples;
    if (s.size() < 2) {
        throw std::invalid_argument("integral reconstruction needs >= 2 samples");
    }
    const bool decreasing = std::abs(s[1].w) < std::abs(s[0].w);
    std::vector<double> rho(s.size()), g(s.size());
    for (std::size_t j = 0; j < s.size(); ++j) {
        const std::size_t k = decreasing ? s.size() - 1 - j : j;
        rho[j] = std::abs(s[k].w);
        const Complex p = field.term.evaluate(s[k].w, s[k].t);
        const Complex pz = field.term.evaluate_derivative(s[k].w, s[k].t);
        g[j] = (1.0 + (s[k].w * pz).real() / p.real()) / rho[j];
        if (j > 0 && !(rho[j] > rho[j - 1])) {
            throw std::invalid_argument("trajectory modulus is not strictly monotone");
        }
    }
    MonotoneCubic g_of_rho(rho, g);
    const double rho_start = std::abs(s.front().w);
    const double rho_end = std::abs(s.back().w);
    const double start = std::log(std::abs(s.front().wz));
    return start + g_of_rho.integral(rho_start, rho_end);
}

}  // namespace lk
