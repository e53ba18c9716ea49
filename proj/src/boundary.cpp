#include "lk/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "lk/interp.hpp"

namespace lk {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

int orientation(Complex a, Complex b, Complex c) {
    const double v = (b.real() - a.real()) * (c.imag() - a.imag()) -
                     (b.imag() - a.imag()) * (c.real() - a.real());
    const double scale = std::abs(b - a) * std::abs(c - a);
    if (std::abs(v) <= 1e-15 * std::max(scale, 1e-300)) return 0;
    return v > 0.0 ? 1 : -1;
}

bool on_segment(Complex a, Complex b, Complex p) {
    return std::min(a.real(), b.real()) - 1e-15 <= p.real() &&
           p.real() <= std::max(a.real(), b.real()) + 1e-15 &&
           std::min(a.imag(), b.imag()) - 1e-15 <= p.imag() &&
           p.imag() <= std::max(a.imag(), b.imag()) + 1e-15;
}

bool segments_intersect(Complex p1, Complex p2, Complex q1, Complex q2) {
    const int o1 = orientation(p1, p2, q1);
    const int o2 = orientation(p1, p2, q2);
    const int o3 = orientation(q1, q2, p1);
    const int o4 = orientation(q1, q2, p2);
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && on_segment(p1, p2, q1)) return true;
    if (o2 == 0 && on_segment(p1, p2, q2)) return true;
    if (o3 == 0 && on_segment(q1, q2, p1)) return true;
    if (o4 == 0 && on_segment(q1, q2, p2)) return true;
    return false;
}

}  // namespace

double BoundaryCurve::seed_angle(std::size_t i) const {
    return kTwoPi * static_cast<double>(i) / static_cast<double>(points.size());
}

Complex BoundaryCurve::seed(std::size_t i) const { return std::polar(radius, seed_angle(i)); }

BoundaryCurve trace_boundary(const FlowField& field, double time, double radius, int n) {
    if (n < 16) {
        throw std::invalid_argument("boundary trace needs at least 16 points");
    }
    if (!(radius >= 0.9 && radius < 1.0 - 1e-6)) {
        throw std::invalid_argument("trace radius must lie in [0.9, 1-1e-6)");
    }
    BoundaryCurve curve;
    curve.time = time;
    curve.radius = radius;
    curve.points.reserve(n);
    for (int j = 0; j < n; ++j) {
        const double th = kTwoPi * j / n;
        const Trajectory traj = integrate_from(field, std::polar(radius, th), 0.0, time);
        if (traj.exit == ExitStatus::StepFailure) {
            std::ostringstream os;
            os << "step failure while tracing boundary at angle " << th;
            throw std::runtime_error(os.str());
        }
        curve.points.push_back(traj.back().w);
    }
    return curve;
}

HolderEstimate estimate_holder(const FlowField& field, double time) {
    HolderEstimate est;
    const int n_radii = 12, n_angles = 64;
    std::vector<double> log_gap, log_wz;
    for (int i = 0; i < n_radii; ++i) {
        const double gap = std::pow(10.0, -1.0 - 2.0 * i / (n_radii - 1));  // [1e-3, 0.1]
        const double r = 1.0 - gap;
        double max_wz = 0.0;
        bool usable = true;
        for (int j = 0; j < n_angles; ++j) {
            const Trajectory traj =
                integrate_from(field, std::polar(r, kTwoPi * j / n_angles), 0.0, time);
            if (traj.exit == ExitStatus::StepFailure) {
                usable = false;
                break;
            }
            max_wz = std::max(max_wz, std::abs(traj.back().wz));
        }
        if (usable && max_wz > 0.0) {
            log_gap.push_back(std::log(gap));
            log_wz.push_back(std::log(max_wz));
        }
    }
    if (log_gap.size() < 3) {
        est.insufficient_range = true;
        return est;
    }
    const LineFit line = fit_line(log_gap, log_wz);
    est.exponent = std::clamp(1.0 - std::abs(line.slope), 0.0, 1.0);
    est.constant = std::exp(line.intercept);

    // secondary: pairwise chord fit on a near-boundary circle
    const BoundaryCurve curve = trace_boundary(field, time, 0.999, 256);
    std::vector<double> log_dz, log_dw;
    for (int gap : {1, 2, 4, 8, 16, 32}) {
        for (std::size_t i = 0; i < curve.size(); i += 7) {
            const std::size_t j = (i + gap) % curve.size();
            const double dz = std::abs(curve.seed(i) - curve.seed(j));
            const double dw = std::abs(curve.points[i] - curve.points[j]);
            if (dz > 0.0 && dw > 0.0) {
                log_dz.push_back(std::log(dz));
                log_dw.push_back(std::log(dw));
            }
        }
    }
    const LineFit pair_line = fit_line(log_dz, log_dw);
    est.pairwise_exponent = std::clamp(pair_line.slope, 0.0, 1.0);
    est.disagreement = std::abs(est.exponent - est.pairwise_exponent) > 0.1;
    return est;
}

ThreePointResult three_point_ratio(const BoundaryCurve& curve) {
    const std::size_t n = curve.size();
    if (n < 16) {
        throw std::invalid_argument("three-point test needs at least 16 points");
    }
    // decimate to at most ~60 indices so the triple count stays near 1e5
    const std::size_t stride = std::max<std::size_t>(1, n / 60);
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; i += stride) idx.push_back(i);

    ThreePointResult res;
    for (std::size_t a = 0; a < idx.size(); ++a) {
        for (std::size_t b = a + 1; b < idx.size(); ++b) {
            for (std::size_t c = b + 1; c < idx.size(); ++c) {
                const std::size_t i = idx[a], j = idx[b], k = idx[c];
                const Complex wi = curve.points[i], wj = curve.points[j], wk = curve.points[k];
                const double dw_ij = std::abs(wi - wj);
                const double dw_ik = std::abs(wi - wk);
                if (dw_ik == 0.0 || dw_ij == 0.0) {
                    throw std::invalid_argument("degenerate (repeated) curve points");
                }
                const double dz_ij = std::abs(curve.seed(i) - curve.seed(j));
                const double dz_ik = std::abs(curve.seed(i) - curve.seed(k));
                const double normalized = (dw_ij / dw_ik) / (dz_ij / dz_ik);
                res.normalized_ratio = std::max(res.normalized_ratio, normalized);
                if (k - i <= n / 2) {
                    const double turning =
                        std::max(dw_ij, std::abs(wj - wk)) / dw_ik;
                    res.bounded_turning = std::max(res.bounded_turning, turning);
                }
            }
        }
    }
    return res;
}

double polyline_length(const BoundaryCurve& curve) {
    double len = 0.0;
    for (std::size_t i = 0; i < curve.size(); ++i) {
        len += std::abs(curve.points[(i + 1) % curve.size()] - curve.points[i]);
    }
    return len;
}

RectifiabilityResult rectifiability(const FlowField& field, double time, double radius) {
    RectifiabilityResult res;
    for (int n : {256, 512, 1024}) {
        res.lengths.push_back(polyline_length(trace_boundary(field, time, radius, n)));
    }
    res.length = res.lengths.back();
    res.converged = true;
    for (std::size_t i = 1; i < res.lengths.size(); ++i) {
        const double rel = std::abs(res.lengths[i] - res.lengths[i - 1]) / res.lengths[i - 1];
        if (rel >= 0.005) res.converged = false;
    }
    return res;
}

bool jordan_check(const BoundaryCurve& curve) {
    const std::size_t n = curve.size();
    if (n < 16) {
        throw std::invalid_argument("jordan check needs at least 16 points");
    }
    for (std::size_t i = 0; i < n; ++i) {
        const Complex a1 = curve.points[i];
        const Complex a2 = curve.points[(i + 1) % n];
        for (std::size_t j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue;  // adjacent around the seam
            const Complex b1 = curve.points[j];
            const Complex b2 = curve.points[(j + 1) % n];
            if (segments_intersect(a1, a2, b1, b2)) return false;
        }
    }
    return true;
}

std::vector<std::pair<double, double>> inverse_modulus(const FlowField& field, double time,
                                                       const std::vector<double>& deltas,
                                                       double radius, int n) {
    const BoundaryCurve curve = trace_boundary(field, time, radius, n);
    struct Pair {
        double dw, dz;
    };
    std::vector<Pair> pairs;
    pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            pairs.push_back({std::abs(curve.points[i] - curve.points[j]),
                             std::abs(curve.seed(i) - curve.seed(j))});
        }
    }
    std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) { return a.dw < b.dw; });
    std::vector<double> prefix_max(pairs.size());
    double running = 0.0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        running = std::max(running, pairs[i].dz);
        prefix_max[i] = running;
    }
    std::vector<std::pair<double, double>> out;
    for (double d : deltas) {
        auto it = std::upper_bound(pairs.begin(), pairs.end(), d,
                                   [](double v, const Pair& p) { return v < p.dw; });
        const std::size_t cnt = static_cast<std::size_t>(std::distance(pairs.begin(), it));
        out.emplace_back(d, cnt == 0 ? 0.0 : prefix_max[cnt - 1]);
    }
    return out;
}

SplitResult split_composition(const FlowField& field, double time, int n, double check_radius,
                              int probes) {
    if (n < 1) {
        throw std::invalid_argument("split needs n >= 1");
    }
    SplitResult res;
    const double dt = time / n;

    for (int i = 0; i < n; ++i) {
        SplitPiece piece;
        piece.t_begin = i * dt;
        piece.t_end = (i + 1) * dt;

        std::vector<Complex> grid_images;
        const int grid_n = 128;
        grid_images.reserve(grid_n);
        double max_dev = 0.0;
        for (int j = 0; j < grid_n; ++j) {
            const Complex z = std::polar(check_radius, kTwoPi * j / grid_n);
            const Trajectory traj = integrate_from(field, z, piece.t_begin, piece.t_end);
            max_dev = std::max(max_dev, std::abs(traj.back().wz - 1.0));
            grid_images.push_back(traj.back().w);
        }
        piece.max_wz_deviation = max_dev;

        piece.window_ok = true;
        for (int gap : {1, 2, 3, 5, 8, 13, 21, 34}) {
            for (int j = 0; j < grid_n; ++j) {
                const int k = (j + gap) % grid_n;
                const Complex z1 = std::polar(check_radius, kTwoPi * j / grid_n);
                const Complex z2 = std::polar(check_radius, kTwoPi * k / grid_n);
                const double dz = std::abs(z1 - z2);
                const double dw = std::abs(grid_images[j] - grid_images[k]);
                if (dw < 0.75 * dz || dw > 1.25 * dz) {
                    piece.window_ok = false;
                }
            }
        }
        res.pieces.push_back(piece);
    }
    res.window_criterion = std::all_of(res.pieces.begin(), res.pieces.end(),
                                       [](const SplitPiece& p) { return p.max_wz_deviation <= 0.25; });

    // recomposition check against the direct flow
    const int n_radii = 4;
    const int n_angles = std::max(1, probes / n_radii);
    for (int ri = 0; ri < n_radii; ++ri) {
        const double r = 0.3 + 0.2 * ri;  // 0.3 .. 0.9
        for (int j = 0; j < n_angles; ++j) {
            const Complex z0 = std::polar(r, kTwoPi * j / n_angles);
            Complex w = z0;
            for (const SplitPiece& piece : res.pieces) {
                w = integrate_from(field, w, piece.t_begin, piece.t_end).back().w;
            }
            const Complex direct = integrate_from(field, z0, 0.0, time).back().w;
            res.composition_error = std::max(res.composition_error, std::abs(w - direct));
        }
    }
    const double loud_limit = 1e4 * (field.tol.abs + field.tol.rel);
    if (res.composition_error > loud_limit) {
        std::ostringstream os;
        os << "composition mismatch " << res.composition_error
           << " exceeds sanity limit " << loud_limit;
        throw std::runtime_error(os.str());
    }
    return res;
}

double find_small_time_window(const FlowField& field, double check_radius) {
    auto max_dev = [&](double t) {
        double dev = 0.0;
        for (int j = 0; j < 64; ++j) {
            const Complex z = std::polar(check_radius, kTwoPi * j / 64);
            const Trajectory traj = integrate_from(field, z, 0.0, t);
            dev = std::max(dev, std::abs(traj.back().wz - 1.0));
        }
        return dev;
    };
    if (max_dev(field.horizon) <= 0.25) return field.horizon;
    double lo = 0.0, hi = field.horizon;
    for (int it = 0; it < 40 && (hi - lo) > 1e-9 * field.horizon; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (max_dev(mid) <= 0.25) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo;
}

}  // namespace lk
