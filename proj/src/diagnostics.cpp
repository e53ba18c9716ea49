#include "lk/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "lk/interp.hpp"

namespace lk {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double golden_max(const std::function<double(double)>& f, double a, double b, int iters = 40) {
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < iters; ++i) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        }
    }
    return std::max(f1, f2);
}

double h_quotient(const DrivingTerm& term, Complex z, double t) {
    const Complex p = term.evaluate(z, t);
    if (!(p.real() > 0.0)) return 0.0;
    const Complex dp = term.evaluate_derivative(z, t);
    return (1.0 - std::norm(z)) * std::abs(dp) / p.real();
}

// max over theta at fixed radius; coarse scan plus golden refinement
double ray_extremum(double r, double t,
                    const std::function<double(Complex, double)>& q, bool maximize,
                    int coarse = 128) {
    double best = maximize ? -1e300 : 1e300;
    double best_theta = 0.0;
    for (int j = 0; j < coarse; ++j) {
        const double th = kTwoPi * j / coarse;
        const double v = q(std::polar(r, th), t);
        if (maximize ? v > best : v < best) {
            best = v;
            best_theta = th;
        }
    }
    const double dth = kTwoPi / coarse;
    auto f = [&](double th) {
        const double v = q(std::polar(r, th), t);
        return maximize ? v : -v;
    };
    const double refined = golden_max(f, best_theta - dth, best_theta + dth);
    return maximize ? std::max(best, refined) : std::min(best, -refined);
}

}  // namespace

double estimate_H(const DrivingTerm& term, double t, int n_r, int n_theta) {
    if (n_r < 2 || n_theta < 4) {
        throw std::invalid_argument("estimate_H grid too small");
    }
    const double x_min = std::log(1e-6);  // x = log(1-r), grid reaches r = 1-1e-6
    double best = 0.0;
    double best_x = 0.0, best_theta = 0.0;
    for (int i = 0; i < n_r; ++i) {
        const double x = x_min * static_cast<double>(i) / (n_r - 1);
        const double r = 1.0 - std::exp(x);
        for (int j = 0; j < n_theta; ++j) {
            const double th = kTwoPi * j / n_theta;
            const double v = h_quotient(term, std::polar(r, th), t);
            if (v > best) {
                best = v;
                best_x = x;
                best_theta = th;
            }
        }
    }
    // coordinate-ascent polish around the best cell. The quotient often peaks
    // along a self-similar ridge aiming at a boundary direction, with angular
    // width proportional to 1-r, so the theta window is rescaled with the
    // current radius on every round.
    const double dx = -x_min / (n_r - 1);
    const double dth = kTwoPi / n_theta;
    double x = best_x, th = best_theta;
    auto scan = [&](const std::function<double(double)>& f, double lo, double hi, double* arg) {
        double bv = -1.0, ba = *arg;
        for (int j = 0; j <= 32; ++j) {
            const double a = lo + (hi - lo) * j / 32.0;
            const double v = f(a);
            if (v > bv) {
                bv = v;
                ba = a;
            }
        }
        const double cell = (hi - lo) / 32.0;
        const double refined = golden_max(f, ba - cell, ba + cell);
        *arg = ba;
        return std::max(bv, refined);
    };
    // walk the ridge from the grid best down to the smallest gap, re-centering
    // the angle at every level; record the max along the way
    for (double xc = x; xc >= x_min - 1e-12; xc -= 0.1) {
        const double gap = std::exp(xc);
        auto f_th = [&](double a) { return h_quotient(term, std::polar(1.0 - gap, a), t); };
        const double w_th = std::max(std::min(dth, 8.0 * gap), 1e-7);
        best = std::max(best, scan(f_th, th - w_th, th + w_th, &th));
    }
    // one refinement across radii at the final angle
    auto f_x = [&](double a) {
        return h_quotient(term, std::polar(1.0 - std::exp(std::clamp(a, x_min, 0.0)), th), t);
    };
    best = std::max(best, scan(f_x, x_min, std::min(x + dx, 0.0), &x));
    return best;
}

GrowthFit fit_growth(const DrivingTerm& term, GrowthCondition which, double t, double slack) {
    const int n_radii = 40;
    std::vector<double> log_gap, log_q;
    auto quantity = [&](Complex z, double tt) -> double {
        const Complex p = term.evaluate(z, tt);
        if (!(p.real() > 0.0)) {
            throw std::domain_error("Re p vanished during growth fit; term left the class");
        }
        return which == GrowthCondition::Est1 ? std::abs(p) / p.real() : p.real();
    };
    for (int i = 0; i < n_radii; ++i) {
        // 1-r log-spaced over [1e-4, 0.1]
        const double gap = std::pow(10.0, -1.0 - 3.0 * i / (n_radii - 1));
        const double r = 1.0 - gap;
        const double q =
            ray_extremum(r, t, quantity, which == GrowthCondition::Est1);
        log_gap.push_back(std::log(gap));
        log_q.push_back(std::log(q));
    }
    const LineFit line = fit_line(log_gap, log_q);
    GrowthFit fit;
    if (which == GrowthCondition::Est1) {
        fit.alpha = std::max(0.0, -line.slope);
        fit.C = std::exp(line.intercept);
        for (std::size_t i = 0; i < log_q.size(); ++i) {
            const double bound = line.intercept - fit.alpha * log_gap[i];
            fit.residual = std::max(fit.residual, log_q[i] - bound);
        }
    } else {
        fit.alpha = std::max(0.0, line.slope);
        fit.C = std::exp(line.intercept);
        for (std::size_t i = 0; i < log_q.size(); ++i) {
            const double bound = line.intercept + fit.alpha * log_gap[i];
            fit.residual = std::max(fit.residual, bound - log_q[i]);
        }
    }
    fit.satisfied = fit.residual <= slack && fit.alpha < 1.0;
    return fit;
}

std::map<std::string, HypothesisResult> check_hypotheses(const DrivingTerm& term, double t) {
    std::map<std::string, HypothesisResult> out;

    struct BandStats {
        double min_re = 1e300, max_re = -1e300, max_ratio = 0.0;
        Complex argmin_re, argmax_re, argmax_ratio;
    };
    auto scan = [&](double gap_lo, double gap_hi) {
        BandStats s;
        const int n_r = 8, n_th = 128;
        for (int i = 0; i < n_r; ++i) {
            const double gap =
                gap_lo * std::pow(gap_hi / gap_lo, static_cast<double>(i) / (n_r - 1));
            const double r = 1.0 - gap;
            for (int j = 0; j < n_th; ++j) {
                const Complex z = std::polar(r, kTwoPi * j / n_th);
                const Complex p = term.evaluate(z, t);
                if (p.real() < s.min_re) {
                    s.min_re = p.real();
                    s.argmin_re = z;
                }
                if (p.real() > s.max_re) {
                    s.max_re = p.real();
                    s.argmax_re = z;
                }
                const double ratio = p.real() > 0.0 ? std::abs(p.imag()) / p.real() : 1e300;
                if (ratio > s.max_ratio) {
                    s.max_ratio = ratio;
                    s.argmax_ratio = z;
                }
            }
        }
        return s;
    };
    const BandStats inner = scan(0.05, 0.2);      // moderate radii
    const BandStats outer = scan(1e-4, 1e-3);     // near the circle

    auto fmt = [](double v) {
        std::ostringstream os;
        os << v;
        return os.str();
    };

    {  // Re p bounded below by a positive constant
        HypothesisResult r;
        const bool holds = inner.min_re > 0.0 && outer.min_re >= 0.5 * inner.min_re;
        r.verdict = holds ? Verdict::HoldsOnGrid : Verdict::Fails;
        r.witness = outer.argmin_re;
        r.value = outer.min_re;
        r.detail = "min Re p: inner " + fmt(inner.min_re) + ", near-boundary " + fmt(outer.min_re);
        out["theorem3_halfplane"] = r;
    }
    {  // a < Re p < b
        HypothesisResult r;
        const bool below = inner.min_re > 0.0 && outer.min_re >= 0.5 * inner.min_re;
        const bool above = outer.max_re <= 2.0 * inner.max_re;
        r.verdict = (below && above) ? Verdict::HoldsOnGrid : Verdict::Fails;
        r.witness = below ? outer.argmax_re : outer.argmin_re;
        r.value = below ? outer.max_re : outer.min_re;
        r.detail = "Re p range near boundary [" + fmt(outer.min_re) + ", " + fmt(outer.max_re) +
                   "], inner [" + fmt(inner.min_re) + ", " + fmt(inner.max_re) + "]";
        out["theorem4_strip"] = r;
    }
    {  // |Im p| / Re p < C
        HypothesisResult r;
        const bool holds = outer.max_ratio <= 2.0 * inner.max_ratio + 0.1;
        r.verdict = holds ? Verdict::HoldsOnGrid : Verdict::Fails;
        r.witness = outer.argmax_ratio;
        r.value = outer.max_ratio;
        r.detail = "max |Im p|/Re p: inner " + fmt(inner.max_ratio) + ", near-boundary " +
                   fmt(outer.max_ratio);
        out["theorem5_sector"] = r;
    }
    {  // growth pair with a common exponent
        HypothesisResult r;
        try {
            const GrowthFit e1 = fit_growth(term, GrowthCondition::Est1, t);
            const GrowthFit e2 = fit_growth(term, GrowthCondition::Est2, t);
            // est2 with a slower decay exponent also holds at est1's alpha
            const bool holds = e1.satisfied && e2.satisfied && e2.alpha <= e1.alpha + 0.1;
            r.verdict = holds ? Verdict::HoldsOnGrid : Verdict::Fails;
            r.value = e1.alpha;
            r.detail = "alpha est1 " + fmt(e1.alpha) + ", est2 " + fmt(e2.alpha);
        } catch (const std::domain_error&) {
            r.verdict = Verdict::NotApplicable;
            r.detail = "growth fit failed";
        }
        out["theorem1_growth"] = r;
    }
    {  // H(p) < 2 makes the Hoelder prediction 1 - H/2 meaningful
        HypothesisResult r;
        const double H = estimate_H(term, t, 128, 128);
        r.verdict = H < 2.0 ? Verdict::HoldsOnGrid : Verdict::Fails;
        r.value = H;
        r.detail = "H estimate " + fmt(H) +
                   (H < 2.0 ? ", predicted exponent " + fmt(1.0 - H / 2.0) : "");
        out["theorem2_regularity"] = r;
    }
    return out;
}

SqrtNorm driver_sqrt_norm(const std::vector<double>& times, const std::vector<double>& values,
                          double window) {
    if (times.size() != values.size() || times.size() < 2) {
        throw std::invalid_argument("driver norm needs >= 2 matching samples");
    }
    if (!(window > 0.0)) {
        throw std::invalid_argument("window must be positive");
    }
    SqrtNorm out;
    bool any = false;
    for (std::size_t i = 0; i < times.size(); ++i) {
        for (std::size_t j = i + 1; j < times.size(); ++j) {
            const double dt = std::abs(times[j] - times[i]);
            if (dt <= 0.0 || dt >= window) continue;
            any = true;
            out.value = std::max(out.value, std::abs(values[j] - values[i]) / std::sqrt(dt));
        }
    }
    out.empty_window = !any;
    return out;
}

DiagnosticsReport make_report(const DrivingTerm& term, double t) {
    DiagnosticsReport rep;
    rep.H = estimate_H(term, t);
    rep.est1 = fit_growth(term, GrowthCondition::Est1, t);
    rep.est2 = fit_growth(term, GrowthCondition::Est2, t);
    if (rep.H < 2.0) {
        rep.predicted_holder = std::clamp(1.0 - rep.H / 2.0, 0.0, 1.0);
    }
    rep.hypotheses = check_hypotheses(term, t);
    return rep;
}

}  // namespace lk
