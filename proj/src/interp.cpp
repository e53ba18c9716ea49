#include "lk/interp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lk {

MonotoneCubic::MonotoneCubic(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
    const std::size_t n = x_.size();
    if (n < 2 || y_.size() != n) {
        throw std::invalid_argument("interpolant needs >= 2 matching nodes");
    }
    for (std::size_t i = 1; i < n; ++i) {
        if (!(x_[i] > x_[i - 1])) {
            throw std::invalid_argument("interpolation abscissae must be strictly increasing");
        }
    }
    std::vector<double> d(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        d[i] = (y_[i + 1] - y_[i]) / (x_[i + 1] - x_[i]);
    }
    m_.assign(n, 0.0);
    m_[0] = d[0];
    m_[n - 1] = d[n - 2];
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (d[i - 1] * d[i] <= 0.0) {
            m_[i] = 0.0;
        } else {
            // weighted harmonic mean keeps the interpolant monotone
            const double w1 = 2.0 * (x_[i + 1] - x_[i]) + (x_[i] - x_[i - 1]);
            const double w2 = (x_[i + 1] - x_[i]) + 2.0 * (x_[i] - x_[i - 1]);
            m_[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
        }
    }
    // clamp endpoint slopes (Fritsch-Carlson)
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (d[i] == 0.0) {
            m_[i] = m_[i + 1] = 0.0;
        } else {
            const double a = m_[i] / d[i];
            const double b = m_[i + 1] / d[i];
            const double s = a * a + b * b;
            if (s > 9.0) {
                const double tau = 3.0 / std::sqrt(s);
                m_[i] = tau * a * d[i];
                m_[i + 1] = tau * b * d[i];
            }
        }
    }
}

std::size_t MonotoneCubic::segment(double x) const {
    auto it = std::upper_bound(x_.begin(), x_.end(), x);
    std::size_t i = static_cast<std::size_t>(std::distance(x_.begin(), it));
    if (i == 0) return 0;
    if (i >= x_.size()) return x_.size() - 2;
    return i - 1;
}

double MonotoneCubic::operator()(double x) const {
    const std::size_t i = segment(x);
    const double h = x_[i + 1] - x_[i];
    const double s = (x - x_[i]) / h;
    const double h00 = (1.0 + 2.0 * s) * (1.0 - s) * (1.0 - s);
    const double h10 = s * (1.0 - s) * (1.0 - s);
    const double h01 = s * s * (3.0 - 2.0 * s);
    const double h11 = s * s * (s - 1.0);
    return h00 * y_[i] + h10 * h * m_[i] + h01 * y_[i + 1] + h11 * h * m_[i + 1];
}

double MonotoneCubic::derivative(double x) const {
    const std::size_t i = segment(x);
    const double h = x_[i + 1] - x_[i];
    const double s = (x - x_[i]) / h;
    const double dh00 = 6.0 * s * s - 6.0 * s;
    const double dh10 = 3.0 * s * s - 4.0 * s + 1.0;
    const double dh01 = -6.0 * s * s + 6.0 * s;
    const double dh11 = 3.0 * s * s - 2.0 * s;
    return (dh00 * y_[i] + dh01 * y_[i + 1]) / h + dh10 * m_[i] + dh11 * m_[i + 1];
}

double MonotoneCubic::segment_integral(std::size_t i, double xa, double xb) const {
    const double h = x_[i + 1] - x_[i];
    auto antideriv = [&](double s) {
        // integral of the Hermite basis in s, scaled by h
        const double s2 = s * s, s3 = s2 * s, s4 = s3 * s;
        const double H00 = s - s3 + 0.5 * s4;
        const double H10 = 0.5 * s2 - (2.0 / 3.0) * s3 + 0.25 * s4;
        const double H01 = s3 - 0.5 * s4;
        const double H11 = 0.25 * s4 - s3 / 3.0;
        return h * (H00 * y_[i] + H10 * h * m_[i] + H01 * y_[i + 1] + H11 * h * m_[i + 1]);
    };
    const double sa = (xa - x_[i]) / h;
    const double sb = (xb - x_[i]) / h;
    return antideriv(sb) - antideriv(sa);
}

double MonotoneCubic::integral(double a, double b) const {
    double sign = 1.0;
    if (a > b) {
        std::swap(a, b);
        sign = -1.0;
    }
    a = std::clamp(a, x_.front(), x_.back());
    b = std::clamp(b, x_.front(), x_.back());
    const std::size_t ia = segment(a);
    const std::size_t ib = segment(b);
    if (ia == ib) {
        return sign * segment_integral(ia, a, b);
    }
    double acc = segment_integral(ia, a, x_[ia + 1]);
    for (std::size_t i = ia + 1; i < ib; ++i) {
        acc += segment_integral(i, x_[i], x_[i + 1]);
    }
    acc += segment_integral(ib, x_[ib], b);
    return sign * acc;
}

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw std::invalid_argument("line fit needs >= 2 matching points");
    }
    const double n = static_cast<double>(x.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double denom = n * sxx - sx * sx;
    LineFit fit;
    if (denom == 0.0) {
        fit.slope = 0.0;
        fit.intercept = sy / n;
    } else {
        fit.slope = (n * sxy - sx * sy) / denom;
        fit.intercept = (sy - fit.slope * sx) / n;
    }
    double ss = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = std::abs(y[i] - (fit.intercept + fit.slope * x[i]));
        fit.max_residual = std::max(fit.max_residual, r);
        ss += r * r;
    }
    fit.rms_residual = std::sqrt(ss / n);
    return fit;
}

}  // namespace lk
