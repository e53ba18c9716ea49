#pragma once

#include <cstddef>
#include <vector>

namespace lk {

// Shape-preserving piecewise-cubic interpolant (Fritsch-Carlson slopes).
// Abscissae must be strictly increasing; monotone data stays monotone.
class MonotoneCubic {
public:
    MonotoneCubic() = default;
    MonotoneCubic(std::vector<double> x, std::vector<double> y);

    double operator()(double x) const;
    double derivative(double x) const;

    // Exact integral of the interpolant over [a, b] within the data range.
    double integral(double a, double b) const;

    double x_min() const { return x_.front(); }
    double x_max() const { return x_.back(); }

private:
    std::size_t segment(double x) const;
    double segment_integral(std::size_t i, double xa, double xb) const;

    std::vector<double> x_, y_, m_;  // nodes, values, node slopes
};

// Least-squares line fit y ~ intercept + slope * x.
struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double max_residual = 0.0;  // max |y - fit|
    double rms_residual = 0.0;
};

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace lk
