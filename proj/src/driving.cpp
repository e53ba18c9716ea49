#include "lk/driving.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace lk {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

Schedule::Schedule(std::vector<std::pair<double, double>> knots) : knots_(std::move(knots)) {
    if (knots_.empty()) {
        throw std::invalid_argument("schedule needs at least one knot");
    }
    for (std::size_t i = 1; i < knots_.size(); ++i) {
        if (knots_[i].first <= knots_[i - 1].first) {
            throw std::invalid_argument("schedule knot times must be strictly increasing");
        }
    }
}

double Schedule::at(double t) const {
    double v = knots_.front().second;
    for (const auto& [tk, vk] : knots_) {
        if (t >= tk) {
            v = vk;
        } else {
            break;
        }
    }
    return v;
}

void SpectralMeasure::validate() const {
    if (atoms.empty()) {
        throw std::invalid_argument("spectral measure has no atoms");
    }
    double prev = -1.0;
    double sum = 0.0;
    for (const auto& a : atoms) {
        if (!(a.theta >= 0.0 && a.theta < kTwoPi)) {
            throw std::invalid_argument("atom angle outside [0, 2*pi)");
        }
        if (a.theta <= prev) {
            throw std::invalid_argument("atom angles must be strictly increasing");
        }
        if (!(a.weight >= 0.0)) {
            throw std::invalid_argument("atom weight must be nonnegative");
        }
        prev = a.theta;
        sum += a.weight;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
        throw std::invalid_argument("atom weights must sum to 1");
    }
    if (!(raw_mass > 0.0)) {
        throw std::invalid_argument("raw mass must be positive");
    }
}

double SpectralMeasure::total_weight() const {
    double sum = 0.0;
    for (const auto& a : atoms) sum += a.weight;
    return sum;
}

Complex SelfMap::operator()(Complex z) const {
    const Complex rot = std::polar(1.0, rotation);
    Complex v = (z - point) / (1.0 - std::conj(point) * z);
    if (multiply_by_z) v *= z;
    return rot * v;
}

Complex SelfMap::derivative(Complex z) const {
    const Complex rot = std::polar(1.0, rotation);
    const Complex den = 1.0 - std::conj(point) * z;
    const Complex b = (z - point) / den;
    const Complex db = (1.0 - std::norm(point)) / (den * den);
    if (multiply_by_z) {
        return rot * (b + z * db);
    }
    return rot * db;
}

DrivingTerm DrivingTerm::constant(Complex c) {
    if (!(c.real() > 0.0)) {
        throw std::invalid_argument("constant term needs Re c > 0");
    }
    return DrivingTerm(Kind{Constant{c}});
}

DrivingTerm DrivingTerm::half_plane(Schedule k) {
    for (const auto& [t, v] : k.knots()) {
        if (!(v >= 0.0 && v < 1.0)) {
            throw std::invalid_argument("half-plane parameter needs 0 <= k < 1");
        }
    }
    return DrivingTerm(Kind{HalfPlane{std::move(k)}});
}

DrivingTerm DrivingTerm::strip(double a, double b) {
    if (!(0.0 < a && a < 1.0 && 1.0 < b && std::isfinite(b))) {
        throw std::invalid_argument("strip parameters need 0 < a < 1 < b < inf");
    }
    return DrivingTerm(Kind{Strip{a, b}});
}

DrivingTerm DrivingTerm::sector(double C) {
    if (!(C > 0.0)) {
        throw std::invalid_argument("sector parameter needs C > 0");
    }
    const double alpha = (2.0 / std::numbers::pi) * std::atan(C);
    if (!(alpha < 1.0)) {
        throw std::invalid_argument("sector opening alpha must be below 1");
    }
    return DrivingTerm(Kind{Sector{C, alpha}});
}

DrivingTerm DrivingTerm::sector_from_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("sector alpha must lie in (0,1)");
    }
    return sector(std::tan(alpha * std::numbers::pi / 2.0));
}

DrivingTerm DrivingTerm::point_kernel(Schedule u) {
    return DrivingTerm(Kind{PointKernel{std::move(u)}});
}

DrivingTerm DrivingTerm::measure(SpectralMeasure mu) {
    mu.validate();
    return DrivingTerm(Kind{Measure{std::move(mu)}});
}

DrivingTerm DrivingTerm::composed(DrivingTerm base, SelfMap phi) {
    if (std::abs(phi.point) >= 1.0) {
        throw std::invalid_argument("self-map parameter must lie inside the disc");
    }
    auto shared = std::make_shared<const DrivingTerm>(std::move(base));
    return DrivingTerm(Kind{Composed{std::move(shared), phi}});
}

Complex DrivingTerm::raw_evaluate(Complex z, double t) const {
    return std::visit(
        [&](const auto& fam) -> Complex {
            using T = std::decay_t<decltype(fam)>;
            if constexpr (std::is_same_v<T, Constant>) {
                return fam.c;
            } else if constexpr (std::is_same_v<T, HalfPlane>) {
                const double k = fam.k.at(t);
                return (1.0 - k) * (1.0 + z) / (1.0 - z) + k;
            } else if constexpr (std::is_same_v<T, Strip>) {
                const Complex i{0.0, 1.0};
                return 0.5 * (fam.b - fam.a) * (i / std::numbers::pi) *
                           std::log((1.0 + z) / (1.0 - z)) +
                       0.5 * (fam.a + fam.b);
            } else if constexpr (std::is_same_v<T, Sector>) {
                return std::pow((1.0 + z) / (1.0 - z), fam.alpha);
            } else if constexpr (std::is_same_v<T, PointKernel>) {
                const Complex e = std::polar(1.0, fam.u.at(t));
                return (e + z) / (e - z);
            } else if constexpr (std::is_same_v<T, Measure>) {
                Complex sum{0.0, 0.0};
                for (const auto& a : fam.mu.atoms) {
                    const Complex e = std::polar(1.0, a.theta);
                    sum += a.weight * (e + z) / (e - z);
                }
                return sum;
            } else {
                static_assert(std::is_same_v<T, Composed>);
                return fam.base->evaluate(fam.phi(z), t);
            }
        },
        kind_);
}

Complex DrivingTerm::raw_derivative(Complex z, double t) const {
    return std::visit(
        [&](const auto& fam) -> Complex {
            using T = std::decay_t<decltype(fam)>;
            if constexpr (std::is_same_v<T, Constant>) {
                return Complex{0.0, 0.0};
            } else if constexpr (std::is_same_v<T, HalfPlane>) {
                const double k = fam.k.at(t);
                const Complex d = 1.0 - z;
                return (1.0 - k) * 2.0 / (d * d);
            } else if constexpr (std::is_same_v<T, Strip>) {
                const Complex i{0.0, 1.0};
                return (fam.b - fam.a) * i / (std::numbers::pi * (1.0 - z * z));
            } else if constexpr (std::is_same_v<T, Sector>) {
                const Complex p = std::pow((1.0 + z) / (1.0 - z), fam.alpha);
                return 2.0 * fam.alpha * p / (1.0 - z * z);
            } else if constexpr (std::is_same_v<T, PointKernel>) {
                const Complex e = std::polar(1.0, fam.u.at(t));
                const Complex d = e - z;
                return 2.0 * e / (d * d);
            } else if constexpr (std::is_same_v<T, Measure>) {
                Complex sum{0.0, 0.0};
                for (const auto& a : fam.mu.atoms) {
                    const Complex e = std::polar(1.0, a.theta);
                    const Complex d = e - z;
                    sum += a.weight * 2.0 * e / (d * d);
                }
                return sum;
            } else {
                static_assert(std::is_same_v<T, Composed>);
                return fam.base->evaluate_derivative(fam.phi(z), t) * fam.phi.derivative(z);
            }
        },
        kind_);
}

Complex DrivingTerm::evaluate(Complex z, double t) const {
    require_interior(z);
    Complex p = raw_evaluate(z, t);
    if (normalize_) {
        p /= value_at_origin(t);
    }
    return p;
}

Complex DrivingTerm::evaluate_derivative(Complex z, double t) const {
    require_interior(z);
    Complex dp = raw_derivative(z, t);
    if (normalize_) {
        dp /= value_at_origin(t);
    }
    return dp;
}

double DrivingTerm::value_at_origin(double t) const {
    const double v = raw_evaluate(Complex{0.0, 0.0}, t).real();
    if (!(v > 0.0)) {
        throw std::domain_error("Re p(0,t) is not positive; term left the class");
    }
    return v;
}

std::string DrivingTerm::family_name() const {
    return std::visit(
        [](const auto& fam) -> std::string {
            using T = std::decay_t<decltype(fam)>;
            if constexpr (std::is_same_v<T, Constant>) return "Constant";
            else if constexpr (std::is_same_v<T, HalfPlane>) return "HalfPlane";
            else if constexpr (std::is_same_v<T, Strip>) return "Strip";
            else if constexpr (std::is_same_v<T, Sector>) return "Sector";
            else if constexpr (std::is_same_v<T, PointKernel>) return "PointKernel";
            else if constexpr (std::is_same_v<T, Measure>) return "Measure";
            else return "Composed";
        },
        kind_);
}

std::string DrivingTerm::describe() const {
    std::ostringstream os;
    os << family_name();
    std::visit(
        [&](const auto& fam) {
            using T = std::decay_t<decltype(fam)>;
            if constexpr (std::is_same_v<T, Constant>) {
                os << "(" << fam.c.real() << (fam.c.imag() < 0 ? "-" : "+")
                   << std::abs(fam.c.imag()) << "i)";
            } else if constexpr (std::is_same_v<T, HalfPlane>) {
                os << "(k=" << fam.k.at(0.0) << ")";
            } else if constexpr (std::is_same_v<T, Strip>) {
                os << "(a=" << fam.a << ",b=" << fam.b << ")";
            } else if constexpr (std::is_same_v<T, Sector>) {
                os << "(C=" << fam.C << ",alpha=" << fam.alpha << ")";
            } else if constexpr (std::is_same_v<T, PointKernel>) {
                os << "(u=" << fam.u.at(0.0) << ")";
            } else if constexpr (std::is_same_v<T, Measure>) {
                os << "(" << fam.mu.atoms.size() << " atoms)";
            } else {
                os << "(" << fam.base->describe() << ")";
            }
        },
        kind_);
    if (normalize_) os << "*";
    return os.str();
}

SpectralMeasure herglotz_from_density(const std::function<double(double)>& xi, int n) {
    if (n < 2) {
        throw std::invalid_argument("need at least two atoms");
    }
    std::vector<double> angles(n), values(n);
    const double h = kTwoPi / n;
    for (int j = 0; j < n; ++j) {
        angles[j] = (j + 0.5) * h;
        values[j] = xi(angles[j]);
    }
    return herglotz_from_samples(angles, values);
}

SpectralMeasure herglotz_from_samples(const std::vector<double>& angles,
                                      const std::vector<double>& values) {
    if (angles.size() != values.size() || angles.size() < 2) {
        throw std::invalid_argument("need at least two matching samples");
    }
    // density w.r.t. the normalized angle measure: raw mass = mean of xi
    const double h = 1.0 / static_cast<double>(angles.size());
    SpectralMeasure mu;
    double mass = 0.0;
    for (std::size_t j = 0; j < angles.size(); ++j) {
        if (!(values[j] >= 0.0)) {
            throw std::invalid_argument("density sample is negative");
        }
        double th = std::fmod(angles[j], kTwoPi);
        if (th < 0.0) th += kTwoPi;
        mu.atoms.push_back({th, values[j] * h});
        mass += values[j] * h;
    }
    if (!(mass > 0.0)) {
        throw std::invalid_argument("density has zero mass");
    }
    std::sort(mu.atoms.begin(), mu.atoms.end(),
              [](const auto& x, const auto& y) { return x.theta < y.theta; });
    for (auto& a : mu.atoms) a.weight /= mass;
    // Pull an exact-unity total despite rounding in the division above.
    double sum = 0.0;
    for (const auto& a : mu.atoms) sum += a.weight;
    for (auto& a : mu.atoms) a.weight /= sum;
    mu.raw_mass = mass;
    mu.validate();
    return mu;
}

std::pair<DrivingTerm, std::function<double(double)>> renormalize_time(const DrivingTerm& term) {
    if (term.normalize_) {
        return {term, [](double) { return 1.0; }};
    }
    DrivingTerm out = term;
    out.normalize_ = true;
    auto timescale = [raw = term](double t) { return 1.0 / raw.value_at_origin(t); };
    return {std::move(out), std::move(timescale)};
}

}  // namespace lk
