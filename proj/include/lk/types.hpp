#pragma once

#include <complex>
#include <cmath>
#include <stdexcept>

namespace lk {

using Complex = std::complex<double>;

// Evaluation guard: terms are never evaluated closer to the unit circle
// than this, every estimate we compute degenerates as r -> 1.
inline constexpr double kGuardRadius = 1.0 - 1e-9;

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline void require_interior(Complex z) {
    if (!is_finite(z)) {
        throw std::domain_error("non-finite point passed to disc evaluation");
    }
    if (std::abs(z) > kGuardRadius) {
        throw std::domain_error("evaluation point outside the guarded unit disc");
    }
}

}  // namespace lk
