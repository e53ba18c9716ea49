#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lk/driving.hpp"
#include "lk/types.hpp"

namespace lk {

// Fit of a growth condition against the radial window r in [0.9, 0.9999]:
//   est1:  |p|/Re p <= C / (1-r)^alpha
//   est2:  Re p     >= C * (1-r)^alpha
struct GrowthFit {
    double C = 0.0;
    double alpha = 0.0;
    double residual = 0.0;  // max log-scale violation of the fitted bound
    bool satisfied = false;
};

enum class GrowthCondition { Est1, Est2 };

enum class Verdict { HoldsOnGrid, Fails, NotApplicable };

struct HypothesisResult {
    Verdict verdict = Verdict::NotApplicable;
    Complex witness;        // sampled extremum location (for Fails: offending z)
    double value = 0.0;     // sampled extremum
    std::string detail;
};

struct SqrtNorm {
    double value = 0.0;
    bool empty_window = false;
};

struct DiagnosticsReport {
    double H = 0.0;
    GrowthFit est1, est2;
    std::optional<double> predicted_holder;  // 1 - H/2, only when H < 2
    std::map<std::string, HypothesisResult> hypotheses;
    std::optional<double> driver_sqrt_norm;
};

// Grid sup of (1-|z|^2)|p'(z)|/Re p(z), refined by golden-section polish
// around the best cell; a certified lower bound of the true sup.
double estimate_H(const DrivingTerm& term, double t, int n_r = 256, int n_theta = 256);

GrowthFit fit_growth(const DrivingTerm& term, GrowthCondition which, double t,
                     double slack = 0.1);

std::map<std::string, HypothesisResult> check_hypotheses(const DrivingTerm& term,
                                                         double t = 0.0);

// sup over sample pairs with 0 < |t-s| < window of |u(t)-u(s)|/sqrt(|t-s|).
SqrtNorm driver_sqrt_norm(const std::vector<double>& times, const std::vector<double>& values,
                          double window);

DiagnosticsReport make_report(const DrivingTerm& term, double t = 0.0);

}  // namespace lk
