#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lk/apps.hpp"
#include "lk/boundary.hpp"
#include "lk/diagnostics.hpp"
#include "lk/driving.hpp"
#include "lk/flow.hpp"

namespace lk {

enum class RunStatus : int {
    Ok = 0,
    ConfigError = 2,
    RuntimeError = 3,
    HypothesisFailure = 4,
};

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct BoundaryAnalysis {
    double radius = 0.999;
    int points = 256;
};

struct InverseAnalysis {
    std::vector<double> deltas;
    double radius = 0.999;
    int points = 512;
};

struct HeleShawAnalysis {
    int steps = 10;
    double dt = 0.02;
    double radius = 0.4;
    int points = 64;
};

struct DlaAnalysis {
    double delta = 0.05;
    double radius = 0.5;
    int points = 64;
};

struct AnalysisSet {
    bool diagnostics = false;
    std::optional<BoundaryAnalysis> boundary;
    bool holder = false;
    bool qc = false;
    bool rectifiability = false;
    bool jordan = false;
    std::optional<InverseAnalysis> inverse;
    std::optional<int> split_pieces;
    std::optional<HeleShawAnalysis> hele_shaw;
    std::optional<DlaAnalysis> dla;
};

struct ExperimentConfig {
    DrivingTerm term = DrivingTerm::constant(Complex{1.0, 0.0});
    FlowField flow;
    std::vector<Complex> seeds;
    AnalysisSet analyses;
    std::filesystem::path output_dir = "out";
    bool assert_hypotheses = false;
};

// Parses and fully validates the declarative config; unknown keys are
// errors. Throws ConfigError with the offending key named.
ExperimentConfig parse_config_file(const std::filesystem::path& path);
ExperimentConfig parse_config_text(const std::string& text);

RunStatus run_experiment(const ExperimentConfig& config, std::ostream& log);

std::string list_catalogue();

}  // namespace lk
