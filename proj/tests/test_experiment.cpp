#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>

#include "lk/experiment.hpp"
#include "lk/io.hpp"

using namespace lk;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / name;
    fs::remove_all(dir);
    return dir;
}

const char* kBasicConfig = R"({
  "term": {"family": "Constant", "value": 1.0},
  "flow": {"direction": "forward", "horizon": 1.0,
           "seeds": {"circle": {"radius": 0.9, "count": 4}}},
  "analyses": {"boundary": {"radius": 0.999, "points": 64}, "jordan": true},
  "output": {"dir": "%OUT%"}
})";

std::string with_output(const std::string& text, const fs::path& dir) {
    std::string out = text;
    const std::string needle = "%OUT%";
    out.replace(out.find(needle), needle.size(), dir.string());
    return out;
}

}  // namespace

TEST_CASE("config parsing accepts the full surface") {
    const ExperimentConfig cfg = parse_config_text(R"({
      "term": {"family": "Sector", "alpha": 0.5, "normalize": false},
      "flow": {"direction": "backward", "horizon": 2.5,
               "rtol": 1e-9, "atol": 1e-9, "boundary_tol": 1e-5,
               "seeds": {"points": [[0.1, 0.2], [0.3, 0.0]]}},
      "analyses": {"diagnostics": true, "holder": true},
      "output": {"dir": "/tmp/x"},
      "assert_hypotheses": true
    })");
    CHECK(cfg.term.family_name() == "Sector");
    CHECK(cfg.flow.direction == FlowDirection::Backward);
    CHECK(cfg.flow.horizon == 2.5);
    CHECK(cfg.flow.tol.rel == 1e-9);
    CHECK(cfg.flow.tol.boundary == 1e-5);
    REQUIRE(cfg.seeds.size() == 2);
    CHECK(cfg.seeds[0] == Complex{0.1, 0.2});
    CHECK(cfg.analyses.diagnostics);
    CHECK(cfg.analyses.holder);
    CHECK(cfg.assert_hypotheses);
}

TEST_CASE("unknown keys are named in the error") {
    try {
        parse_config_text(R"({"term": {"family": "Constant", "value": 1.0}, "typo": 1})");
        FAIL("expected a config error");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("typo") != std::string::npos);
    }

    CHECK_THROWS_AS(parse_config_text("{not json"), ConfigError);
    CHECK_THROWS_AS(parse_config_text(R"({"term": {"family": "NoSuch"}})"), ConfigError);
    CHECK_THROWS_AS(
        parse_config_text(R"({"term": {"family": "Sector", "C": 1.0, "alpha": 0.5}})"),
        ConfigError);  // C and alpha are mutually exclusive
    CHECK_THROWS_AS(
        parse_config_text(
            R"({"term": {"family": "Constant", "value": 1.0}, "flow": {"horizon": -1}})"),
        ConfigError);
}

TEST_CASE("a run emits the declared artifacts plus a manifest") {
    const fs::path dir = fresh_dir("lk_run_artifacts");
    const ExperimentConfig cfg = parse_config_text(with_output(kBasicConfig, dir));
    std::ostringstream log;
    REQUIRE(run_experiment(cfg, log) == RunStatus::Ok);

    for (const char* name : {"manifest.txt", "boundary.tsv", "jordan.kv", "trajectory_0000.tsv",
                             "trajectory_0003.tsv"}) {
        CAPTURE(name);
        CHECK(fs::exists(dir / name));
    }
    CHECK_FALSE(fs::exists(dir / "trajectory_0004.tsv"));
    CHECK(slurp(dir / "jordan.kv").find("jordan = true") != std::string::npos);

    // every manifest entry names an existing file with a matching hash
    std::istringstream manifest(slurp(dir / "manifest.txt"));
    std::string name, hash;
    int entries = 0;
    while (manifest >> name >> hash) {
        ++entries;
        REQUIRE(fs::exists(dir / name));
        CHECK(content_hash(slurp(dir / name)) == hash);
    }
    CHECK(entries == 6);
}

TEST_CASE("identical configs give hash-identical manifests") {
    const fs::path a = fresh_dir("lk_repro_a");
    const fs::path b = fresh_dir("lk_repro_b");
    std::ostringstream log;
    run_experiment(parse_config_text(with_output(kBasicConfig, a)), log);
    run_experiment(parse_config_text(with_output(kBasicConfig, b)), log);
    CHECK(slurp(a / "manifest.txt") == slurp(b / "manifest.txt"));
    CHECK(slurp(a / "boundary.tsv") == slurp(b / "boundary.tsv"));
}

TEST_CASE("boundary artifact records the expected circle") {
    const fs::path dir = fresh_dir("lk_run_circle");
    const ExperimentConfig cfg = parse_config_text(with_output(kBasicConfig, dir));
    std::ostringstream log;
    run_experiment(cfg, log);
    std::istringstream tsv(slurp(dir / "boundary.tsv"));
    std::string line;
    const double expect = 0.999 * std::exp(-1.0);
    int rows = 0;
    while (std::getline(tsv, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        double theta, re, im;
        REQUIRE((row >> theta >> re >> im));
        CHECK(std::hypot(re, im) == doctest::Approx(expect).epsilon(1e-8));
        ++rows;
    }
    CHECK(rows == 64);
}

TEST_CASE("hypothesis assertion controls the exit status") {
    const char* tmpl = R"({
      "term": {"family": "PointKernel", "u": 0.0},
      "flow": {"horizon": 0.3},
      "analyses": {"diagnostics": true},
      "output": {"dir": "%OUT%"},
      "assert_hypotheses": %ASSERT%
    })";
    for (const bool asserting : {false, true}) {
        std::string text = with_output(tmpl, fresh_dir("lk_run_assert"));
        text.replace(text.find("%ASSERT%"), 8, asserting ? "true" : "false");
        std::ostringstream log;
        const RunStatus status = run_experiment(parse_config_text(text), log);
        // the point kernel violates the two-sided bound hypothesis
        CHECK(status == (asserting ? RunStatus::HypothesisFailure : RunStatus::Ok));
    }
}

TEST_CASE("catalogue listing is stable and mentions every family") {
    const std::string a = list_catalogue();
    CHECK(a == list_catalogue());
    for (const char* family :
         {"Constant", "HalfPlane", "Strip", "Sector", "PointKernel", "Measure", "Composed"}) {
        CAPTURE(family);
        CHECK(a.find(family) != std::string::npos);
    }
}

TEST_CASE("content hash and atomic write round trip") {
    CHECK(content_hash("") == content_hash(""));
    CHECK(content_hash("a") != content_hash("b"));
    const fs::path p = fs::temp_directory_path() / "lk_atomic_probe.txt";
    atomic_write(p, "payload\n");
    CHECK(slurp(p) == "payload\n");
    fs::remove(p);
}

TEST_CASE("key-value rendering is sorted and stable") {
    const std::string out = render_kv({{"b", "2"}, {"a", "1"}});
    CHECK(out == "a = 1\nb = 2\n");
}
