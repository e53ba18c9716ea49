#include "lk/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "lk/io.hpp"

namespace lk {

namespace {

using nlohmann::json;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_keys(const json& obj, const std::string& where,
                  const std::set<std::string>& allowed) {
    if (!obj.is_object()) {
        throw ConfigError(where + " must be an object");
    }
    for (const auto& [key, value] : obj.items()) {
        if (!allowed.count(key)) {
            throw ConfigError("unknown key \"" + key + "\" in " + where);
        }
    }
}

double require_number(const json& obj, const std::string& where, const std::string& key) {
    if (!obj.contains(key)) {
        throw ConfigError("missing key \"" + key + "\" in " + where);
    }
    if (!obj[key].is_number()) {
        throw ConfigError("key \"" + key + "\" in " + where + " must be a number");
    }
    return obj[key].get<double>();
}

double number_or(const json& obj, const std::string& where, const std::string& key,
                 double fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_number()) {
        throw ConfigError("key \"" + key + "\" in " + where + " must be a number");
    }
    return obj[key].get<double>();
}

Schedule parse_schedule(const json& v, const std::string& where) {
    if (v.is_number()) {
        return Schedule(v.get<double>());
    }
    if (v.is_object()) {
        require_keys(v, where, {"schedule"});
        if (!v.contains("schedule") || !v["schedule"].is_array()) {
            throw ConfigError(where + " schedule must be an array of [t, value] pairs");
        }
        std::vector<std::pair<double, double>> knots;
        for (const auto& k : v["schedule"]) {
            if (!k.is_array() || k.size() != 2 || !k[0].is_number() || !k[1].is_number()) {
                throw ConfigError(where + " schedule entries must be [t, value] pairs");
            }
            knots.emplace_back(k[0].get<double>(), k[1].get<double>());
        }
        try {
            return Schedule(std::move(knots));
        } catch (const std::invalid_argument& e) {
            throw ConfigError(where + ": " + e.what());
        }
    }
    throw ConfigError(where + " must be a number or a schedule object");
}

DrivingTerm parse_term(const json& obj, const std::string& where) {
    if (!obj.is_object() || !obj.contains("family") || !obj["family"].is_string()) {
        throw ConfigError(where + " needs a string \"family\"");
    }
    const std::string family = obj["family"].get<std::string>();
    const bool normalize = obj.value("normalize", false);

    try {
        DrivingTerm term = [&]() -> DrivingTerm {
            if (family == "Constant") {
                require_keys(obj, where, {"family", "normalize", "value"});
                Complex c{1.0, 0.0};
                if (obj.contains("value")) {
                    const json& v = obj["value"];
                    if (v.is_number()) {
                        c = Complex{v.get<double>(), 0.0};
                    } else if (v.is_array() && v.size() == 2) {
                        c = Complex{v[0].get<double>(), v[1].get<double>()};
                    } else {
                        throw ConfigError(where + " Constant value must be a number or [re, im]");
                    }
                }
                return DrivingTerm::constant(c);
            }
            if (family == "HalfPlane") {
                require_keys(obj, where, {"family", "normalize", "k"});
                if (!obj.contains("k")) throw ConfigError(where + " HalfPlane needs \"k\"");
                return DrivingTerm::half_plane(parse_schedule(obj["k"], where + ".k"));
            }
            if (family == "Strip") {
                require_keys(obj, where, {"family", "normalize", "a", "b"});
                return DrivingTerm::strip(require_number(obj, where, "a"),
                                          require_number(obj, where, "b"));
            }
            if (family == "Sector") {
                require_keys(obj, where, {"family", "normalize", "C", "alpha"});
                if (obj.contains("C") == obj.contains("alpha")) {
                    throw ConfigError(where + " Sector needs exactly one of \"C\" or \"alpha\"");
                }
                if (obj.contains("C")) return DrivingTerm::sector(require_number(obj, where, "C"));
                return DrivingTerm::sector_from_alpha(require_number(obj, where, "alpha"));
            }
            if (family == "PointKernel") {
                require_keys(obj, where, {"family", "normalize", "u"});
                if (!obj.contains("u")) throw ConfigError(where + " PointKernel needs \"u\"");
                return DrivingTerm::point_kernel(parse_schedule(obj["u"], where + ".u"));
            }
            if (family == "Measure") {
                require_keys(obj, where, {"family", "normalize", "atoms"});
                if (!obj.contains("atoms") || !obj["atoms"].is_array()) {
                    throw ConfigError(where + " Measure needs an \"atoms\" array");
                }
                SpectralMeasure mu;
                for (const auto& a : obj["atoms"]) {
                    if (!a.is_array() || a.size() != 2) {
                        throw ConfigError(where + " atoms must be [theta, weight] pairs");
                    }
                    mu.atoms.push_back({a[0].get<double>(), a[1].get<double>()});
                }
                return DrivingTerm::measure(std::move(mu));
            }
            if (family == "Composed") {
                require_keys(obj, where, {"family", "normalize", "base", "phi"});
                if (!obj.contains("base") || !obj.contains("phi")) {
                    throw ConfigError(where + " Composed needs \"base\" and \"phi\"");
                }
                const json& phi = obj["phi"];
                require_keys(phi, where + ".phi", {"rotation", "point", "multiply_by_z"});
                SelfMap map;
                map.rotation = number_or(phi, where + ".phi", "rotation", 0.0);
                if (phi.contains("point")) {
                    const json& p = phi["point"];
                    if (!p.is_array() || p.size() != 2) {
                        throw ConfigError(where + ".phi point must be [re, im]");
                    }
                    map.point = Complex{p[0].get<double>(), p[1].get<double>()};
                }
                map.multiply_by_z = phi.value("multiply_by_z", false);
                return DrivingTerm::composed(parse_term(obj["base"], where + ".base"), map);
            }
            throw ConfigError(where + " unknown family \"" + family + "\"");
        }();
        if (normalize) {
            term = renormalize_time(term).first;
        }
        return term;
    } catch (const std::invalid_argument& e) {
        throw ConfigError(where + ": " + e.what());
    }
}

std::vector<Complex> parse_seeds(const json& obj, const std::string& where) {
    require_keys(obj, where, {"circle", "points"});
    std::vector<Complex> seeds;
    if (obj.contains("circle")) {
        const json& c = obj["circle"];
        require_keys(c, where + ".circle", {"radius", "count"});
        const double radius = require_number(c, where + ".circle", "radius");
        const int count = static_cast<int>(require_number(c, where + ".circle", "count"));
        if (count < 1) throw ConfigError(where + ".circle count must be positive");
        for (int i = 0; i < count; ++i) {
            seeds.push_back(std::polar(radius, kTwoPi * i / count));
        }
    }
    if (obj.contains("points")) {
        if (!obj["points"].is_array()) {
            throw ConfigError(where + ".points must be an array of [re, im]");
        }
        for (const auto& p : obj["points"]) {
            if (!p.is_array() || p.size() != 2) {
                throw ConfigError(where + ".points entries must be [re, im]");
            }
            seeds.push_back(Complex{p[0].get<double>(), p[1].get<double>()});
        }
    }
    return seeds;
}

ExperimentConfig parse_config_json(const json& root) {
    require_keys(root, "config", {"term", "flow", "analyses", "output", "assert_hypotheses"});
    if (!root.contains("term")) throw ConfigError("config needs a \"term\" section");

    ExperimentConfig cfg;
    cfg.term = parse_term(root["term"], "term");
    cfg.flow.term = cfg.term;

    if (root.contains("flow")) {
        const json& f = root["flow"];
        require_keys(f, "flow",
                     {"direction", "horizon", "rtol", "atol", "boundary_tol", "max_step",
                      "seeds"});
        if (f.contains("direction")) {
            const std::string d = f["direction"].get<std::string>();
            if (d == "forward") {
                cfg.flow.direction = FlowDirection::Forward;
            } else if (d == "backward") {
                cfg.flow.direction = FlowDirection::Backward;
            } else {
                throw ConfigError("flow direction must be \"forward\" or \"backward\"");
            }
        }
        cfg.flow.horizon = number_or(f, "flow", "horizon", 1.0);
        cfg.flow.tol.rel = number_or(f, "flow", "rtol", 1e-10);
        cfg.flow.tol.abs = number_or(f, "flow", "atol", 1e-10);
        cfg.flow.tol.boundary = number_or(f, "flow", "boundary_tol", 1e-6);
        cfg.flow.max_step = number_or(f, "flow", "max_step", 0.0);
        if (!(cfg.flow.horizon > 0.0)) throw ConfigError("flow horizon must be positive");
        if (!(cfg.flow.tol.rel > 0.0 && cfg.flow.tol.abs > 0.0 && cfg.flow.tol.boundary > 0.0)) {
            throw ConfigError("flow tolerances must be positive");
        }
        if (f.contains("seeds")) {
            cfg.seeds = parse_seeds(f["seeds"], "flow.seeds");
        }
    }

    if (root.contains("analyses")) {
        const json& a = root["analyses"];
        require_keys(a, "analyses",
                     {"diagnostics", "boundary", "holder", "qc", "rectifiability", "jordan",
                      "inverse", "split", "hele_shaw", "dla"});
        auto enabled_flag = [&](const std::string& key) {
            if (!a.contains(key)) return false;
            const json& v = a[key];
            if (v.is_boolean()) return v.get<bool>();
            if (v.is_object()) {
                require_keys(v, "analyses." + key, {});
                return true;
            }
            throw ConfigError("analyses." + key + " must be a boolean or an object");
        };
        cfg.analyses.diagnostics = enabled_flag("diagnostics");
        cfg.analyses.holder = enabled_flag("holder");
        cfg.analyses.qc = enabled_flag("qc");
        cfg.analyses.rectifiability = enabled_flag("rectifiability");
        cfg.analyses.jordan = enabled_flag("jordan");
        if (a.contains("boundary")) {
            const json& b = a["boundary"];
            require_keys(b, "analyses.boundary", {"radius", "points"});
            BoundaryAnalysis ba;
            ba.radius = number_or(b, "analyses.boundary", "radius", ba.radius);
            ba.points = static_cast<int>(number_or(b, "analyses.boundary", "points", ba.points));
            cfg.analyses.boundary = ba;
        }
        if (a.contains("inverse")) {
            const json& b = a["inverse"];
            require_keys(b, "analyses.inverse", {"deltas", "radius", "points"});
            InverseAnalysis ia;
            if (b.contains("deltas")) {
                for (const auto& d : b["deltas"]) ia.deltas.push_back(d.get<double>());
            } else {
                for (int i = 0; i < 12; ++i) ia.deltas.push_back(1e-3 * std::pow(10.0, 2.0 * i / 11.0));
            }
            ia.radius = number_or(b, "analyses.inverse", "radius", ia.radius);
            ia.points = static_cast<int>(number_or(b, "analyses.inverse", "points", ia.points));
            cfg.analyses.inverse = ia;
        }
        if (a.contains("split")) {
            const json& b = a["split"];
            require_keys(b, "analyses.split", {"pieces"});
            cfg.analyses.split_pieces = static_cast<int>(require_number(b, "analyses.split", "pieces"));
        }
        if (a.contains("hele_shaw")) {
            const json& b = a["hele_shaw"];
            require_keys(b, "analyses.hele_shaw", {"steps", "dt", "radius", "points"});
            HeleShawAnalysis h;
            h.steps = static_cast<int>(number_or(b, "analyses.hele_shaw", "steps", h.steps));
            h.dt = number_or(b, "analyses.hele_shaw", "dt", h.dt);
            h.radius = number_or(b, "analyses.hele_shaw", "radius", h.radius);
            h.points = static_cast<int>(number_or(b, "analyses.hele_shaw", "points", h.points));
            cfg.analyses.hele_shaw = h;
        }
        if (a.contains("dla")) {
            const json& b = a["dla"];
            require_keys(b, "analyses.dla", {"delta", "radius", "points"});
            DlaAnalysis d;
            d.delta = number_or(b, "analyses.dla", "delta", d.delta);
            d.radius = number_or(b, "analyses.dla", "radius", d.radius);
            d.points = static_cast<int>(number_or(b, "analyses.dla", "points", d.points));
            cfg.analyses.dla = d;
        }
    }

    if (root.contains("output")) {
        const json& o = root["output"];
        require_keys(o, "output", {"dir"});
        if (o.contains("dir")) {
            cfg.output_dir = o["dir"].get<std::string>();
        }
    }
    cfg.assert_hypotheses = root.value("assert_hypotheses", false);
    return cfg;
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::HoldsOnGrid: return "holds-on-grid";
        case Verdict::Fails: return "fails";
        default: return "not-applicable";
    }
}

class ArtifactSink {
public:
    explicit ArtifactSink(std::filesystem::path dir) : dir_(std::move(dir)) {
        std::filesystem::create_directories(dir_);
    }

    void write(const std::string& name, const std::string& content) {
        atomic_write(dir_ / name, content);
        hashes_[name] = content_hash(content);
    }

    void write_manifest() {
        std::ostringstream os;
        for (const auto& [name, hash] : hashes_) {
            os << name << "\t" << hash << "\n";
        }
        atomic_write(dir_ / "manifest.txt", os.str());
    }

private:
    std::filesystem::path dir_;
    std::map<std::string, std::string> hashes_;  // sorted by name
};

}  // namespace

ExperimentConfig parse_config_text(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    return parse_config_json(root);
}

ExperimentConfig parse_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot read config file " + path.string());
    }
    std::ostringstream os;
    os << in.rdbuf();
    return parse_config_text(os.str());
}

RunStatus run_experiment(const ExperimentConfig& config, std::ostream& log) {
    ArtifactSink sink(config.output_dir);
    bool runtime_error = false;
    bool hypothesis_failure = false;

    auto guarded = [&](const std::string& name, const auto& body) {
        try {
            body();
            log << "[ok] " << name << "\n";
        } catch (const std::exception& e) {
            runtime_error = true;
            log << "[error] " << name << ": " << e.what() << "\n";
        }
    };

    const std::string term_desc = config.term.describe();
    const std::string direction =
        config.flow.direction == FlowDirection::Forward ? "forward" : "backward";

    if (!config.seeds.empty()) {
        guarded("trajectories", [&] {
            const auto trajectories = integrate_grid(config.flow, config.seeds);
            for (std::size_t i = 0; i < trajectories.size(); ++i) {
                const Trajectory& traj = trajectories[i];
                std::vector<Column> cols(5);
                cols[0].name = "t";
                cols[1].name = "re_w";
                cols[2].name = "im_w";
                cols[3].name = "re_wz";
                cols[4].name = "im_wz";
                for (const auto& s : traj.samples) {
                    cols[0].values.push_back(s.t);
                    cols[1].values.push_back(s.w.real());
                    cols[2].values.push_back(s.w.imag());
                    cols[3].values.push_back(s.wz.real());
                    cols[4].values.push_back(s.wz.imag());
                }
                char name[64];
                std::snprintf(name, sizeof(name), "trajectory_%04zu.tsv", i);
                sink.write(name, render_columns({"term: " + term_desc,
                                                 "direction: " + direction},
                                                cols));
            }
        });
    }

    if (config.analyses.diagnostics) {
        guarded("diagnostics", [&] {
            const DiagnosticsReport rep = make_report(config.term);
            std::map<std::string, std::string> kv;
            kv["H"] = format_double(rep.H);
            kv["est1.C"] = format_double(rep.est1.C);
            kv["est1.alpha"] = format_double(rep.est1.alpha);
            kv["est1.residual"] = format_double(rep.est1.residual);
            kv["est1.satisfied"] = rep.est1.satisfied ? "true" : "false";
            kv["est2.C"] = format_double(rep.est2.C);
            kv["est2.alpha"] = format_double(rep.est2.alpha);
            kv["est2.residual"] = format_double(rep.est2.residual);
            kv["est2.satisfied"] = rep.est2.satisfied ? "true" : "false";
            if (rep.predicted_holder) {
                kv["predicted_holder"] = format_double(*rep.predicted_holder);
            }
            for (const auto& [name, res] : rep.hypotheses) {
                kv["hypothesis." + name] = verdict_name(res.verdict);
                kv["hypothesis." + name + ".detail"] = res.detail;
                if (res.verdict == Verdict::Fails) hypothesis_failure = true;
            }
            sink.write("diagnostics.kv", render_kv(kv));
        });
    }

    BoundaryAnalysis bconf = config.analyses.boundary.value_or(BoundaryAnalysis{});
    std::optional<BoundaryCurve> curve;
    auto ensure_curve = [&]() -> const BoundaryCurve& {
        if (!curve) {
            curve = trace_boundary(config.flow, config.flow.horizon, bconf.radius, bconf.points);
        }
        return *curve;
    };

    if (config.analyses.boundary) {
        guarded("boundary", [&] {
            const BoundaryCurve& c = ensure_curve();
            std::vector<Column> cols(3);
            cols[0].name = "theta";
            cols[1].name = "re_w";
            cols[2].name = "im_w";
            for (std::size_t i = 0; i < c.size(); ++i) {
                cols[0].values.push_back(c.seed_angle(i));
                cols[1].values.push_back(c.points[i].real());
                cols[2].values.push_back(c.points[i].imag());
            }
            sink.write("boundary.tsv",
                       render_columns({"term: " + term_desc, "direction: " + direction,
                                       "time: " + format_double(c.time),
                                       "radius: " + format_double(c.radius)},
                                      cols));
        });
    }

    if (config.analyses.holder) {
        guarded("holder", [&] {
            const HolderEstimate est = estimate_holder(config.flow, config.flow.horizon);
            std::map<std::string, std::string> kv;
            kv["exponent"] = format_double(est.exponent);
            kv["constant"] = format_double(est.constant);
            kv["pairwise_exponent"] = format_double(est.pairwise_exponent);
            kv["disagreement"] = est.disagreement ? "true" : "false";
            kv["insufficient_range"] = est.insufficient_range ? "true" : "false";
            sink.write("holder.kv", render_kv(kv));
        });
    }

    if (config.analyses.qc) {
        guarded("qc", [&] {
            const ThreePointResult res = three_point_ratio(ensure_curve());
            std::map<std::string, std::string> kv;
            kv["normalized_three_point_ratio"] = format_double(res.normalized_ratio);
            kv["bounded_turning"] = format_double(res.bounded_turning);
            sink.write("qc.kv", render_kv(kv));
        });
    }

    if (config.analyses.rectifiability) {
        guarded("rectifiability", [&] {
            const RectifiabilityResult res =
                rectifiability(config.flow, config.flow.horizon, bconf.radius);
            std::map<std::string, std::string> kv;
            kv["length"] = format_double(res.length);
            kv["converged"] = res.converged ? "true" : "false";
            for (std::size_t i = 0; i < res.lengths.size(); ++i) {
                kv["length." + std::to_string(i)] = format_double(res.lengths[i]);
            }
            sink.write("rectifiability.kv", render_kv(kv));
        });
    }

    if (config.analyses.jordan) {
        guarded("jordan", [&] {
            const bool jordan = jordan_check(ensure_curve());
            sink.write("jordan.kv", render_kv({{"jordan", jordan ? "true" : "false"}}));
        });
    }

    if (config.analyses.inverse) {
        guarded("inverse", [&] {
            const InverseAnalysis& ia = *config.analyses.inverse;
            const auto modulus = inverse_modulus(config.flow, config.flow.horizon, ia.deltas,
                                                 ia.radius, ia.points);
            std::vector<Column> cols(2);
            cols[0].name = "delta";
            cols[1].name = "seed_modulus";
            for (const auto& [d, m] : modulus) {
                cols[0].values.push_back(d);
                cols[1].values.push_back(m);
            }
            sink.write("inverse.tsv",
                       render_columns({"term: " + term_desc, "direction: " + direction}, cols));
        });
    }

    if (config.analyses.split_pieces) {
        guarded("split", [&] {
            const SplitResult res =
                split_composition(config.flow, config.flow.horizon, *config.analyses.split_pieces);
            std::map<std::string, std::string> kv;
            kv["pieces"] = std::to_string(res.pieces.size());
            kv["composition_error"] = format_double(res.composition_error);
            kv["window_criterion"] = res.window_criterion ? "true" : "false";
            for (std::size_t i = 0; i < res.pieces.size(); ++i) {
                kv["piece." + std::to_string(i) + ".max_wz_deviation"] =
                    format_double(res.pieces[i].max_wz_deviation);
                kv["piece." + std::to_string(i) + ".window_ok"] =
                    res.pieces[i].window_ok ? "true" : "false";
            }
            sink.write("split.kv", render_kv(kv));
        });
    }

    std::optional<CoupledState> coupled_final;
    if (config.analyses.hele_shaw) {
        guarded("hele_shaw", [&] {
            const HeleShawAnalysis& h = *config.analyses.hele_shaw;
            CoupledState state = initial_coupled_state(h.radius, h.points);
            HeleShawConfig hs;
            hs.tol = config.flow.tol;
            for (int s = 0; s < h.steps; ++s) {
                state = hele_shaw_step(state, h.dt, hs);
                std::vector<Column> cols(5);
                cols[0].name = "theta";
                cols[1].name = "re_w";
                cols[2].name = "im_w";
                cols[3].name = "abs_wz";
                cols[4].name = "weight";
                for (std::size_t i = 0; i < state.angles.size(); ++i) {
                    cols[0].values.push_back(state.angles[i]);
                    cols[1].values.push_back(state.boundary[i].real());
                    cols[2].values.push_back(state.boundary[i].imag());
                    cols[3].values.push_back(std::abs(state.wz[i]));
                    cols[4].values.push_back(state.measure.atoms[i].weight);
                }
                char name[64];
                std::snprintf(name, sizeof(name), "hele_shaw_step_%03d.tsv", state.step);
                sink.write(name,
                           render_columns({"term: coupled hele-shaw", "step: " +
                                           std::to_string(state.step)},
                                          cols));
            }
            std::map<std::string, std::string> kv;
            kv["steps"] = std::to_string(state.step);
            kv["tau"] = format_double(state.time);
            kv["timescale_accumulated"] = format_double(state.timescale_accumulated);
            kv["area"] = format_double(polygon_area(state.boundary));
            sink.write("hele_shaw.kv", render_kv(kv));
            coupled_final = std::move(state);
        });
    }

    if (config.analyses.dla) {
        guarded("dla", [&] {
            const DlaAnalysis& d = *config.analyses.dla;
            CoupledState state = coupled_final ? *coupled_final
                                               : initial_coupled_state(d.radius, d.points);
            const auto density = carleson_makarov_density(state, d.delta);
            std::vector<Column> cols(3);
            cols[0].name = "theta";
            cols[1].name = "xi";
            cols[2].name = "flagged";
            for (const auto& s : density) {
                cols[0].values.push_back(s.theta);
                cols[1].values.push_back(s.xi);
                cols[2].values.push_back(s.flagged ? 1.0 : 0.0);
            }
            sink.write("dla.tsv",
                       render_columns({"delta: " + format_double(d.delta)}, cols));
        });
    }

    sink.write_manifest();

    if (runtime_error) return RunStatus::RuntimeError;
    if (config.assert_hypotheses && hypothesis_failure) return RunStatus::HypothesisFailure;
    return RunStatus::Ok;
}

std::string list_catalogue() {
    std::ostringstream os;
    os << "Built-in driving-term families:\n"
       << "  Constant(c)        Re c > 0; the exact exponential flow. Hypotheses: all bounds trivially.\n"
       << "  HalfPlane(k)       (1-k)(1+z)/(1-z)+k, 0<=k<1. Hypotheses: inverse-continuity growth pair (alpha=1/2),\n"
       << "                     positive-lower-bound condition Re p >= k.\n"
       << "  Strip(a,b)         ((b-a)/2)(i/pi)log((1+z)/(1-z))+(a+b)/2, 0<a<1<b. Hypotheses: two-sided bound\n"
       << "                     a < Re p < b; Hoelder and Jordan boundary conclusions.\n"
       << "  Sector(C)          ((1+z)/(1-z))^alpha, alpha=(2/pi)arctan C. Hypotheses: |Im p|/Re p < C;\n"
       << "                     characteristic H = 2 alpha; Hoelder exponent 1-alpha.\n"
       << "  PointKernel(u)     (e^{iu(t)}+z)/(e^{iu(t)}-z); slit-type evolution, sqrt-Hoelder driver diagnostic.\n"
       << "  Measure(atoms)     Herglotz integral of a discrete probability measure on the circle.\n"
       << "  Composed(base,phi) base composed with a holomorphic self-map of the disc; preserves positivity,\n"
       << "                     never increases the characteristic H.\n";
    return os.str();
}

}  // namespace lk
