#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "tactile/annotation_io.hpp"
#include "tactile/config.hpp"
#include "tactile/hints.hpp"
#include "tactile/image_model.hpp"
#include "tactile/metrics.hpp"
#include "tactile/session.hpp"
#include "tactile/simulate.hpp"
#include "tactile/trace_io.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kValidationError = 2;
constexpr int kIoError = 3;

// Signals an exit code from deep inside a subcommand.
struct ExitCode {
    int code;
};

tactile::AnnotatedImage load_valid(const std::string& path) {
    tactile::AnnotatedImage image = tactile::load_annotation(path);
    const auto issues = tactile::validate(image);
    for (const auto& issue : issues) {
        std::cerr << path << ": " << tactile::format_issue(issue) << "\n";
    }
    if (tactile::has_errors(issues)) {
        throw ExitCode{kValidationError};
    }
    return image;
}

tactile::EngineConfig load_config_opt(const std::string& path) {
    return path.empty() ? tactile::EngineConfig{} : tactile::load_config(path);
}

tactile::Tools parse_tools(const std::string& csv) {
    try {
        return tactile::Tools::parse(csv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        throw ExitCode{kValidationError};
    }
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
    } else {
        tactile::write_text_file(path, text);
    }
}

int cmd_validate(const std::string& annot) {
    const tactile::AnnotatedImage image = tactile::load_annotation(annot);
    const auto issues = tactile::validate(image);
    for (const auto& issue : issues) {
        std::cout << annot << ": " << tactile::format_issue(issue) << "\n";
    }
    if (tactile::has_errors(issues)) {
        return kValidationError;
    }
    if (issues.empty()) {
        std::cout << annot << ": ok\n";
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Touch image exploration engine: validation, replay, simulation and metrics"};
    app.require_subcommand(1);

    std::string annot, trace, tools_csv = "none", out, metrics_out, config_path, strategy_text, out_trace, log_path;
    std::optional<std::int64_t> duration;
    bool in_place = false;

    auto* validate_cmd = app.add_subcommand("validate", "Check an annotation file");
    validate_cmd->add_option("annot", annot, "Annotation file (.annot.json)")->required();

    auto* replay_cmd = app.add_subcommand("replay", "Replay a touch trace and write the event log");
    replay_cmd->add_option("annot", annot, "Annotation file")->required();
    replay_cmd->add_option("trace", trace, "Trace file (.trace.json)")->required();
    replay_cmd->add_option("--tools", tools_csv, "Comma-separated: menu_beacon,hints,zoom or none");
    replay_cmd->add_option("--out", out, "Event log (.events.jsonl); stdout if omitted");
    replay_cmd->add_option("--metrics", metrics_out, "Metrics JSON output");
    replay_cmd->add_option("--config", config_path, "Engine config file");

    auto* simulate_cmd = app.add_subcommand("simulate", "Run a scripted exploration strategy");
    simulate_cmd->add_option("annot", annot, "Annotation file")->required();
    simulate_cmd->add_option("--strategy", strategy_text, "grid:<pitch> or beacon")->required();
    simulate_cmd->add_option("--tools", tools_csv, "Comma-separated: menu_beacon,hints,zoom or none");
    simulate_cmd->add_option("--out-trace", out_trace, "Generated trace output");
    simulate_cmd->add_option("--metrics", metrics_out, "Metrics JSON output; stdout if omitted");
    simulate_cmd->add_option("--out", out, "Event log output");
    simulate_cmd->add_option("--config", config_path, "Engine config file");

    auto* metrics_cmd = app.add_subcommand("metrics", "Recompute session metrics from an event log");
    metrics_cmd->add_option("log", log_path, "Event log (.events.jsonl)")->required();
    metrics_cmd->add_option("--annot", annot, "Annotation file giving the total area count");
    metrics_cmd->add_option("--duration", duration, "Session length in ms (default: last event time)");

    auto* prominence_cmd = app.add_subcommand("prominence", "Bake CAM prominence into the annotation");
    prominence_cmd->add_option("annot", annot, "Annotation file")->required();
    prominence_cmd->add_flag("--in-place", in_place, "Rewrite the annotation file");
    prominence_cmd->add_option("--out", out, "Write to this file instead (stdout if neither)");

    auto* config_cmd = app.add_subcommand("config", "Print the default engine config");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*validate_cmd) {
            return cmd_validate(annot);
        }
        if (*replay_cmd) {
            const tactile::Tools tools = parse_tools(tools_csv);
            const tactile::EngineConfig config = load_config_opt(config_path);
            const tactile::AnnotatedImage image = load_valid(annot);
            const auto events = tactile::load_trace(trace);
            const tactile::ReplayResult result = tactile::replay(image, events, tools, config);
            emit(out, tactile::to_jsonl(result.events));
            if (!metrics_out.empty()) {
                emit(metrics_out, tactile::metrics_to_json(result.metrics));
            }
            return kOk;
        }
        if (*simulate_cmd) {
            const tactile::Tools tools = parse_tools(tools_csv);
            const tactile::EngineConfig config = load_config_opt(config_path);
            const tactile::AnnotatedImage image = load_valid(annot);
            tactile::Strategy strategy;
            try {
                strategy = tactile::Strategy::parse(strategy_text);
            } catch (const std::invalid_argument& e) {
                std::cerr << "error: " << e.what() << "\n";
                return kValidationError;
            }
            const tactile::SimulationResult result = tactile::simulate(image, strategy, tools, config);
            if (!out_trace.empty()) {
                tactile::save_trace(out_trace, result.trace);
            }
            if (!out.empty()) {
                tactile::write_text_file(out, tactile::to_jsonl(result.events));
            }
            emit(metrics_out, tactile::metrics_to_json(result.metrics));
            return kOk;
        }
        if (*metrics_cmd) {
            const auto events = tactile::parse_jsonl(tactile::read_text_file(log_path));
            std::size_t total = 0;
            if (!annot.empty()) {
                total = tactile::all_paths(load_valid(annot)).size();
            }
            const std::int64_t length = duration.value_or(events.empty() ? 0 : events.back().time_ms);
            std::cout << tactile::metrics_to_json(tactile::metrics_from_log(events, total, length));
            return kOk;
        }
        if (*prominence_cmd) {
            tactile::AnnotatedImage image = load_valid(annot);
            if (!image.cam) {
                std::cerr << annot << ": no CAM grid\n";
                return kValidationError;
            }
            tactile::write_prominence(image, tactile::bake_prominence(image));
            emit(in_place ? annot : out, tactile::dump_annotation(image));
            return kOk;
        }
        if (*config_cmd) {
            std::cout << tactile::default_config_text();
            return kOk;
        }
    } catch (const ExitCode& e) {
        return e.code;
    } catch (const tactile::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIoError;
    } catch (const tactile::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kValidationError;
    } catch (const tactile::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kValidationError;
    } catch (const tactile::TraceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kValidationError;
    }
    return kOk;
}
