#include "tactile/trace_io.hpp"

#include <json.hpp>

#include "tactile/annotation_io.hpp"

namespace tactile {

namespace {

Phase phase_from(const std::string& s) {
    if (s == "down") return Phase::down;
    if (s == "move") return Phase::move;
    if (s == "up") return Phase::up;
    throw ParseError("unknown phase \"" + s + "\"");
}

const char* phase_name(Phase p) {
    switch (p) {
        case Phase::down: return "down";
        case Phase::move: return "move";
        case Phase::up: return "up";
    }
    return "?";
}

std::string number(double v) { return nlohmann::json(round9(v)).dump(); }

}  // namespace

std::vector<TouchEvent> parse_trace(std::string_view json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid trace JSON: ") + e.what());
    }
    std::vector<TouchEvent> out;
    try {
        for (const auto& e : doc.at("events")) {
            TouchEvent ev;
            ev.time_ms = e.at("t").get<std::int64_t>();
            ev.pointer_id = e.at("p").get<int>();
            ev.phase = phase_from(e.at("phase").get<std::string>());
            ev.position = {e.at("x").get<double>(), e.at("y").get<double>()};
            out.push_back(ev);
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed trace: ") + e.what());
    }
    return out;
}

std::string dump_trace(std::span<const TouchEvent> events) {
    std::string out = "{\"events\":[";
    for (std::size_t i = 0; i < events.size(); ++i) {
        const TouchEvent& e = events[i];
        out += i == 0 ? "\n" : ",\n";
        out += "{\"t\":" + std::to_string(e.time_ms) + ",\"p\":" + std::to_string(e.pointer_id) + ",\"phase\":\"" +
               phase_name(e.phase) + "\",\"x\":" + number(e.position.x) + ",\"y\":" + number(e.position.y) + "}";
    }
    out += events.empty() ? "]}\n" : "\n]}\n";
    return out;
}

std::vector<TouchEvent> load_trace(const std::filesystem::path& path) { return parse_trace(read_text_file(path)); }

void save_trace(const std::filesystem::path& path, std::span<const TouchEvent> events) {
    write_text_file(path, dump_trace(events));
}

}  // namespace tactile
