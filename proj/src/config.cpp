#include "tactile/config.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <vector>

#include "tactile/annotation_io.hpp"

namespace tactile {

namespace {

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string located(int line_no, const std::string& msg) { return "config line " + std::to_string(line_no) + ": " + msg; }

int to_int(std::string_view v, int line_no) {
    int out = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size()) {
        throw ConfigError(located(line_no, "expected an integer, got \"" + std::string(v) + "\""));
    }
    return out;
}

double to_double(std::string_view v, int line_no) {
    // std::from_chars for double is unavailable on some toolchains still in use.
    std::string s(v);
    std::istringstream in(s);
    in.imbue(std::locale::classic());
    double out = 0.0;
    in >> out;
    if (!in || !in.eof() || !std::isfinite(out)) {
        throw ConfigError(located(line_no, "expected a number, got \"" + s + "\""));
    }
    return out;
}

std::string to_text(std::string_view v) {
    if (v.size() >= 2 && v.front() == '"' && v.back() == '"') {
        return std::string(v.substr(1, v.size() - 2));
    }
    return std::string(v);
}

Rect to_rect(std::string_view v, int line_no) {
    std::vector<double> parts;
    std::size_t pos = 0;
    while (pos <= v.size()) {
        auto comma = v.find(',', pos);
        if (comma == std::string_view::npos) {
            comma = v.size();
        }
        parts.push_back(to_double(trim(v.substr(pos, comma - pos)), line_no));
        pos = comma + 1;
    }
    if (parts.size() != 4 || parts[0] > parts[2] || parts[1] > parts[3]) {
        throw ConfigError(located(line_no, "expected rectangle \"x0, y0, x1, y1\""));
    }
    return Rect{parts[0], parts[1], parts[2], parts[3]};
}

void apply(EngineConfig& cfg, const std::string& section, std::string_view key, std::string_view value, int n) {
    auto unknown = [&]() {
        return ConfigError(located(n, "unknown key \"" + std::string(key) + "\" in [" + section + "]"));
    };
    if (section == "timing") {
        TimingConfig& t = cfg.timing;
        if (key == "tap_max_ms") t.tap_max_ms = to_int(value, n);
        else if (key == "multi_tap_gap_ms") t.multi_tap_gap_ms = to_int(value, n);
        else if (key == "hold_ms") t.hold_ms = to_int(value, n);
        else if (key == "slop") t.slop = to_double(value, n);
        else throw unknown();
    } else if (section == "menu_beacon") {
        MenuBeaconConfig& m = cfg.menu_beacon;
        if (key == "open_button") m.open_button = to_rect(value, n);
        else if (key == "scroll_button") m.scroll_button = to_rect(value, n);
        else if (key == "min_interval_ms") m.min_interval_ms = to_int(value, n);
        else if (key == "max_interval_ms") m.max_interval_ms = to_int(value, n);
        else if (key == "announce_period_ms") m.announce_period_ms = to_int(value, n);
        else throw unknown();
    } else if (section == "hints") {
        if (key == "volume_min") cfg.hints.volume_min = to_double(value, n);
        else if (key == "volume_max") cfg.hints.volume_max = to_double(value, n);
        else throw unknown();
    } else if (section == "zoom") {
        if (key == "guard_band") cfg.zoom.guard_band = to_double(value, n);
        else if (key == "name_q1") cfg.zoom.quadrant_names[0] = to_text(value);
        else if (key == "name_q2") cfg.zoom.quadrant_names[1] = to_text(value);
        else if (key == "name_q3") cfg.zoom.quadrant_names[2] = to_text(value);
        else if (key == "name_q4") cfg.zoom.quadrant_names[3] = to_text(value);
        else throw unknown();
    } else {
        throw ConfigError(located(n, "key outside a known section"));
    }
}

void check(const EngineConfig& c) {
    const TimingConfig& t = c.timing;
    if (t.tap_max_ms <= 0 || t.multi_tap_gap_ms <= 0 || t.hold_ms <= 0 || t.slop <= 0.0) {
        throw ConfigError("timing values must be positive");
    }
    const MenuBeaconConfig& m = c.menu_beacon;
    if (m.min_interval_ms <= 0 || m.max_interval_ms < m.min_interval_ms || m.announce_period_ms <= 0) {
        throw ConfigError("menu_beacon intervals must satisfy 0 < min <= max and period > 0");
    }
    if (c.hints.volume_min < 0.0 || c.hints.volume_max > 1.0 || c.hints.volume_min > c.hints.volume_max) {
        throw ConfigError("hints volumes must satisfy 0 <= volume_min <= volume_max <= 1");
    }
    if (c.zoom.guard_band < 0.0 || c.zoom.guard_band >= 0.25) {
        throw ConfigError("zoom guard_band must be in [0, 0.25)");
    }
}

}  // namespace

Tools Tools::parse(std::string_view csv) {
    Tools tools;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        auto comma = csv.find(',', pos);
        if (comma == std::string_view::npos) {
            comma = csv.size();
        }
        const std::string_view name = trim(csv.substr(pos, comma - pos));
        if (name == "menu_beacon" || name == "menu") tools.menu_beacon = true;
        else if (name == "hints") tools.hints = true;
        else if (name == "zoom" || name == "quadrant_zoom") tools.zoom = true;
        else if (!name.empty() && name != "none") {
            throw ConfigError("unknown tool \"" + std::string(name) + "\"");
        }
        pos = comma + 1;
    }
    return tools;
}

std::string Tools::to_string() const {
    std::string out;
    auto add = [&out](const char* n) {
        if (!out.empty()) out += ",";
        out += n;
    };
    if (menu_beacon) add("menu_beacon");
    if (hints) add("hints");
    if (zoom) add("zoom");
    return out.empty() ? "none" : out;
}

EngineConfig parse_config(std::string_view text) {
    EngineConfig cfg;
    std::string section;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        ++line_no;
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        if (line.front() == '[') {
            if (line.back() != ']') {
                throw ConfigError(located(line_no, "unterminated section header"));
            }
            section = std::string(trim(line.substr(1, line.size() - 2)));
            if (section != "timing" && section != "menu_beacon" && section != "hints" && section != "zoom") {
                throw ConfigError(located(line_no, "unknown section [" + section + "]"));
            }
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError(located(line_no, "expected key = value"));
        }
        apply(cfg, section, trim(line.substr(0, eq)), trim(line.substr(eq + 1)), line_no);
    }
    check(cfg);
    return cfg;
}

EngineConfig load_config(const std::filesystem::path& path) { return parse_config(read_text_file(path)); }

std::string default_config_text() {
    return R"(# Engine configuration. Every key is optional; these are the defaults.

[timing]
tap_max_ms = 250        # longest press that still counts as a tap
multi_tap_gap_ms = 300  # longest gap between taps of a double/triple tap
hold_ms = 500           # button press this long becomes a hold
slop = 0.02             # movement (normalized) that turns a press into a drag

[menu_beacon]
open_button = 0, 0, 0.18, 0.10      # x0, y0, x1, y1 (screen, normalized)
scroll_button = 0, 0.90, 0.18, 1
min_interval_ms = 120   # beep interval at the target
max_interval_ms = 900   # beep interval at the largest possible distance
announce_period_ms = 1500

[hints]
volume_min = 0.3        # volume of the least prominent area
volume_max = 1.0

[zoom]
guard_band = 0.03
name_q1 = "top left"
name_q2 = "top right"
name_q3 = "bottom left"
name_q4 = "bottom right"
)";
}

}  // namespace tactile
