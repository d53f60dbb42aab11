#include "tactile/hints.hpp"

#include <algorithm>

namespace tactile {

ProminenceTable bake_prominence(const AnnotatedImage& image) {
    if (!image.cam) {
        throw MissingCam();
    }
    ProminenceTable table;
    bool first = true;
    for (const AreaPath& p : all_paths(image)) {
        const double v = area_prominence(area_at(image, p), *image.cam);
        table.values.emplace(p, v);
        table.min = first ? v : std::min(table.min, v);
        table.max = first ? v : std::max(table.max, v);
        first = false;
    }
    return table;
}

double speech_volume(const ProminenceTable& table, const AreaPath& path, const HintsConfig& hints) {
    const auto it = table.values.find(path);
    if (it == table.values.end()) {
        throw NoSuchArea();
    }
    if (table.max == table.min) {
        return 1.0;
    }
    const double t = (it->second - table.min) / (table.max - table.min);
    return std::clamp(hints.volume_min + (hints.volume_max - hints.volume_min) * t, 0.0, 1.0);
}

std::vector<AudioEvent> first_touch_decorate(const ExplorationState& state, const AreaPath& path, AudioEvent speech) {
    std::vector<AudioEvent> out;
    if (!state.touched_once.contains(path)) {
        out.push_back(AudioEvent{speech.time_ms, Earcon{EarconKind::first_touch}});
    }
    out.push_back(std::move(speech));
    return out;
}

void write_prominence(AnnotatedImage& image, const ProminenceTable& table) {
    for (const auto& [path, value] : table.values) {
        Area& top = image.areas.at(path.top);
        Area& target = path.sub ? top.sub_areas.at(*path.sub) : top;
        target.prominence = value;
    }
}

}  // namespace tactile
