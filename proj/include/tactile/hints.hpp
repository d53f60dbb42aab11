#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tactile/audio_event.hpp"
#include "tactile/config.hpp"
#include "tactile/image_model.hpp"
#include "tactile/state.hpp"

namespace tactile {

class MissingCam : public std::invalid_argument {
public:
    MissingCam() : std::invalid_argument("no CAM grid") {}
};

/// CAM prominence of every area and sub-area, with the per-image range.
struct ProminenceTable {
    std::map<AreaPath, double> values;
    double min = 0.0;
    double max = 0.0;
};

/// Throws MissingCam when the image carries no grid.
ProminenceTable bake_prominence(const AnnotatedImage& image);

/// Min-max normalized prominence mapped onto [volume_min, volume_max].
/// A flat table (max == min) speaks everything at 1.0. Throws NoSuchArea
/// for a path missing from the table.
double speech_volume(const ProminenceTable& table, const AreaPath& path, const HintsConfig& hints);

/// Prepends the first-touch earcon to `speech` when `path` has not been
/// touched yet this session.
std::vector<AudioEvent> first_touch_decorate(const ExplorationState& state, const AreaPath& path, AudioEvent speech);

/// Copies baked prominence into each Area::prominence.
void write_prominence(AnnotatedImage& image, const ProminenceTable& table);

}  // namespace tactile
