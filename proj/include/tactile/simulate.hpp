#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tactile/audio_event.hpp"
#include "tactile/config.hpp"
#include "tactile/gesture.hpp"
#include "tactile/image_model.hpp"
#include "tactile/metrics.hpp"

namespace tactile {

struct Strategy {
    enum class Kind { grid, beacon_guided };
    Kind kind = Kind::grid;
    double pitch = 0.05;  // grid row spacing

    /// "grid:0.05" or "beacon".
    static Strategy parse(std::string_view text);
    std::string to_string() const;
};

struct SimulationResult {
    std::vector<TouchEvent> trace;
    std::vector<AudioEvent> events;
    SessionMetrics metrics;
};

/// Scripted user. Grid sweeps rows with the finger down and enters every
/// parent it hears about; beacon_guided repeatedly opens the menu, places a
/// beacon on the first unexplored entry and walks toward it. Replaying the
/// returned trace reproduces the returned events.
SimulationResult simulate(const AnnotatedImage& image, const Strategy& strategy, Tools tools,
                          const EngineConfig& config = {});

}  // namespace tactile
