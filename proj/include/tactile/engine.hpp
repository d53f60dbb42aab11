#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tactile/audio_event.hpp"
#include "tactile/config.hpp"
#include "tactile/gesture.hpp"
#include "tactile/hints.hpp"
#include "tactile/state.hpp"

namespace tactile {

/// A path is explored once touched; a top-level area with sub-areas is
/// explored once all of its sub-areas are.
bool is_explored(const AnnotatedImage& image, const std::set<AreaPath>& touched, const AreaPath& path);

/// Unexplored areas at `level` (sub-areas of the parent when inside one).
std::size_t unexplored_count(const AnnotatedImage& image, const ExplorationState& state, Level level);

/// "3 unexplored areas", "1 unexplored area".
std::string unexplored_phrase(std::size_t n);

inline constexpr const char* kCompletionPhrase = "no more unexplored areas";

/// Records a touch of `path`, updates the explored set and announces
/// completion the first time every top-level area is explored.
void mark_touched(const EngineContext& ctx, ExplorationState& state, const AreaPath& path, std::int64_t now_ms,
                  std::vector<AudioEvent>& out);

/// Area under a screen point for the current level, zoom and buttons.
std::optional<AreaPath> resolve_hover(const EngineContext& ctx, const ExplorationState& state, Point screen);

/// The state machine. Zoom gestures are handled first, then the beacon,
/// the menu and finally baseline exploration.
std::vector<AudioEvent> apply_gesture(const EngineContext& ctx, ExplorationState& state, const GestureEvent& g);

std::optional<ButtonLayout> button_layout(const EngineConfig& config, Tools tools);

/// Owns the image, configuration and state for one session.
class Engine {
public:
    Engine(AnnotatedImage image, EngineConfig config, Tools tools);

    std::vector<AudioEvent> step(const GestureEvent& g);
    std::optional<AreaPath> resolve(Point screen) const;

    const ExplorationState& state() const { return state_; }
    const AnnotatedImage& image() const { return image_; }
    const EngineConfig& config() const { return config_; }
    Tools tools() const { return tools_; }
    const ProminenceTable* prominence() const { return prominence_ ? &*prominence_ : nullptr; }
    EngineContext context() const;

private:
    AnnotatedImage image_;
    EngineConfig config_;
    Tools tools_;
    std::optional<ProminenceTable> prominence_;
    ExplorationState state_;
};

}  // namespace tactile
