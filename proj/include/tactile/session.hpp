#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tactile/audio_event.hpp"
#include "tactile/engine.hpp"
#include "tactile/gesture.hpp"
#include "tactile/metrics.hpp"

namespace tactile {

/// Classifier and engine wired together, with the full event log kept.
class Session {
public:
    Session(AnnotatedImage image, EngineConfig config, Tools tools);

    /// Each call returns only the events it produced.
    std::vector<AudioEvent> feed(const TouchEvent& event);
    std::vector<AudioEvent> advance_to(std::int64_t time_ms);
    std::vector<AudioEvent> finish();

    const Engine& engine() const { return engine_; }
    const std::vector<AudioEvent>& log() const { return log_; }
    const std::vector<GestureEvent>& gestures() const { return gestures_; }
    /// Time of the last touch event or gesture, whichever is later.
    std::int64_t clock() const { return end_ms_; }
    SessionMetrics metrics() const;

private:
    void deliver(const GestureEvent& g, std::vector<AudioEvent>& out);

    Engine engine_;
    GestureClassifier classifier_;
    std::vector<AudioEvent> log_;
    std::vector<GestureEvent> gestures_;
    std::int64_t end_ms_ = 0;
};

struct ReplayResult {
    std::vector<AudioEvent> events;
    SessionMetrics metrics;
};

/// Pure function of its inputs; the same arguments give the same log.
ReplayResult replay(const AnnotatedImage& image, std::span<const TouchEvent> trace, Tools tools,
                    const EngineConfig& config = {});

}  // namespace tactile
