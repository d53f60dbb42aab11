#pragma once

#include <cstdint>
#include <vector>

#include "tactile/gesture.hpp"

namespace tactile::testing {

/// Builds touch traces with a running clock.
class TouchScript {
public:
    /// Down at the first point, moves every `step_ms` in 0.01 increments, up at the last.
    TouchScript& drag(std::vector<Point> points, std::int64_t step_ms = 20);
    TouchScript& press(Point p);     // finger down and kept down
    TouchScript& move_to(Point p, std::int64_t step_ms = 20);
    TouchScript& lift();
    TouchScript& taps(Point p, int count);
    TouchScript& two_finger_taps(Point mid, int count);
    TouchScript& hold(Point p, std::int64_t ms = 650);
    TouchScript& wait(std::int64_t ms = 450);

    const std::vector<TouchEvent>& events() const { return events_; }
    std::int64_t now() const { return t_; }

private:
    void emit(int pointer, Phase phase, Point p);

    std::vector<TouchEvent> events_;
    std::int64_t t_ = 0;
    Point finger_{0, 0};
    bool down_ = false;
};

}  // namespace tactile::testing
