#include "tactile/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <stdexcept>

#include "tactile/engine.hpp"
#include "tactile/session.hpp"

namespace tactile {

Strategy Strategy::parse(std::string_view text) {
    if (text == "beacon" || text == "beacon_guided") {
        return {Kind::beacon_guided, 0.0};
    }
    constexpr std::string_view prefix = "grid:";
    if (text.substr(0, prefix.size()) == prefix) {
        const std::string number(text.substr(prefix.size()));
        std::size_t used = 0;
        double pitch = 0.0;
        try {
            pitch = std::stod(number, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != number.size() || !(pitch > 0.0) || pitch > 1.0) {
            throw std::invalid_argument("grid pitch must be in (0, 1]: \"" + number + "\"");
        }
        return {Kind::grid, pitch};
    }
    throw std::invalid_argument("unknown strategy \"" + std::string(text) + "\" (expected grid:<pitch> or beacon)");
}

std::string Strategy::to_string() const {
    if (kind == Kind::beacon_guided) {
        return "beacon";
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "grid:%g", pitch);
    return buf;
}

namespace {

constexpr std::int64_t kMoveStepMs = 20;
constexpr std::int64_t kWalkStepMs = 40;
constexpr double kWalkStep = 0.02;
constexpr int kPointer = 0;

// Feeds a scripted finger into a live session and records the trace.
class Driver {
public:
    explicit Driver(Session& session) : session_(session), timing_(session.engine().config().timing) {}

    std::vector<AudioEvent> down(Point p) {
        finger_ = p;
        is_down_ = true;
        return emit(Phase::down, p);
    }

    std::vector<AudioEvent> move(Point p) {
        t_ += kMoveStepMs;
        finger_ = p;
        return emit(Phase::move, p);
    }

    std::vector<AudioEvent> move_after(Point p, std::int64_t dt) {
        t_ += dt;
        finger_ = p;
        return emit(Phase::move, p);
    }

    std::vector<AudioEvent> up() {
        t_ += kMoveStepMs;
        is_down_ = false;
        return emit(Phase::up, finger_);
    }

    // Lets every pending tap group resolve.
    std::vector<AudioEvent> settle() {
        t_ += timing_.multi_tap_gap_ms + 50;
        return session_.advance_to(t_);
    }

    std::vector<AudioEvent> wait(std::int64_t dt) {
        t_ += dt;
        return session_.advance_to(t_);
    }

    // Taps and holds leave the exploring finger's resting point unchanged.
    void taps(Point p, int count) {
        const Point rest = finger_;
        for (int i = 0; i < count; ++i) {
            if (i > 0) {
                t_ += 100;
            }
            down(p);
            t_ += 30;
            is_down_ = false;
            emit(Phase::up, p);
        }
        finger_ = rest;
        settle();
    }

    void hold(Point p) {
        const Point rest = finger_;
        t_ += 50;
        down(p);
        t_ += timing_.hold_ms + 100;
        session_.advance_to(t_);
        is_down_ = false;
        emit(Phase::up, p);
        finger_ = rest;
        settle();
    }

    Point finger() const { return finger_; }
    bool is_down() const { return is_down_; }
    std::int64_t now() const { return t_; }
    std::vector<TouchEvent> trace() const { return trace_; }

private:
    std::vector<AudioEvent> emit(Phase phase, Point p) {
        const TouchEvent e{t_, kPointer, phase, p};
        trace_.push_back(e);
        return session_.feed(e);
    }

    Session& session_;
    TimingConfig timing_;
    std::vector<TouchEvent> trace_;
    std::int64_t t_ = 0;
    Point finger_{0.5, 0.5};
    bool is_down_ = false;
};

std::vector<double> row_positions(double lo, double hi, double pitch) {
    std::vector<double> rows;
    for (int k = 0;; ++k) {
        const double y = lo + pitch * (k + 0.5);
        if (y > hi) {
            break;
        }
        rows.push_back(y);
    }
    if (rows.empty()) {
        rows.push_back((lo + hi) / 2.0);
    }
    return rows;
}

std::vector<double> column_positions(double lo, double hi, double step) {
    std::vector<double> xs;
    const int n = std::max(1, static_cast<int>(std::ceil((hi - lo) / step - 1e-9)));
    for (int i = 0; i <= n; ++i) {
        xs.push_back(std::min(hi, lo + step * i));
    }
    return xs;
}

std::optional<AreaPath> announced_parent(const AnnotatedImage& image, const std::vector<AudioEvent>& events) {
    for (const AudioEvent& e : events) {
        const Speech* s = as_speech(e);
        if (s && s->cue == Cue::area && s->area && s->area->is_top_level() &&
            !area_at(image, *s->area).sub_areas.empty()) {
            return s->area;
        }
    }
    return std::nullopt;
}

// Boustrophedon sweep of `box` with the finger down; `on_events` may lift the
// finger and must put it back down where it was.
template <typename Hook>
void sweep(Driver& d, const Rect& box, double pitch, Hook&& on_events) {
    const double step = std::min(pitch, 0.01);
    const std::vector<double> rows = row_positions(box.y0, box.y1, pitch);
    const std::vector<double> cols = column_positions(box.x0, box.x1, step);
    bool forward = true;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const double y = rows[r];
        for (std::size_t i = 0; i < cols.size(); ++i) {
            const double x = forward ? cols[i] : cols[cols.size() - 1 - i];
            const Point p{x, y};
            std::vector<AudioEvent> ev;
            if (!d.is_down()) {
                ev = d.down(p);
            } else if (i == 0 && r == 0) {
                ev = d.move(p);
            } else if (i == 0) {
                // vertical transition between rows
                const Point from = d.finger();
                const int n = std::max(1, static_cast<int>(std::ceil(std::abs(y - from.y) / step)));
                for (int k = 1; k <= n; ++k) {
                    const Point q{x, from.y + (y - from.y) * k / n};
                    std::vector<AudioEvent> part = d.move(q);
                    on_events(part);
                }
                continue;
            } else {
                ev = d.move(p);
            }
            on_events(ev);
        }
        forward = !forward;
    }
    if (d.is_down()) {
        d.up();
    }
    d.settle();
}

void run_grid(Session& session, Driver& d, double pitch) {
    const AnnotatedImage& image = session.engine().image();
    std::set<std::size_t> entered;
    std::function<void(std::vector<AudioEvent>&)> outer = [&](std::vector<AudioEvent>& ev) {
        const std::optional<AreaPath> parent = announced_parent(image, ev);
        if (!parent || entered.contains(parent->top) || !session.engine().state().level.is_top()) {
            return;
        }
        entered.insert(parent->top);
        const Point resume = d.finger();
        d.up();
        d.settle();
        d.taps(resume, 2);
        if (session.engine().state().level.is_top()) {
            d.down(resume);
            return;
        }
        const Rect box = bounding_box(area_at(image, *parent).polygon);
        sweep(d, box, pitch, [](std::vector<AudioEvent>&) {});
        d.taps(resume, 3);
        d.down(resume);
    };
    sweep(d, Rect{0.0, 0.0, 1.0, 1.0}, pitch, outer);
}

void walk_to(Driver& d, const Engine& engine, Point goal) {
    for (int step = 0; step < 400 && engine.state().beacon; ++step) {
        const Point here = d.finger();
        const double dist = distance(here, goal);
        const Point next = dist <= kWalkStep ? goal : here + (goal - here) * (kWalkStep / dist);
        d.move_after(next, kWalkStepMs);
        if (dist <= kWalkStep) {
            break;
        }
    }
}

// Point of `target`'s bounding box nearest `from` whose hit test is `target`,
// off the menu buttons.
std::optional<Point> reachable_point(const AnnotatedImage& image, const MenuBeaconConfig& m, const AreaPath& target,
                                     Level level, Point from) {
    const Rect box = bounding_box(area_at(image, target).polygon);
    constexpr int kSamples = 64;
    std::optional<Point> best;
    for (int i = 0; i <= kSamples; ++i) {
        for (int j = 0; j <= kSamples; ++j) {
            const Point p{box.x0 + (box.x1 - box.x0) * i / kSamples, box.y0 + (box.y1 - box.y0) * j / kSamples};
            if (m.open_button.contains(p) || m.scroll_button.contains(p)) {
                continue;
            }
            if ((!best || distance(p, from) < distance(*best, from)) && hit_test(image, p, level) == target) {
                best = p;
            }
        }
    }
    return best;
}

void run_beacon(Session& session, Driver& d) {
    const Engine& engine = session.engine();
    const AnnotatedImage& image = engine.image();
    const MenuBeaconConfig& m = engine.config().menu_beacon;
    const Point open = m.open_button.center();
    const Point scroll = m.scroll_button.center();
    const std::size_t max_rounds = 4 * all_paths(image).size() + 8;

    for (std::size_t round = 0; round < max_rounds; ++round) {
        d.taps(open, 1);
        const ExplorationState& s = engine.state();
        if (!s.menu.open) {
            break;
        }
        if (unexplored_count(image, s, s.level) == 0) {
            if (s.level.is_top()) {
                break;
            }
            d.taps(d.finger(), 3);
            continue;
        }
        d.taps(scroll, 1);
        d.hold(scroll);
        if (!engine.state().beacon) {
            break;
        }
        const AreaPath target = engine.state().beacon->target;
        d.wait(50);
        d.down(d.finger());
        walk_to(d, engine, engine.state().beacon->target_point);
        if (engine.state().beacon) {
            // The centroid is covered by a smaller area; feel around the target instead.
            if (const auto spot = reachable_point(image, m, target, engine.state().level, d.finger())) {
                walk_to(d, engine, *spot);
            }
        }
        d.up();
        d.settle();
        if (engine.state().beacon) {
            // Centroid fell outside its own polygon; give up rather than loop.
            d.hold(scroll);
            break;
        }
        if (target.is_top_level() && !area_at(image, target).sub_areas.empty()) {
            d.taps(d.finger(), 2);
        }
    }
}

}  // namespace

SimulationResult simulate(const AnnotatedImage& image, const Strategy& strategy, Tools tools,
                          const EngineConfig& config) {
    if (strategy.kind == Strategy::Kind::beacon_guided && !tools.menu_beacon) {
        throw std::invalid_argument("beacon strategy needs the menu_beacon tool");
    }
    Session session(image, config, tools);
    Driver d(session);
    if (strategy.kind == Strategy::Kind::grid) {
        run_grid(session, d, strategy.pitch);
    } else {
        run_beacon(session, d);
    }
    session.finish();
    return {d.trace(), session.log(), session.metrics()};
}

}  // namespace tactile
