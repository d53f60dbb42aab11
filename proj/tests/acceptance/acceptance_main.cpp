#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "log_utils.hpp"
#include "oracles.hpp"
#include "touch_script.hpp"
#include "tactile/annotation_io.hpp"
#include "tactile/engine.hpp"
#include "tactile/image_model.hpp"
#include "tactile/menu_beacon.hpp"
#include "tactile/session.hpp"
#include "tactile/simulate.hpp"
#include "tactile/trace_io.hpp"
#include "tactile/zoom.hpp"

using namespace tactile;
namespace fs = std::filesystem;

namespace {

// Pinned thresholds.
constexpr int kHitPairs = 10000;
constexpr double kHitSeconds = 5.0;
constexpr int kProminencePairs = 200;
constexpr int kMenuSets = 1000;
constexpr int kBeaconApproaches = 300;
constexpr int kDirectionVectors = 1000;
constexpr int kCountImages = 500;
constexpr int kZoomPoints = 100;
constexpr double kInverseTolerance = 1e-12;
constexpr double kGridPitch = 0.3;
constexpr double kSimulationSeconds = 60.0;

std::uint64_t g_seed = 20240917;
const fs::path kSamples = TACTILE_SAMPLES_DIR;
int g_failures = 0;

void report(bool ok, const std::string& name, const std::string& detail) {
    std::printf("%s %s: %s\n", ok ? "PASS" : "FAIL", name.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!ok) {
        ++g_failures;
    }
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(const char* pattern, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, args...);
    return buf;
}

struct SampleReplay {
    std::string name;
    std::string annotation;
    Tools tools;
};

std::vector<SampleReplay> sample_replays() {
    std::vector<SampleReplay> out;
    std::ifstream in(kSamples / "replays.tsv");
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::istringstream row(line);
        SampleReplay r;
        std::string tools;
        std::getline(row, r.name, '\t');
        std::getline(row, r.annotation, '\t');
        std::getline(row, tools, '\t');
        r.tools = Tools::parse(tools);
        out.push_back(r);
    }
    return out;
}

std::vector<std::string> sample_images() {
    std::vector<std::string> names;
    for (const auto& entry : fs::directory_iterator(kSamples)) {
        const std::string file = entry.path().filename().string();
        const std::string suffix = ".annot.json";
        if (file.size() > suffix.size() && file.ends_with(suffix)) {
            names.push_back(file.substr(0, file.size() - suffix.size()));
        }
    }
    std::sort(names.begin(), names.end());
    return names;
}

AnnotatedImage load_sample(const std::string& name) { return load_annotation(kSamples / (name + ".annot.json")); }

void hit_testing() {
    std::mt19937_64 rng(g_seed);
    std::uniform_int_distribution<int> count(1, 3), pick(0, 3);
    const auto start = std::chrono::steady_clock::now();
    int agree = 0;
    for (int i = 0; i < kHitPairs; ++i) {
        AnnotatedImage img;
        img.width_px = img.height_px = 100;
        std::vector<Polygon> polys;
        const int n = count(rng);
        for (int k = 0; k < n; ++k) {
            polys.push_back(gen::random_polygon(rng));
            img.areas.push_back(Area{"area " + std::to_string(k), polys.back()});
        }
        Point p = gen::random_point(rng);
        // a quarter of the points sit exactly on a vertex or an edge midpoint
        const int mode = pick(rng);
        if (mode == 0) {
            p = polys[0][rng() % polys[0].size()];
        } else if (mode == 1) {
            const std::size_t v = rng() % polys[0].size();
            const Point a = polys[0][v];
            const Point b = polys[0][(v + 1) % polys[0].size()];
            p = {(a.x + b.x) / 2, (a.y + b.y) / 2};
        }
        const auto got = hit_test(img, p, Level::top());
        const auto want = oracle::smallest_containing(polys, p);
        agree += (got ? std::optional<std::size_t>(got->top) : std::nullopt) == want ? 1 : 0;
    }
    const double secs = seconds_since(start);
    report(agree == kHitPairs && secs < kHitSeconds, "hit_test_oracle",
           fmt("%d/%d agree in %.2f s (limit %.1f s)", agree, kHitPairs, secs, kHitSeconds));
}

void prominence() {
    std::mt19937_64 rng(g_seed + 1);
    int exact = 0;
    for (int i = 0; i < kProminencePairs; ++i) {
        const CamGrid cam = gen::random_cam(rng);
        const Polygon poly = gen::random_polygon(rng);
        const double got = area_prominence(Area{"a", poly}, cam);
        exact += got == oracle::prominence(poly, cam) ? 1 : 0;
    }
    // a sliver between cell centers covers no cell
    const CamGrid cam{2, 2, {0.1, 0.2, 0.3, 0.4}};
    const Polygon sliver{{0.6, 0.05}, {0.7, 0.05}, {0.7, 0.1}, {0.6, 0.1}};
    const bool degenerate = area_prominence(Area{"s", sliver}, cam) == 0.2;
    report(exact == kProminencePairs && degenerate, "prominence_exact",
           fmt("%d/%d bit-exact, no-cell case %s", exact, kProminencePairs, degenerate ? "ok" : "wrong"));
}

void menu_ordering() {
    std::mt19937_64 rng(g_seed + 2);
    std::uniform_int_distribution<int> coin(0, 1);
    int good = 0;
    for (int i = 0; i < kMenuSets; ++i) {
        const AnnotatedImage img = gen::random_image(rng, 10, 5);
        ExplorationState state;
        for (std::size_t k = 0; k < img.areas.size(); ++k) {
            if (coin(rng)) {
                state.explored.insert({k, std::nullopt});
            }
        }
        const bool hints = coin(rng) == 1;
        const EngineConfig config;
        const EngineContext ctx{img, config, Tools{true, hints, false}, nullptr};
        const std::vector<MenuEntry> menu = build_menu(ctx, state);
        std::vector<oracle::MenuItem> items;
        for (std::size_t k = 0; k < img.areas.size(); ++k) {
            items.push_back({img.areas[k].label, state.explored.contains({k, std::nullopt}), img.areas[k].recommended,
                             img.areas[k].sub_areas.size(), k});
        }
        std::vector<oracle::MenuItem> want = items;
        std::sort(want.begin(), want.end(), [hints](const auto& a, const auto& b) {
            return oracle::menu_before(a, b, hints);
        });
        std::set<std::size_t> seen;
        bool ok = menu.size() == items.size();
        for (std::size_t k = 0; ok && k < menu.size(); ++k) {
            seen.insert(menu[k].area.top);
            ok = menu[k].area.is_top_level() && menu[k].area.top == want[k].index &&
                 menu[k].explored == want[k].explored;
        }
        good += ok && seen.size() == items.size() ? 1 : 0;
    }
    report(good == kMenuSets, "menu_ordering", fmt("%d/%d sets match the comparator", good, kMenuSets));
}

void beacon_guidance() {
    std::mt19937_64 rng(g_seed + 3);
    const EngineConfig config;
    int monotone = 0, arrivals = 0;
    for (int i = 0; i < kBeaconApproaches; ++i) {
        const AnnotatedImage img = gen::random_image(rng, 6, 0);
        std::vector<Polygon> polys;
        for (const Area& a : img.areas) {
            polys.push_back(a.polygon);
        }
        const std::size_t target = rng() % img.areas.size();
        const EngineContext ctx{img, config, Tools{true, false, false}, nullptr};
        ExplorationState state;
        const Point goal = centroid(img.areas[target]);
        state.beacon = BeaconState{{target, std::nullopt}, goal, std::nullopt, std::nullopt};
        const Point from = gen::random_point(rng);
        const int steps = std::max(1, static_cast<int>(std::ceil(distance(from, goal) / 0.01)));
        std::optional<int> expected_arrival, arrival;
        int last_interval = 0;
        bool non_increasing = true;
        for (int s = 0; s <= steps && state.beacon; ++s) {
            const Point p = from + (goal - from) * (static_cast<double>(s) / steps);
            if (!expected_arrival && oracle::smallest_containing(polys, p) == target) {
                expected_arrival = s;
            }
            std::vector<AudioEvent> out;
            beacon_guide(ctx, state, p, 40 * s, out);
            for (const AudioEvent& e : out) {
                if (const auto* b = std::get_if<BeepRate>(&e.payload); b && b->interval_ms) {
                    non_increasing = non_increasing && (last_interval == 0 || *b->interval_ms <= last_interval);
                    last_interval = *b->interval_ms;
                }
                if (const Speech* sp = as_speech(e); sp && sp->cue == Cue::arrived) {
                    arrival = s;
                }
            }
        }
        monotone += non_increasing ? 1 : 0;
        arrivals += arrival == expected_arrival ? 1 : 0;
    }
    int directions = 0;
    std::uniform_real_distribution<double> u(-1, 1);
    for (int i = 0; i < kDirectionVectors; ++i) {
        const Point v{u(rng), u(rng)};
        directions += static_cast<int>(direction_of(v)) == oracle::direction_index(v) ? 1 : 0;
    }
    report(monotone == kBeaconApproaches && arrivals == kBeaconApproaches && directions == kDirectionVectors,
           "beacon_guidance",
           fmt("monotone %d/%d, arrival on first hit %d/%d, direction %d/%d", monotone, kBeaconApproaches, arrivals,
               kBeaconApproaches, directions, kDirectionVectors));
}

testing::TouchScript random_script(std::mt19937_64& rng, const EngineConfig& config) {
    testing::TouchScript script;
    std::uniform_int_distribution<int> action(0, 9), len(2, 4);
    const Point open = config.menu_beacon.open_button.center();
    const Point scroll = config.menu_beacon.scroll_button.center();
    const int n = 10 + static_cast<int>(rng() % 30);
    for (int i = 0; i < n; ++i) {
        switch (action(rng)) {
            case 0:
            case 1:
            case 2:
            case 3: {
                std::vector<Point> path;
                for (int k = len(rng); k > 0; --k) {
                    path.push_back(gen::random_point(rng));
                }
                script.drag(path);
                break;
            }
            case 4: script.taps(gen::random_point(rng), 2); break;
            case 5: script.taps(gen::random_point(rng), 3); break;
            case 6: script.taps(open, 1); break;
            case 7: script.taps(scroll, 1); break;
            case 8: script.hold(scroll); break;
            default: script.two_finger_taps(gen::random_point(rng), 2 + static_cast<int>(rng() % 2)); break;
        }
        script.wait();
    }
    return script;
}

std::optional<std::size_t> leading_number(const std::string& text) {
    if (text.empty() || !std::isdigit(static_cast<unsigned char>(text[0]))) {
        return std::nullopt;
    }
    return std::stoul(text);
}

// Replays the log against the oracle; returns an empty string when consistent.
std::string check_counts(const AnnotatedImage& img, const std::vector<AudioEvent>& log) {
    std::set<AreaPath> touched;
    std::optional<std::size_t> parent;
    const std::size_t total = all_paths(img).size();
    std::optional<std::size_t> complete_at;
    int completions = 0;
    for (std::size_t i = 0; i < log.size(); ++i) {
        const Speech* sp = as_speech(log[i]);
        if (!sp) {
            continue;
        }
        switch (sp->cue) {
            case Cue::area:
            case Cue::arrived:
                touched.insert(*sp->area);
                if (!complete_at && touched.size() == total) {
                    complete_at = i;
                }
                break;
            case Cue::entered: parent = sp->area->top; break;
            case Cue::count:
            case Cue::menu_count: {
                if (sp->cue == Cue::count) {
                    parent.reset();
                }
                const auto said = leading_number(sp->text);
                const std::size_t want = oracle::unexplored(img, touched, parent);
                if (!said || *said != want) {
                    return "announced \"" + sp->text + "\", oracle " + std::to_string(want);
                }
                break;
            }
            case Cue::completion:
                ++completions;
                if (!complete_at || log[i].time_ms != log[*complete_at].time_ms) {
                    return "completion before full coverage";
                }
                for (std::size_t k = *complete_at + 1; k < i; ++k) {
                    const Speech* between = as_speech(log[k]);
                    if (between && (between->cue == Cue::area || between->cue == Cue::arrived)) {
                        return "completion late";
                    }
                }
                break;
            default: break;
        }
    }
    if (completions != (complete_at ? 1 : 0)) {
        return "completion fired " + std::to_string(completions) + " times";
    }
    return {};
}

void exploration_counts() {
    std::mt19937_64 rng(g_seed + 4);
    const EngineConfig config;
    int good = 0, complete = 0;
    std::string first_problem;
    for (int i = 0; i < kCountImages; ++i) {
        const AnnotatedImage img = gen::random_image(rng, 6, 3);
        const Tools tools{true, rng() % 2 == 0, rng() % 2 == 0};
        std::vector<AudioEvent> log;
        if (i % 5 == 4) {
            // scripted user, which usually reaches full coverage
            log = simulate(img, Strategy::parse("beacon"), tools, config).events;
        } else {
            const testing::TouchScript script = random_script(rng, config);
            log = replay(img, script.events(), tools, config).events;
        }
        const std::string problem = check_counts(img, log);
        good += problem.empty() ? 1 : 0;
        complete += testing::speech_texts(log, Cue::completion).empty() ? 0 : 1;
        if (!problem.empty() && first_problem.empty()) {
            first_problem = "image " + std::to_string(i) + ": " + problem;
        }
    }
    report(good == kCountImages && complete > 0, "exploration_counts",
           fmt("%d/%d sessions consistent, %d reached completion%s%s", good, kCountImages, complete,
               first_problem.empty() ? "" : "; ", first_problem.c_str()));
}

void zoom_round_trip() {
    std::mt19937_64 rng(g_seed + 5);
    bool ok = true;
    std::string detail;
    double worst = 0;
    for (const std::string& name : sample_images()) {
        const AnnotatedImage img = load_sample(name);
        Session session(img, {}, Tools{false, false, true});
        std::vector<Point> points;
        std::vector<std::optional<AreaPath>> before;
        for (int i = 0; i < kZoomPoints; ++i) {
            points.push_back(gen::random_point(rng));
            before.push_back(session.engine().resolve(points.back()));
        }
        testing::TouchScript script;
        script.two_finger_taps(gen::random_point(rng), 2).wait();
        for (const TouchEvent& e : script.events()) {
            session.feed(e);
        }
        session.advance_to(script.now());
        const bool zoomed = session.engine().state().zoom.has_value();
        int mapped = 0;
        if (zoomed) {
            const Quadrant q = session.engine().state().zoom->active_quadrant;
            for (const Point& p : points) {
                mapped += session.engine().resolve(p) == hit_test(img, to_image_coords(q, p), Level::top()) ? 1 : 0;
            }
        }
        testing::TouchScript out;
        out.wait(script.now()).two_finger_taps({0.5, 0.5}, 3).wait();
        for (const TouchEvent& e : out.events()) {
            session.feed(e);
        }
        session.finish();
        int same = 0;
        for (int i = 0; i < kZoomPoints; ++i) {
            same += session.engine().resolve(points[i]) == before[i] ? 1 : 0;
        }
        const bool here = zoomed && mapped == kZoomPoints && !session.engine().state().zoom && same == kZoomPoints;
        ok = ok && here;
        detail += fmt("%s %d/%d, ", name.c_str(), same, kZoomPoints);
    }
    for (int i = 0; i < 10000; ++i) {
        const auto q = static_cast<Quadrant>(i % 4);
        const Point s = gen::random_point(rng);
        const Point back = to_screen_coords(q, to_image_coords(q, s));
        worst = std::max({worst, std::abs(back.x - s.x), std::abs(back.y - s.y)});
    }
    const bool q3 = quadrant_of({0.2, 0.8}) == Quadrant::q3 && quadrant_rect(Quadrant::q3) == Rect{0.0, 0.5, 0.5, 1.0};
    report(ok && worst <= kInverseTolerance && q3, "zoom_round_trip",
           detail + fmt("inverse error %.1e (limit %.0e), Q3 bottom-left %s", worst, kInverseTolerance,
                        q3 ? "yes" : "no"));
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void determinism() {
    int identical = 0, matches_golden = 0;
    const auto replays = sample_replays();
    for (const SampleReplay& r : replays) {
        const AnnotatedImage img = load_sample(r.annotation);
        const auto trace = load_trace(kSamples / "traces" / (r.name + ".trace.json"));
        const std::string a = to_jsonl(replay(img, trace, r.tools).events);
        const std::string b = to_jsonl(replay(img, trace, r.tools).events);
        identical += a == b ? 1 : 0;
        matches_golden += a == read_file(kSamples / "golden" / (r.name + ".events.jsonl")) ? 1 : 0;
    }
    const int n = static_cast<int>(replays.size());
    report(n > 0 && identical == n && matches_golden == n, "determinism",
           fmt("%d/%d replays identical twice, %d/%d byte-equal to committed goldens", identical, n, matches_golden, n));
}

void strategy_contrast() {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool beacon_all = true, grid_misses = false;
    int images = 0;
    for (const std::string& name : sample_images()) {
        const AnnotatedImage img = load_sample(name);
        const double beacon = simulate(img, Strategy::parse("beacon"), Tools{true, true, false}).metrics.coverage_pct;
        Strategy grid{Strategy::Kind::grid, kGridPitch};
        const double coarse = simulate(img, grid, Tools::none()).metrics.coverage_pct;
        beacon_all = beacon_all && beacon == 100.0;
        grid_misses = grid_misses || coarse < 100.0;
        ++images;
        detail += fmt("%s beacon %.1f%% grid %.1f%%, ", name.c_str(), beacon, coarse);
    }
    const double secs = seconds_since(start);
    report(images >= 4 && beacon_all && grid_misses && secs < kSimulationSeconds, "strategy_contrast",
           detail + fmt("%.2f s (limit %.0f s)", secs, kSimulationSeconds));
}

void tone_alternation() {
    int alternating = 0, unique = 0;
    const auto replays = sample_replays();
    for (const SampleReplay& r : replays) {
        const auto log = parse_jsonl(read_file(kSamples / "golden" / (r.name + ".events.jsonl")));
        alternating += testing::tones_alternate(log) ? 1 : 0;
        std::set<AreaPath> earconed;
        bool ok = true;
        for (std::size_t i = 0; i < log.size(); ++i) {
            const auto* ec = std::get_if<Earcon>(&log[i].payload);
            if (!ec || ec->kind != EarconKind::first_touch) {
                continue;
            }
            // the earcon introduces the area speech that follows it
            const Speech* next = i + 1 < log.size() ? as_speech(log[i + 1]) : nullptr;
            ok = ok && next && next->area && earconed.insert(*next->area).second;
        }
        unique += ok ? 1 : 0;
    }
    const int n = static_cast<int>(replays.size());
    report(n > 0 && alternating == n && unique == n, "tone_alternation",
           fmt("%d/%d logs alternate, %d/%d with unique first-touch earcons", alternating, n, unique, n));
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg.rfind("--seed=", 0) == 0) {
            g_seed = std::stoull(arg.substr(7));
        }
    }
    hit_testing();
    prominence();
    menu_ordering();
    beacon_guidance();
    exploration_counts();
    zoom_round_trip();
    determinism();
    strategy_contrast();
    tone_alternation();
    return g_failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
