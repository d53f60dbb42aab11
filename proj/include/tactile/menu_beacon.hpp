#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "tactile/audio_event.hpp"
#include "tactile/config.hpp"
#include "tactile/gesture.hpp"
#include "tactile/state.hpp"

namespace tactile {

/// Entries for the current level: unexplored first, explored last. With
/// hints on, each block lists recommended areas alphabetically, then the
/// rest by descending sub-area count with alphabetical ties; without hints
/// each block keeps annotation order. While zoomed only areas overlapping
/// the active quadrant are listed.
std::vector<MenuEntry> build_menu(const EngineContext& ctx, const ExplorationState& state);

/// The utterance for one entry, e.g. "recommended balcony, 3 sub-areas".
Speech menu_entry_speech(const EngineContext& ctx, const MenuEntry& entry);

/// Button taps. `presses` is the tap count of the gesture; each press on the
/// scroll button advances the cursor once.
void menu_tap(const EngineContext& ctx, ExplorationState& state, Button button, int presses, std::int64_t now_ms,
              std::vector<AudioEvent>& out);

/// Hold on the scroll button: cancels an active beacon, otherwise starts one
/// on the entry under the cursor. Ignored while the menu is closed.
void menu_hold(const EngineContext& ctx, ExplorationState& state, Button button, std::int64_t now_ms,
               std::vector<AudioEvent>& out);

void cancel_beacon(ExplorationState& state, std::int64_t now_ms, std::vector<AudioEvent>& out);

/// Feedback for a finger at `finger` (image coordinates) while a beacon is
/// active: arrival, beep cadence, periodic direction.
void beacon_guide(const EngineContext& ctx, ExplorationState& state, Point finger, std::int64_t now_ms,
                  std::vector<AudioEvent>& out);

enum class Direction { right, down_right, down, down_left, left, up_left, up, up_right };

/// 8-way quantization of a screen vector (y down). On an exact sector
/// boundary the lower enumerator wins.
Direction direction_of(Point v);
std::string_view direction_phrase(Direction d);

/// Beep interval for a finger `distance` away from the target, rounded to
/// 10 ms. Grows linearly from min_interval_ms at 0 to max_interval_ms at
/// the screen diagonal.
int beep_interval_ms(double distance, const MenuBeaconConfig& cfg);

}  // namespace tactile
