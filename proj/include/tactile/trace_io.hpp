#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tactile/gesture.hpp"

namespace tactile {

/// `{"events":[{"t":int,"p":int,"phase":"down|move|up","x":float,"y":float},...]}`
std::vector<TouchEvent> parse_trace(std::string_view json_text);

/// One event per line; coordinates rounded to 9 fractional digits.
std::string dump_trace(std::span<const TouchEvent> events);

std::vector<TouchEvent> load_trace(const std::filesystem::path& path);
void save_trace(const std::filesystem::path& path, std::span<const TouchEvent> events);

}  // namespace tactile
