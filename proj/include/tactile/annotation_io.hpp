#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "tactile/image_model.hpp"

namespace tactile {

/// Malformed annotation document (bad JSON or wrong value types).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a file cannot be read or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses a `.annot.json` document. Unknown keys are kept in
/// AnnotatedImage::unknown_keys rather than rejected here.
AnnotatedImage parse_annotation(std::string_view json_text);

/// Serializes with numbers rounded to at most 9 fractional digits and
/// two-space indentation. `prominence` is written only when present.
std::string dump_annotation(const AnnotatedImage& image);

AnnotatedImage load_annotation(const std::filesystem::path& path);
void save_annotation(const std::filesystem::path& path, const AnnotatedImage& image);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

/// Rounds to 9 fractional digits, the precision used by every file format here.
double round9(double v);

}  // namespace tactile
