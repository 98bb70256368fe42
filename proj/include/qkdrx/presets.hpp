#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qkdrx/config.hpp"

namespace qkdrx {

namespace detail {
struct EmbeddedFile {
    const char* name;     // e.g. "presets/mono-1G5.ini"
    const char* content;
};
extern const EmbeddedFile kEmbeddedFiles[];
extern const std::size_t kEmbeddedFileCount;
} // namespace detail

/// Names of the bundled presets, sorted.
std::vector<std::string> preset_names();

/// Loads a preset configuration over the built-in defaults. Preset files
/// are read from $QKDRX_PRESET_DIR when that is set, falling back to the
/// embedded copies of the bundled data files. Throws ConfigError for
/// unknown names.
RunConfig load_preset(const std::string& name);

/// Raw text of the bundled detector datasheet table.
std::string bundled_detectors_text();

} // namespace qkdrx
