// SPDX-License-Identifier: Apache-2.0
//
// Plain-text configuration files: one `key = value` per line, `#` starts
// a comment, unknown keys are hard errors.  Keys mirror the SystemConfig
// field names.

#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "wppas/physics.hpp"

namespace wppas {

struct ConfigError : std::runtime_error {
    std::string field;  ///< offending key, when known
    int line = 0;       ///< 1-based line number, 0 when not applicable

    ConfigError(const std::string& msg, std::string fld = {}, int ln = 0)
        : std::runtime_error(msg), field(std::move(fld)), line(ln) {}
};

/// Parses and validates; throws ConfigError naming the offending field.
SystemConfig parse_config_text(const std::string& text);
SystemConfig parse_config_file(const std::filesystem::path& path);

/// Canonical serialisation; parse_config_text(serialize_config(c)) == c
/// field for field (doubles printed with 17 significant digits).
std::string serialize_config(const SystemConfig& cfg);

}  // namespace wppas
