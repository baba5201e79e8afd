#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fracschrod/params.hpp"

namespace fracschrod {

/// Everything a run depends on. Every field is echoed into the outputs.
struct RunConfig {
    PhysicalParams params = PhysicalParams::natural(1.0);
    Convention convention = Convention::Reduced;
    std::size_t grid_points = 4001;
    int levels = 5;
    std::filesystem::path out_dir = "out";
    std::map<std::string, double> tolerance_overrides;  // keyed by claim id

    /// Applies one `key = value` setting. Keys: m, c, hbar, B, omega, L,
    /// convention, grid_points, levels, out, tol.<claim id>.
    /// Throws std::invalid_argument on unknown keys or bad values.
    void set(std::string_view key, std::string_view value);

    /// Effective settings as ordered key/value text, numbers at 17 digits.
    std::vector<std::pair<std::string, std::string>> echo() const;
};

/// Parses `key = value` lines onto `base`. '#' starts a comment; blank lines
/// are skipped. Errors carry the line number.
RunConfig parse_config(std::string_view text, RunConfig base = {});

RunConfig load_config(const std::filesystem::path& file, RunConfig base = {});

/// Output directory after FRACSCHROD_OUT: the variable replaces the file or
/// default value, an explicit --out flag replaces both.
std::filesystem::path resolve_out_dir(const RunConfig& config, const char* env_value,
                                      const std::string* flag_value);

/// 17 significant digits; negative zero prints as 0.
std::string format_number(double value);

}  // namespace fracschrod
