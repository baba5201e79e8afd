#include "fracschrod/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

namespace fracschrod {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double to_double(std::string_view key, std::string_view text) {
    double value = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end) {
        throw std::invalid_argument(fmt::format("'{}': not a number: '{}'", key, text));
    }
    return value;
}

long to_integer(std::string_view key, std::string_view text) {
    long value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end) {
        throw std::invalid_argument(fmt::format("'{}': not an integer: '{}'", key, text));
    }
    return value;
}

}  // namespace

std::string format_number(double value) { return fmt::format("{:.17g}", value == 0.0 ? 0.0 : value); }

void RunConfig::set(std::string_view key, std::string_view value) {
    key = trim(key);
    value = trim(value);
    PhysicalParams next = params;
    if (key == "m") {
        next.mass = to_double(key, value);
    } else if (key == "c") {
        next.c = to_double(key, value);
    } else if (key == "hbar") {
        next.hbar = to_double(key, value);
    } else if (key == "B") {
        next.damping = to_double(key, value);
    } else if (key == "omega") {
        next.omega = to_double(key, value);
    } else if (key == "L") {
        next.length = to_double(key, value);
    } else if (key == "convention") {
        convention = parse_convention(value);
        return;
    } else if (key == "grid_points") {
        const long n = to_integer(key, value);
        if (n < 64) throw std::invalid_argument("grid_points must be at least 64");
        grid_points = static_cast<std::size_t>(n);
        return;
    } else if (key == "levels") {
        const long n = to_integer(key, value);
        if (n < 1 || n > 20) throw std::invalid_argument("levels must be in [1, 20]");
        levels = static_cast<int>(n);
        return;
    } else if (key == "out") {
        if (value.empty()) throw std::invalid_argument("out must not be empty");
        out_dir = std::string(value);
        return;
    } else if (key.starts_with("tol.")) {
        const double tol = to_double(key, value);
        if (!(tol >= 0.0)) throw std::invalid_argument(fmt::format("'{}' must be non-negative", key));
        tolerance_overrides[std::string(key.substr(4))] = tol;
        return;
    } else {
        throw std::invalid_argument(fmt::format("unknown configuration key '{}'", key));
    }
    next.validate();
    params = next;
}

std::vector<std::pair<std::string, std::string>> RunConfig::echo() const {
    std::vector<std::pair<std::string, std::string>> out{
        {"m", format_number(params.mass)},
        {"c", format_number(params.c)},
        {"hbar", format_number(params.hbar)},
        {"B", format_number(params.damping)},
        {"omega", format_number(params.omega)},
        {"L", format_number(params.length)},
        {"convention", std::string(to_string(convention))},
        {"grid_points", std::to_string(grid_points)},
        {"levels", std::to_string(levels)},
    };
    for (const auto& [id, tol] : tolerance_overrides) out.emplace_back("tol." + id, format_number(tol));
    return out;
}

RunConfig parse_config(std::string_view text, RunConfig base) {
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw std::invalid_argument(fmt::format("config line {}: expected 'key = value'", line_no));
        }
        try {
            base.set(line.substr(0, eq), line.substr(eq + 1));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(fmt::format("config line {}: {}", line_no, e.what()));
        }
    }
    return base;
}

RunConfig load_config(const std::filesystem::path& file, RunConfig base) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open config file " + file.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str(), std::move(base));
}

std::filesystem::path resolve_out_dir(const RunConfig& config, const char* env_value,
                                      const std::string* flag_value) {
    if (flag_value && !flag_value->empty()) return *flag_value;
    if (env_value && *env_value) return env_value;
    return config.out_dir;
}

}  // namespace fracschrod
