#include "sliceweaver/config.hpp"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "sliceweaver/errors.hpp"

namespace sliceweaver {

namespace {

const char* const kScalarKeys[] = {
    "category_count", "a",       "a_prime",        "sigma_a_sq", "cov_a",
    "g",              "r_max",   "f_d",            "beta",       "delta_t",
    "sigma_s_sq",     "cell_throughput", "r_lo",   "r_hi",       "seed",
};

const char* const kRequiredKeys[] = {
    "category_count", "a",    "a_prime", "g",    "r_max",           "f_d",
    "beta",           "delta_t", "sigma_s_sq", "cell_throughput", "r_lo", "r_hi",
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

bool is_scalar_key(std::string_view key) {
    for (const char* known : kScalarKeys) {
        if (key == known) return true;
    }
    return false;
}

double parse_double(std::string_view value, std::string_view key, int line) {
    const std::string text(value);
    errno = 0;
    char* end = nullptr;
    const double parsed = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size() || text.empty() || errno == ERANGE) {
        throw ParseError("line " + std::to_string(line) + ": invalid number for '" +
                         std::string(key) + "'");
    }
    return parsed;
}

long long parse_integer(std::string_view value, std::string_view key, int line) {
    const std::string text(value);
    errno = 0;
    char* end = nullptr;
    const long long parsed = std::strtoll(text.c_str(), &end, 10);
    if (end != text.c_str() + text.size() || text.empty() || errno == ERANGE) {
        throw ParseError("line " + std::to_string(line) + ": invalid integer for '" +
                         std::string(key) + "'");
    }
    return parsed;
}

std::uint64_t parse_seed(std::string_view value, int line) {
    const std::string text(value);
    if (text.empty() || text[0] == '-') {
        throw ParseError("line " + std::to_string(line) +
                         ": seed must be a decimal 64-bit unsigned integer");
    }
    errno = 0;
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(text.c_str(), &end, 10);
    if (end != text.c_str() + text.size() || errno == ERANGE) {
        throw ParseError("line " + std::to_string(line) +
                         ": seed must be a decimal 64-bit unsigned integer");
    }
    return parsed;
}

}  // namespace

ScenarioConfig parse_config(std::string_view text) {
    struct RawValue {
        std::string value;
        int line = 0;
    };
    std::map<std::string, RawValue> scalars;
    std::vector<std::pair<std::string, int>> arrivals_raw;

    int line_number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        ++line_number;
        const std::size_t newline = text.find('\n', start);
        std::string_view line = text.substr(
            start, newline == std::string_view::npos ? text.size() - start
                                                     : newline - start);
        start = newline == std::string_view::npos ? text.size() + 1 : newline + 1;

        const std::size_t hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const std::size_t equals = line.find('=');
        if (equals == std::string_view::npos) {
            throw ParseError("line " + std::to_string(line_number) +
                             ": expected 'key = value'");
        }
        const std::string key(trim(line.substr(0, equals)));
        const std::string value(trim(line.substr(equals + 1)));
        if (key.empty()) {
            throw ParseError("line " + std::to_string(line_number) + ": missing key");
        }

        if (key == "arrival") {
            arrivals_raw.emplace_back(value, line_number);
            continue;
        }
        if (!is_scalar_key(key)) {
            throw ParseError("line " + std::to_string(line_number) + ": unknown key '" +
                             key + "'");
        }
        const auto [it, inserted] = scalars.emplace(key, RawValue{value, line_number});
        if (!inserted) {
            throw ParseError("line " + std::to_string(line_number) + ": duplicate key '" +
                             key + "' (first defined at line " +
                             std::to_string(it->second.line) + ")");
        }
    }

    for (const char* required : kRequiredKeys) {
        if (scalars.find(required) == scalars.end()) {
            throw ValidationError("missing required key '" + std::string(required) + "'");
        }
    }

    auto scalar_double = [&scalars](const char* key) {
        const RawValue& raw = scalars.at(key);
        return parse_double(raw.value, key, raw.line);
    };
    auto optional_double = [&scalars](const char* key, double fallback) {
        const auto it = scalars.find(key);
        if (it == scalars.end()) return fallback;
        return parse_double(it->second.value, key, it->second.line);
    };

    ScenarioConfig config;
    {
        const RawValue& raw = scalars.at("category_count");
        const long long count = parse_integer(raw.value, "category_count", raw.line);
        if (count < 1 || count > 1'000'000) {
            throw ValidationError("category_count must be positive");
        }
        config.category_count = static_cast<int>(count);
    }
    config.bound_params.a = scalar_double("a");
    config.bound_params.a_prime = scalar_double("a_prime");
    config.bound_params.sigma_a_sq = optional_double("sigma_a_sq", 0.0);
    config.bound_params.cov_a = optional_double("cov_a", 0.0);
    config.bound_params.g = scalar_double("g");
    config.bound_params.r_max = scalar_double("r_max");
    config.allocation_params.f_d = scalar_double("f_d");
    config.allocation_params.beta = scalar_double("beta");
    config.allocation_params.delta_t = scalar_double("delta_t");
    config.allocation_params.sigma_s_sq = scalar_double("sigma_s_sq");
    config.allocation_params.cell_throughput = scalar_double("cell_throughput");
    config.r_range.lo = scalar_double("r_lo");
    config.r_range.hi = scalar_double("r_hi");
    if (const auto it = scalars.find("seed"); it != scalars.end()) {
        config.seed = parse_seed(it->second.value, it->second.line);
    }

    for (const auto& [value, line] : arrivals_raw) {
        const std::size_t comma = value.find(',');
        if (comma == std::string::npos) {
            throw ParseError("line " + std::to_string(line) +
                             ": arrival must be 'category,snr'");
        }
        Arrival arrival;
        const long long category =
            parse_integer(trim(std::string_view(value).substr(0, comma)), "arrival", line);
        if (category < 0 || category > 1'000'000) {
            throw ParseError("line " + std::to_string(line) +
                             ": arrival category out of range");
        }
        arrival.category = static_cast<int>(category);
        arrival.snr =
            parse_double(trim(std::string_view(value).substr(comma + 1)), "arrival", line);
        config.arrivals.push_back(arrival);
    }

    config.validate();
    return config;
}

ScenarioConfig load_config_file(const std::filesystem::path& path) {
    std::ifstream stream(path, std::ios::binary);
    if (!stream) {
        throw IoError("cannot read config file '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << stream.rdbuf();
    return parse_config(buffer.str());
}

}  // namespace sliceweaver
