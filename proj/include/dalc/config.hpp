#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dalc/harness.hpp"

namespace dalc {

// File-backed sweep description. JSON object with keys:
//   n, p0, alpha, t, M, metric ("dac"|"mdac"),
//   codes (array of "none"|"crc16"|"bch"|"ldpc16"|"bpc16"),
//   epsilon_grid (array), trials, base_seed, mode ("exact"|"fixed64"),
//   out (string, optional), t_grid (array, optional; used by the tail report).
struct RunConfig {
    SweepConfig sweep;
    std::string out;
    std::vector<std::size_t> t_grid{0, 2, 4};

    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

// Missing keys keep their SweepConfig defaults; unknown keys are rejected.
// Throws std::invalid_argument on parse or validation failure.
RunConfig parse_run_config(const std::string& json_text);
RunConfig load_run_config(const std::string& path);
std::string serialize_run_config(const RunConfig& config);

std::string to_string(ArithMode mode);
ArithMode parse_arith_mode(const std::string& name);

}  // namespace dalc
