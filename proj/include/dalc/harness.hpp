#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "dalc/decoder.hpp"
#include "dalc/interval.hpp"
#include "dalc/linear_codes.hpp"

namespace dalc {

struct SweepConfig {
    std::size_t n = 600;
    double p0 = 0.5;
    double alpha = 1.0;
    std::size_t t = 0;
    std::size_t M = 2048;
    Metric metric = Metric::MdacEq3;
    // CodeKind::None is the plain decoder baseline (MDAC or DAC, by metric).
    std::vector<CodeKind> codes{CodeKind::None, CodeKind::Crc16};
    std::vector<double> epsilon_grid{0.05};
    std::size_t trials = 1000;
    std::uint64_t base_seed = 1;
    ArithMode mode = ArithMode::Fixed64;

    // Throws std::invalid_argument.
    void validate() const;
    CodecParams codec() const;
    DecoderParams decoder(double epsilon) const;

    friend bool operator==(const SweepConfig&, const SweepConfig&) = default;
};

// "mdac"/"dac" for the baseline, "dalc-<code>" otherwise.
std::string method_name(CodeKind code, Metric metric);

struct TrialRecord {
    std::uint64_t seed = 0;
    std::size_t errors = 0;
    std::size_t tail_errors = 0;  // errors among positions ceil(n/2) .. n-1
    bool verified = false;
    std::size_t rank = 0;
    bool correct_path_present = false;
    std::size_t codeword_bits = 0;
    std::size_t parity_bits = 0;

    friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

// One block: source, parity, encoding, side information and a single tree
// search shared by every method in config.codes (all methods see the same
// realizations). Returns one record per entry of config.codes.
std::vector<TrialRecord> run_trial_methods(std::uint64_t seed, const SweepConfig& config, double epsilon);
TrialRecord run_trial(std::uint64_t seed, const SweepConfig& config, double epsilon, CodeKind method);

struct MethodStats {
    std::string method;
    double ber = 0.0;
    double verified_fraction = 0.0;
    std::optional<double> tail_error_proportion;  // empty when no errors occurred
    double rate_bits_per_symbol = 0.0;
    std::size_t trials = 0;
};

struct SweepRow {
    double epsilon = 0.0;
    double h_xy = 0.0;
    std::vector<MethodStats> methods;  // in config.codes order
};

// Trial seeds are base_seed + k for k in [0, trials), identical at every
// epsilon. Trials run in parallel with OpenMP; aggregation happens afterwards
// in trial order.
std::vector<SweepRow> run_sweep(const SweepConfig& config);
// Single-threaded reference; output is identical to run_sweep.
std::vector<SweepRow> run_sweep_serial(const SweepConfig& config);

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);

struct TailRow {
    std::size_t t = 0;
    std::optional<double> with_crc;
    std::optional<double> without_crc;
};

// Proportion of bit errors that fall in the latter half of the block, with and
// without CRC16 verification, for each tail length (aggregated over the
// epsilon grid).
std::vector<TailRow> tail_proportion_report(const SweepConfig& config, const std::vector<std::size_t>& t_grid,
                                            bool parallel = true);
void write_tail_csv(std::ostream& os, const std::vector<TailRow>& rows);

// %.6g
std::string format_number(double v);

}  // namespace dalc
