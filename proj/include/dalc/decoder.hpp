#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dalc/bitseq.hpp"
#include "dalc/codec.hpp"
#include "dalc/interval.hpp"
#include "dalc/linear_codes.hpp"

namespace dalc {

// DacEq1 ranks by p(x) p(y|x) / p(y); MdacEq3 drops the source prior.
enum class Metric { DacEq1, MdacEq3 };

std::string to_string(Metric metric);  // "dac" / "mdac"
Metric parse_metric(std::string_view name);

struct DecoderParams {
    CodecParams codec;
    std::size_t max_paths = 2048;
    Metric metric = Metric::MdacEq3;
    double epsilon = 0.0;
    CodeSpec code;

    void validate() const;
};

// Natural-log metric contribution of deciding x_bit against side information
// y_bit. epsilon == 0 with x_bit != y_bit yields -infinity.
double symbol_metric(bool x_bit, bool y_bit, double p0, double epsilon, Metric metric);

// Occurrences of each (x, y) pair along a path, indexed 2*x + y. A path's
// metric is a function of these counts only, so two paths with the same
// counts compare exactly equal regardless of symbol order.
struct PairCounts {
    std::array<std::uint32_t, 4> n{};

    void add(bool x, bool y) { ++n[(x ? 2 : 0) + (y ? 1 : 0)]; }
    friend bool operator==(const PairCounts&, const PairCounts&) = default;
};

class MetricTable {
  public:
    MetricTable(double p0, double epsilon, Metric metric);

    double term(bool x, bool y) const { return terms_[(x ? 2 : 0) + (y ? 1 : 0)]; }
    double path_metric(const PairCounts& counts) const;

  private:
    std::array<double, 4> terms_{};
};

// A partial decoding hypothesis over the exact interval state.
struct CandidatePath {
    BitSeq bits;
    Interval interval;
    PairCounts counts;
    double log_metric = 0.0;
};

// Descending metric; equal metrics fall back to lexicographically smaller bits.
bool ranks_before(double metric_a, const BitSeq& bits_a, double metric_b, const BitSeq& bits_b);

// Extends one path by symbol i (exact arithmetic). Returns the one or two
// successors whose child interval contains c, bit 0 first. Requires
// c in path.interval.
std::vector<CandidatePath> step(const CandidatePath& path, const UFrac& c, std::size_t i, const BitSeq& y,
                                const DecoderParams& params);

// Keeps the max_paths best by ranks_before; the result is in rank order.
std::vector<CandidatePath> prune(std::vector<CandidatePath> candidates, std::size_t max_paths);

struct RankedPath {
    BitSeq bits;
    double log_metric = 0.0;
};

struct DecodeStats {
    std::size_t candidates_final = 0;
    std::optional<bool> correct_path_present;
    std::optional<std::size_t> pruned_at;  // symbol index at which the truth left the candidate set
};

// Final candidate set of the breadth-first search, in rank order.
struct SearchResult {
    std::vector<RankedPath> ranked;
    DecodeStats stats;
};

struct DecodeResult {
    BitSeq bits;
    bool verified = false;
    std::size_t rank = 0;  // 1-based position of bits in the ranked candidate list
    DecodeStats stats;
};

// M-algorithm over all n symbols in the arithmetic mode of params.codec.
// Verification is not applied; see select_verified.
SearchResult search_candidates(const BitSeq& codeword, const BitSeq& y, const DecoderParams& params,
                               const BitSeq* truth = nullptr);

// Returns the first ranked path whose parity equals z. When none does, the
// rank-1 path is returned with verified = false. CodeKind::None returns rank 1
// verified.
DecodeResult select_verified(const SearchResult& search, const BitSeq& z, const CodeSpec& code);

DecodeResult decode(const BitSeq& codeword, const BitSeq& y, const BitSeq& z, const DecoderParams& params);
DecodeResult decode_with_truth(const BitSeq& codeword, const BitSeq& y, const BitSeq& z,
                               const DecoderParams& params, const BitSeq& truth);

// Which children of the true path contain the codeword value at each step.
enum class Region { ZeroOnly, OneOnly, Overlap };

struct RegionTrace {
    std::vector<Region> regions;  // one entry per symbol followed
    bool truth_lost = false;      // the child chosen by x did not contain the codeword value
    std::size_t steps_before_renorm = 0;  // Fixed64: symbols coded before the first renormalization
};

// Follows x through the decoder's region logic in the arithmetic mode of
// params. Stops early if x leaves the codeword's region.
RegionTrace trace_regions(const BitSeq& codeword, const BitSeq& x, const CodecParams& params);

}  // namespace dalc
