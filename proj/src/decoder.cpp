#include "dalc/decoder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace dalc {

std::string to_string(Metric metric) { return metric == Metric::DacEq1 ? "dac" : "mdac"; }

Metric parse_metric(std::string_view name) {
    if (name == "dac") return Metric::DacEq1;
    if (name == "mdac") return Metric::MdacEq3;
    throw std::invalid_argument("unknown metric: " + std::string(name));
}

void DecoderParams::validate() const {
    if (max_paths < 1) throw std::invalid_argument("DecoderParams: max_paths must be at least 1");
    if (max_paths > (std::size_t{1} << 30)) throw std::invalid_argument("DecoderParams: max_paths too large");
    if (!(epsilon >= 0.0 && epsilon < 0.5)) throw std::invalid_argument("DecoderParams: epsilon must lie in [0, 0.5)");
    code.validate();
}

double symbol_metric(bool x_bit, bool y_bit, double p0, double epsilon, Metric metric) {
    const double p1 = 1.0 - p0;
    const double px = x_bit ? p1 : p0;
    const double py_given_x = x_bit == y_bit ? 1.0 - epsilon : epsilon;
    const double py = y_bit ? p0 * epsilon + p1 * (1.0 - epsilon) : p0 * (1.0 - epsilon) + p1 * epsilon;
    if (py_given_x == 0.0) return -std::numeric_limits<double>::infinity();
    const double ratio = metric == Metric::DacEq1 ? px * py_given_x / py : py_given_x / py;
    return std::log(ratio);
}

MetricTable::MetricTable(double p0, double epsilon, Metric metric) {
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) terms_[2 * x + y] = symbol_metric(x, y, p0, epsilon, metric);
}

double MetricTable::path_metric(const PairCounts& counts) const {
    double m = 0.0;
    for (std::size_t k = 0; k < 4; ++k)
        if (counts.n[k] != 0) m += static_cast<double>(counts.n[k]) * terms_[k];
    return m;
}

bool ranks_before(double metric_a, const BitSeq& bits_a, double metric_b, const BitSeq& bits_b) {
    if (metric_a != metric_b) return metric_a > metric_b;
    return bits_a < bits_b;
}

namespace {

template <class State>
struct Branch {
    std::optional<State> zero;
    std::optional<State> one;
};

Branch<Interval> exact_branch(const Interval& parent, const UFrac& c, const SymbolProbs& pr) {
    Branch<Interval> b;
    Interval z = child_interval(parent, false, pr.p0, pr.p1);
    Interval o = child_interval(parent, true, pr.p0, pr.p1);
    if (contains(z, c)) b.zero = std::move(z);
    if (contains(o, c)) b.one = std::move(o);
    if (!b.zero && !b.one) throw std::logic_error("decoder: codeword value outside both children");
    return b;
}

class ExactBackend {
  public:
    using State = Interval;

    ExactBackend(const BitSeq& codeword, const CodecParams& params) : c_(dyadic_value(codeword)), params_(params) {}

    State root() const { return Interval::unit(); }
    Branch<State> branch(const State& s, std::size_t i) const { return exact_branch(s, c_, params_.probs_at(i)); }

  private:
    UFrac c_;
    const CodecParams& params_;
};

// Tracks offset = floor(c * 2^(F+shift)) - low and the width, both in the
// frame of the path; c itself is never materialized.
struct FixedState {
    std::uint64_t offset;
    std::uint64_t width;
    std::uint32_t shift;
};

class FixedBackend {
  public:
    using State = FixedState;

    FixedBackend(const BitSeq& codeword, const CodecParams& params) : codeword_(codeword), params_(params) {}

    State root() const {
        std::uint64_t d = 0;
        for (unsigned j = 0; j < fixed64::kFrameBits; ++j) d = (d << 1) | bit(j);
        return {d, fixed64::kFrameOne, 0};
    }

    Branch<State> branch(const State& s, std::size_t i) const {
        const fixed64::Split sp = fixed64::split(s.width, params_.probs_at(i), params_.quant_bits());
        Branch<State> b;
        if (s.offset < sp.zero_width) b.zero = renorm({s.offset, sp.zero_width, s.shift});
        if (s.offset >= sp.one_offset) b.one = renorm({s.offset - sp.one_offset, sp.one_width, s.shift});
        if (!b.zero && !b.one) throw std::logic_error("decoder: codeword value outside both children");
        return b;
    }

  private:
    std::uint64_t bit(std::size_t j) const { return j < codeword_.size() && codeword_[j] ? 1 : 0; }

    State renorm(State s) const {
        while (s.width < fixed64::kRenormFloor) {
            s.width <<= 1;
            s.offset = (s.offset << 1) | bit(fixed64::kFrameBits + s.shift);
            ++s.shift;
        }
        return s;
    }

    const BitSeq& codeword_;
    const CodecParams& params_;
};

constexpr std::uint32_t kNoIndex = std::numeric_limits<std::uint32_t>::max();

// Breadth-first M-algorithm. The live list is kept in lexicographic order of
// the path bits (children are appended parent by parent, bit 0 first, and
// pruning keeps survivors in place), so list position doubles as the
// lexicographic tie-break and bits are recovered from per-step back links.
template <class Backend>
SearchResult run_search(const Backend& backend, const BitSeq& y, const DecoderParams& params, const BitSeq* truth) {
    using State = typename Backend::State;
    struct Node {
        State state;
        PairCounts counts;
        double metric;
    };

    const std::size_t n = params.codec.n();
    const MetricTable table(params.codec.p0_real(), params.epsilon, params.metric);

    std::vector<Node> cur;
    cur.push_back({backend.root(), {}, 0.0});
    std::vector<Node> next;
    // links[i][k] = parent index << 1 | bit for survivor k after symbol i.
    std::vector<std::vector<std::uint32_t>> links(n);
    std::vector<std::uint32_t> order;

    DecodeStats stats;
    std::uint32_t truth_idx = truth ? 0 : kNoIndex;

    for (std::size_t i = 0; i < n; ++i) {
        next.clear();
        std::vector<std::uint32_t>& link = links[i];
        link.clear();
        link.reserve(std::min(2 * cur.size(), 2 * params.max_paths));
        std::uint32_t truth_next = kNoIndex;

        for (std::uint32_t j = 0; j < cur.size(); ++j) {
            Branch<State> br = backend.branch(cur[j].state, i);
            for (int b = 0; b < 2; ++b) {
                std::optional<State>& child = b == 0 ? br.zero : br.one;
                if (!child) continue;
                PairCounts counts = cur[j].counts;
                counts.add(b == 1, y[i]);
                if (j == truth_idx && (b == 1) == (*truth)[i]) truth_next = static_cast<std::uint32_t>(next.size());
                next.push_back({std::move(*child), counts, table.path_metric(counts)});
                link.push_back(j << 1 | static_cast<std::uint32_t>(b));
            }
        }

        if (next.size() > params.max_paths) {
            order.resize(next.size());
            std::iota(order.begin(), order.end(), 0u);
            auto better = [&next](std::uint32_t a, std::uint32_t b) {
                if (next[a].metric != next[b].metric) return next[a].metric > next[b].metric;
                return a < b;
            };
            const auto kth = order.begin() + static_cast<std::ptrdiff_t>(params.max_paths - 1);
            std::nth_element(order.begin(), kth, order.end(), better);
            const std::uint32_t pivot = *kth;
            // Compaction overwrites slots, so compare against a copy of the pivot key.
            const double pivot_metric = next[pivot].metric;
            auto kept = [&](std::uint32_t k) {
                if (next[k].metric != pivot_metric) return next[k].metric > pivot_metric;
                return k <= pivot;
            };

            std::size_t w = 0;
            std::uint32_t truth_kept = kNoIndex;
            for (std::uint32_t k = 0; k < next.size(); ++k) {
                if (!kept(k)) continue;
                if (k == truth_next) truth_kept = static_cast<std::uint32_t>(w);
                if (w != k) {
                    next[w] = std::move(next[k]);
                    link[w] = link[k];
                }
                ++w;
            }
            next.resize(w);
            link.resize(w);
            truth_next = truth_kept;
        }

        if (truth && truth_idx != kNoIndex && truth_next == kNoIndex) stats.pruned_at = i;
        truth_idx = truth_next;
        cur.swap(next);
    }

    order.resize(cur.size());
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&cur](std::uint32_t a, std::uint32_t b) {
        if (cur[a].metric != cur[b].metric) return cur[a].metric > cur[b].metric;
        return a < b;
    });

    SearchResult out;
    out.ranked.reserve(cur.size());
    for (std::uint32_t idx : order) {
        BitSeq bits(n);
        std::uint32_t k = idx;
        for (std::size_t i = n; i-- > 0;) {
            const std::uint32_t l = links[i][k];
            bits.set(i, l & 1u);
            k = l >> 1;
        }
        out.ranked.push_back({std::move(bits), cur[idx].metric});
    }
    stats.candidates_final = cur.size();
    if (truth) stats.correct_path_present = truth_idx != kNoIndex;
    out.stats = stats;
    return out;
}

void check_shapes(const BitSeq& y, const DecoderParams& params, const BitSeq* truth) {
    params.validate();
    if (y.size() != params.codec.n()) throw std::invalid_argument("decode: side information length does not match n");
    if (truth && truth->size() != params.codec.n()) throw std::invalid_argument("decode: truth length does not match n");
}

}  // namespace

std::vector<CandidatePath> step(const CandidatePath& path, const UFrac& c, std::size_t i, const BitSeq& y,
                                const DecoderParams& params) {
    if (i >= params.codec.n() || i >= y.size()) throw std::invalid_argument("step: symbol index out of range");
    if (!contains(path.interval, c)) throw std::invalid_argument("step: codeword value outside the path interval");
    const MetricTable table(params.codec.p0_real(), params.epsilon, params.metric);
    Branch<Interval> br = exact_branch(path.interval, c, params.codec.probs_at(i));

    std::vector<CandidatePath> out;
    for (int b = 0; b < 2; ++b) {
        std::optional<Interval>& child = b == 0 ? br.zero : br.one;
        if (!child) continue;
        CandidatePath next{path.bits, std::move(*child), path.counts, 0.0};
        next.bits.push_back(b == 1);
        next.counts.add(b == 1, y[i]);
        next.log_metric = table.path_metric(next.counts);
        out.push_back(std::move(next));
    }
    return out;
}

std::vector<CandidatePath> prune(std::vector<CandidatePath> candidates, std::size_t max_paths) {
    std::sort(candidates.begin(), candidates.end(), [](const CandidatePath& a, const CandidatePath& b) {
        return ranks_before(a.log_metric, a.bits, b.log_metric, b.bits);
    });
    if (candidates.size() > max_paths) candidates.resize(max_paths);
    return candidates;
}

SearchResult search_candidates(const BitSeq& codeword, const BitSeq& y, const DecoderParams& params,
                               const BitSeq* truth) {
    check_shapes(y, params, truth);
    if (params.codec.mode() == ArithMode::Exact) return run_search(ExactBackend(codeword, params.codec), y, params, truth);
    return run_search(FixedBackend(codeword, params.codec), y, params, truth);
}

DecodeResult select_verified(const SearchResult& search, const BitSeq& z, const CodeSpec& code) {
    if (z.size() != code.parity_length()) throw std::invalid_argument("decode: parity length does not match code");
    if (search.ranked.empty()) throw std::logic_error("decode: empty candidate set");

    DecodeResult r;
    r.stats = search.stats;
    if (code.kind != CodeKind::None) {
        for (std::size_t j = 0; j < search.ranked.size(); ++j) {
            if (verify(search.ranked[j].bits, code, z)) {
                r.bits = search.ranked[j].bits;
                r.verified = true;
                r.rank = j + 1;
                return r;
            }
        }
    }
    r.bits = search.ranked.front().bits;
    r.verified = code.kind == CodeKind::None;
    r.rank = 1;
    return r;
}

DecodeResult decode(const BitSeq& codeword, const BitSeq& y, const BitSeq& z, const DecoderParams& params) {
    if (z.size() != params.code.parity_length()) throw std::invalid_argument("decode: parity length does not match code");
    return select_verified(search_candidates(codeword, y, params), z, params.code);
}

DecodeResult decode_with_truth(const BitSeq& codeword, const BitSeq& y, const BitSeq& z,
                               const DecoderParams& params, const BitSeq& truth) {
    if (z.size() != params.code.parity_length()) throw std::invalid_argument("decode: parity length does not match code");
    return select_verified(search_candidates(codeword, y, params, &truth), z, params.code);
}

namespace {

template <class Backend>
RegionTrace trace_with(const Backend& backend, const BitSeq& x, std::size_t renorm_probe(const typename Backend::State&)) {
    RegionTrace tr;
    auto s = backend.root();
    bool renormed = false;
    for (std::size_t i = 0; i < x.size(); ++i) {
        Branch<typename Backend::State> br = backend.branch(s, i);
        tr.regions.push_back(br.zero && br.one ? Region::Overlap : br.zero ? Region::ZeroOnly : Region::OneOnly);
        auto& chosen = x[i] ? br.one : br.zero;
        if (!chosen) {
            tr.truth_lost = true;
            break;
        }
        s = std::move(*chosen);
        if (!renormed && renorm_probe(s) > 0) renormed = true;
        if (!renormed) tr.steps_before_renorm = i + 1;
    }
    return tr;
}

std::size_t no_renorm(const Interval&) { return 0; }
std::size_t fixed_shift(const FixedState& s) { return s.shift; }

}  // namespace

RegionTrace trace_regions(const BitSeq& codeword, const BitSeq& x, const CodecParams& params) {
    if (x.size() != params.n()) throw std::invalid_argument("trace_regions: source length does not match n");
    if (params.mode() == ArithMode::Exact) return trace_with(ExactBackend(codeword, params), x, no_renorm);
    return trace_with(FixedBackend(codeword, params), x, fixed_shift);
}

}  // namespace dalc
