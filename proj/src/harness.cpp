#include "dalc/harness.hpp"

#include <cstdio>
#include <exception>
#include <stdexcept>

#include "dalc/channel.hpp"
#include "dalc/codec.hpp"

namespace dalc {

void SweepConfig::validate() const {
    if (n < 1) throw std::invalid_argument("SweepConfig: n must be at least 1");
    if (trials < 1) throw std::invalid_argument("SweepConfig: trials must be at least 1");
    if (M < 1) throw std::invalid_argument("SweepConfig: M must be at least 1");
    if (codes.empty()) throw std::invalid_argument("SweepConfig: codes must not be empty");
    if (epsilon_grid.empty()) throw std::invalid_argument("SweepConfig: epsilon_grid must not be empty");
    for (std::size_t k = 0; k < epsilon_grid.size(); ++k) {
        const double e = epsilon_grid[k];
        if (!(e >= 0.0 && e < 0.5)) throw std::invalid_argument("SweepConfig: epsilon must lie in [0, 0.5)");
        if (k > 0 && !(e > epsilon_grid[k - 1]))
            throw std::invalid_argument("SweepConfig: epsilon_grid must be strictly increasing");
    }
    codec();
}

CodecParams SweepConfig::codec() const { return CodecParams::make(n, p0, alpha, t, mode); }

DecoderParams SweepConfig::decoder(double epsilon) const {
    DecoderParams d{codec(), M, metric, epsilon, CodeSpec::none()};
    d.validate();
    return d;
}

std::string method_name(CodeKind code, Metric metric) {
    if (code == CodeKind::None) return to_string(metric);
    return "dalc-" + to_string(code);
}

std::vector<TrialRecord> run_trial_methods(std::uint64_t seed, const SweepConfig& config, double epsilon) {
    const SourceModel model{config.p0, epsilon, seed};
    const DecoderParams dparams = config.decoder(epsilon);
    const std::size_t n = config.n;

    const BitSeq x = gen_source(n, model);
    const EncodeResult enc = encode(x, dparams.codec);
    const BitSeq y = gen_side_info(x, model);
    const SearchResult search = search_candidates(enc.codeword, y, dparams, &x);

    std::vector<TrialRecord> out;
    out.reserve(config.codes.size());
    for (CodeKind kind : config.codes) {
        const CodeSpec spec = default_spec(kind);
        const BitSeq z = parity(x, spec);
        const DecodeResult r = select_verified(search, z, spec);

        TrialRecord rec;
        rec.seed = seed;
        for (std::size_t i = 0; i < n; ++i) {
            if (r.bits[i] == x[i]) continue;
            ++rec.errors;
            if (i >= (n + 1) / 2) ++rec.tail_errors;
        }
        rec.verified = r.verified;
        rec.rank = r.rank;
        rec.correct_path_present = r.stats.correct_path_present.value_or(false);
        rec.codeword_bits = enc.rate_bits;
        rec.parity_bits = spec.parity_length();
        out.push_back(rec);
    }
    return out;
}

TrialRecord run_trial(std::uint64_t seed, const SweepConfig& config, double epsilon, CodeKind method) {
    SweepConfig single = config;
    single.codes = {method};
    return run_trial_methods(seed, single, epsilon).front();
}

namespace {

// records[e * trials + k] holds the per-method records of trial k at grid point e.
using TrialTable = std::vector<std::vector<TrialRecord>>;

TrialTable run_all(const SweepConfig& config, bool parallel) {
    config.validate();
    const std::size_t points = config.epsilon_grid.size();
    const std::size_t total = points * config.trials;
    TrialTable table(total);

    if (!parallel) {
        for (std::size_t w = 0; w < total; ++w)
            table[w] = run_trial_methods(config.base_seed + w % config.trials, config,
                                         config.epsilon_grid[w / config.trials]);
        return table;
    }

    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (std::size_t w = 0; w < total; ++w) {
        try {
            table[w] = run_trial_methods(config.base_seed + w % config.trials, config,
                                         config.epsilon_grid[w / config.trials]);
        } catch (...) {
#pragma omp critical(dalc_sweep_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return table;
}

struct Totals {
    std::size_t errors = 0, tail_errors = 0, verified = 0, bits = 0, records = 0;

    void add(const TrialRecord& r) {
        errors += r.errors;
        tail_errors += r.tail_errors;
        verified += r.verified ? 1 : 0;
        bits += r.codeword_bits + r.parity_bits;
        ++records;
    }
    std::optional<double> tail_proportion() const {
        if (errors == 0) return std::nullopt;
        return static_cast<double>(tail_errors) / static_cast<double>(errors);
    }
};

std::vector<SweepRow> aggregate(const SweepConfig& config, const TrialTable& table) {
    std::vector<SweepRow> rows;
    const double n = static_cast<double>(config.n);
    for (std::size_t e = 0; e < config.epsilon_grid.size(); ++e) {
        SweepRow row;
        row.epsilon = config.epsilon_grid[e];
        row.h_xy = joint_entropy(config.p0, row.epsilon);
        for (std::size_t m = 0; m < config.codes.size(); ++m) {
            Totals tot;
            for (std::size_t k = 0; k < config.trials; ++k) tot.add(table[e * config.trials + k][m]);
            const double count = static_cast<double>(tot.records);
            MethodStats s;
            s.method = method_name(config.codes[m], config.metric);
            s.ber = static_cast<double>(tot.errors) / (count * n);
            s.verified_fraction = static_cast<double>(tot.verified) / count;
            s.tail_error_proportion = tot.tail_proportion();
            s.rate_bits_per_symbol = static_cast<double>(tot.bits) / (count * n);
            s.trials = tot.records;
            row.methods.push_back(std::move(s));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepConfig& config) { return aggregate(config, run_all(config, true)); }

std::vector<SweepRow> run_sweep_serial(const SweepConfig& config) { return aggregate(config, run_all(config, false)); }

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
    os << "epsilon,h_xy,method,ber,verified_fraction,tail_error_proportion,rate_bits_per_symbol,trials\n";
    for (const SweepRow& row : rows) {
        for (const MethodStats& m : row.methods) {
            os << format_number(row.epsilon) << ',' << format_number(row.h_xy) << ',' << m.method << ','
               << format_number(m.ber) << ',' << format_number(m.verified_fraction) << ',';
            if (m.tail_error_proportion) os << format_number(*m.tail_error_proportion);
            os << ',' << format_number(m.rate_bits_per_symbol) << ',' << m.trials << '\n';
        }
    }
}

std::vector<TailRow> tail_proportion_report(const SweepConfig& config, const std::vector<std::size_t>& t_grid,
                                            bool parallel) {
    std::vector<TailRow> rows;
    for (std::size_t t : t_grid) {
        if (t > config.n) throw std::invalid_argument("tail_proportion_report: t exceeds n");
        SweepConfig c = config;
        c.t = t;
        c.codes = {CodeKind::Crc16, CodeKind::None};
        const TrialTable table = run_all(c, parallel);
        Totals with_crc, without_crc;
        for (const auto& recs : table) {
            with_crc.add(recs[0]);
            without_crc.add(recs[1]);
        }
        rows.push_back({t, with_crc.tail_proportion(), without_crc.tail_proportion()});
    }
    return rows;
}

void write_tail_csv(std::ostream& os, const std::vector<TailRow>& rows) {
    os << "t,with_crc,without_crc\n";
    for (const TailRow& r : rows) {
        os << r.t << ',';
        if (r.with_crc) os << format_number(*r.with_crc);
        os << ',';
        if (r.without_crc) os << format_number(*r.without_crc);
        os << '\n';
    }
}

}  // namespace dalc
