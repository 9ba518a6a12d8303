#include "cli.hpp"

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dalc/codec.hpp"
#include "dalc/config.hpp"
#include "dalc/decoder.hpp"
#include "dalc/harness.hpp"
#include "dalc/linear_codes.hpp"

namespace dalc::cli {

namespace {

// Malformed input files map to exit code 2.
struct MalformedInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

BitSeq read_bits(const std::string& path, bool allow_empty) {
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    BitSeq bits;
    try {
        bits = BitSeq::parse(ss.str());
    } catch (const std::invalid_argument& e) {
        throw MalformedInput(path + ": " + e.what());
    }
    if (bits.empty() && !allow_empty) throw MalformedInput(path + ": no bits");
    return bits;
}

void write_bits(const std::string& path, const BitSeq& bits) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << bits.to_string() << '\n';
}

struct CodecFlags {
    std::optional<std::size_t> n;
    double p0 = 0.5;
    double alpha = 1.0;
    std::size_t t = 0;
    std::string mode = "exact";
    std::string code = "none";
    std::optional<std::string> poly;
    std::optional<std::size_t> groups;

    void attach(CLI::App& app) {
        app.add_option("--n", n, "Block length (defaults to the input length)");
        app.add_option("--p0", p0, "Probability of symbol 0");
        app.add_option("--alpha", alpha, "Overlap factor in [0, 1]");
        app.add_option("--t", t, "Number of tail symbols coded without overlap");
        app.add_option("--mode", mode, "Arithmetic mode")->check(CLI::IsMember({"exact", "fixed64"}));
        app.add_option("--code", code, "Parity code")->check(CLI::IsMember({"none", "crc16", "bch", "ldpc16", "bpc16"}));
        app.add_option("--poly", poly, "Generator polynomial override (hex, leading term included) for crc16/bch");
        app.add_option("--groups", groups, "Group count override for ldpc16/bpc16");
    }

    CodeSpec code_spec() const {
        CodeSpec spec = default_spec(parse_code_kind(code));
        if (poly) {
            if (spec.kind != CodeKind::Crc16 && spec.kind != CodeKind::Bch)
                throw std::invalid_argument("--poly applies to crc16/bch only");
            spec.generator = std::stoull(*poly, nullptr, 16);
        }
        if (groups) {
            if (spec.kind != CodeKind::InterleavedParity && spec.kind != CodeKind::BlockParity)
                throw std::invalid_argument("--groups applies to ldpc16/bpc16 only");
            spec.group_count = *groups;
        }
        spec.validate();
        return spec;
    }

    CodecParams codec(std::size_t length) const {
        if (n && *n != length) throw std::invalid_argument("--n does not match the input length");
        return CodecParams::make(length, p0, alpha, t, parse_arith_mode(mode));
    }
};

int cmd_encode(const std::string& input, const CodecFlags& flags, const std::string& out_path,
               std::string parity_path, bool verbose, std::ostream& out) {
    const BitSeq x = read_bits(input, false);
    const CodecParams params = flags.codec(x.size());
    const CodeSpec spec = flags.code_spec();

    const EncodeResult enc = encode(x, params);
    const BitSeq z = parity(x, spec);
    if (parity_path.empty()) parity_path = out_path + ".parity";
    write_bits(out_path, enc.codeword);
    write_bits(parity_path, z);

    out << "n=" << x.size() << " rate_bits=" << enc.rate_bits << " m=" << z.size() << '\n';
    if (verbose) {
        out << "interval=[" << enc.final_interval.low().to_decimal() << ", "
            << enc.final_interval.high().to_decimal() << ")\n";
        out << "codeword=" << enc.codeword.to_string() << '\n';
        out << "parity=" << z.to_string() << '\n';
    }
    return kOk;
}

int cmd_decode(const std::string& codeword_path, const std::string& side_path,
               const std::optional<std::string>& parity_path, const CodecFlags& flags, std::size_t max_paths,
               const std::string& metric, double epsilon, const std::string& out_path, std::ostream& out) {
    const BitSeq codeword = read_bits(codeword_path, true);
    const BitSeq y = read_bits(side_path, false);
    const CodeSpec spec = flags.code_spec();
    BitSeq z;
    if (parity_path) z = read_bits(*parity_path, true);
    if (z.size() != spec.parity_length()) throw MalformedInput("parity length does not match the selected code");

    DecoderParams params{flags.codec(y.size()), max_paths, parse_metric(metric), epsilon, spec};
    params.validate();
    const DecodeResult r = decode(codeword, y, z, params);
    write_bits(out_path, r.bits);
    out << "verified=" << (r.verified ? "true" : "false") << " rank=" << r.rank
        << " candidates=" << r.stats.candidates_final << '\n';
    return r.verified ? kOk : kVerificationFailed;
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::invalid_argument("cannot write " + path);
    f << text;
}

RunConfig load_with_seed(const std::string& config_path, const std::optional<std::uint64_t>& seed) {
    RunConfig rc = load_run_config(config_path);
    if (seed) rc.sweep.base_seed = *seed;
    return rc;
}

int cmd_sweep(const std::string& config_path, const std::optional<std::uint64_t>& seed,
              const std::string& out_override, bool serial, std::ostream& out) {
    const RunConfig rc = load_with_seed(config_path, seed);
    const auto rows = serial ? run_sweep_serial(rc.sweep) : run_sweep(rc.sweep);
    std::ostringstream csv;
    write_sweep_csv(csv, rows);
    emit(out_override.empty() ? rc.out : out_override, csv.str(), out);
    return kOk;
}

int cmd_tail(const std::string& config_path, const std::optional<std::uint64_t>& seed,
             const std::string& out_override, bool serial, std::ostream& out) {
    const RunConfig rc = load_with_seed(config_path, seed);
    const auto rows = tail_proportion_report(rc.sweep, rc.t_grid, !serial);
    std::ostringstream csv;
    write_tail_csv(csv, rows);
    emit(out_override.empty() ? rc.out : out_override, csv.str(), out);
    return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Distributed arithmetic coding with linear-code path verification"};
    app.require_subcommand(1);

    CodecFlags enc_flags;
    std::string enc_input, enc_out, enc_parity;
    bool verbose = false;
    CLI::App* enc = app.add_subcommand("encode", "Encode a bit file; writes the codeword and parity bits");
    enc->add_option("input", enc_input, "Source bits ('0'/'1' text)")->required();
    enc_flags.attach(*enc);
    enc->add_option("--out", enc_out, "Codeword output file")->required();
    enc->add_option("--parity-out", enc_parity, "Parity output file (default: <out>.parity)");
    enc->add_flag("--verbose", verbose, "Print the final interval");

    CodecFlags dec_flags;
    std::string dec_codeword, dec_side, dec_out, metric = "mdac";
    std::optional<std::string> dec_parity;
    std::size_t max_paths = 2048;
    double epsilon = 0.0;
    CLI::App* dec = app.add_subcommand("decode", "Decode a codeword with side information and parity bits");
    dec->add_option("--codeword", dec_codeword, "Codeword file")->required();
    dec->add_option("--side", dec_side, "Side information file")->required();
    dec->add_option("--parity", dec_parity, "Parity file (omit for --code none)");
    dec_flags.attach(*dec);
    dec->add_option("--M", max_paths, "Maximum number of candidate paths");
    dec->add_option("--metric", metric, "Path metric")->check(CLI::IsMember({"dac", "mdac"}));
    dec->add_option("--epsilon", epsilon, "Crossover probability between source and side information");
    dec->add_option("--out", dec_out, "Decoded bits output file")->required();

    std::string sweep_config, sweep_out;
    bool sweep_serial = false;
    std::optional<std::uint64_t> sweep_seed;
    CLI::App* sweep = app.add_subcommand("sweep", "Run a BER sweep described by a JSON config; emits CSV");
    sweep->add_option("config", sweep_config, "JSON config file")->required();
    sweep->add_option("--out", sweep_out, "CSV output (overrides the config; '-' for stdout)");
    sweep->add_option("--seed", sweep_seed, "Override base_seed");
    sweep->add_flag("--serial", sweep_serial, "Use the single-threaded reference harness");

    std::string tail_config, tail_out;
    bool tail_serial = false;
    std::optional<std::uint64_t> tail_seed;
    CLI::App* tail = app.add_subcommand("tail", "Report the latter-half error proportion over the config's t_grid");
    tail->add_option("config", tail_config, "JSON config file")->required();
    tail->add_option("--out", tail_out, "CSV output (overrides the config; '-' for stdout)");
    tail->add_option("--seed", tail_seed, "Override base_seed");
    tail->add_flag("--serial", tail_serial, "Use the single-threaded reference harness");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kConfigError;
    }

    try {
        if (*enc) return cmd_encode(enc_input, enc_flags, enc_out, enc_parity, verbose, out);
        if (*dec)
            return cmd_decode(dec_codeword, dec_side, dec_parity, dec_flags, max_paths, metric, epsilon, dec_out, out);
        if (*sweep) return cmd_sweep(sweep_config, sweep_seed, sweep_out, sweep_serial, out);
        if (*tail) return cmd_tail(tail_config, tail_seed, tail_out, tail_serial, out);
    } catch (const MalformedInput& e) {
        err << "error: " << e.what() << '\n';
        return kMalformedInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kConfigError;
    }
    return kConfigError;
}

}  // namespace dalc::cli
