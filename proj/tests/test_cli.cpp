#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

#include "../tools/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run dalc_run(std::initializer_list<std::string> args) {
    std::vector<std::string> storage{"dalc"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const std::string& s : storage) argv.push_back(s.c_str());
    std::ostringstream out, err;
    const int code = dalc::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string tmp(const std::string& name) {
    const fs::path dir(DALC_TEST_TMPDIR);
    fs::create_directories(dir);
    return (dir / name).string();
}

void write_file(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// alpha with 0.5^alpha = 0.75
const std::string kFig2Alpha = "0.41503749927884382";

}  // namespace

TEST_CASE("encode with final interval") {
    const std::string in = tmp("fig2.txt"), cw = tmp("fig2.cw");
    write_file(in, "011\n");
    const Run r = dalc_run({"encode", in, "--alpha", kFig2Alpha, "--out", cw, "--verbose"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "n=3 rate_bits=3 m=0\n"
          "interval=[0.328125, 0.75)\n"
          "codeword=011\n"
          "parity=\n");
    CHECK(read_file(cw) == "011\n");
    CHECK(read_file(cw + ".parity") == "\n");
}

TEST_CASE("encode input errors") {
    const std::string empty = tmp("empty.txt"), bad = tmp("bad.txt"), out = tmp("x.cw");
    write_file(empty, " \n");
    write_file(bad, "01a1\n");
    CHECK(dalc_run({"encode", empty, "--out", out}).code == 2);
    CHECK(dalc_run({"encode", bad, "--out", out}).code == 2);
    CHECK(dalc_run({"encode", tmp("missing.txt"), "--out", out}).code == 2);

    const std::string ok = tmp("ok.txt");
    write_file(ok, "0101");
    CHECK(dalc_run({"encode", ok, "--out", out, "--alpha", "1.5"}).code == 1);
    CHECK(dalc_run({"encode", ok, "--out", out, "--n", "5"}).code == 1);
    CHECK(dalc_run({"encode", ok, "--out", out, "--code", "turbo"}).code == 1);
    CHECK(dalc_run({"encode", ok, "--out", out, "--code", "crc16", "--groups", "4"}).code == 1);
    CHECK(dalc_run({"encode", ok}).code == 1);
    CHECK(dalc_run({}).code == 1);
}

TEST_CASE("encode writes crc16 parity") {
    const std::string in = tmp("crc.txt"), cw = tmp("crc.cw"), par = tmp("crc.par");
    write_file(in, "1 0 1 0\n");
    const Run r = dalc_run({"encode", in, "--code", "crc16", "--out", cw, "--parity-out", par});
    CHECK(r.code == 0);
    CHECK(r.out == "n=4 rate_bits=5 m=16\n");
    CHECK(read_file(par) == "0010000000001101\n");
    CHECK(read_file(cw) == "10100\n");  // [0.625, 0.6875)
}

TEST_CASE("decode the three-symbol overlapped example") {
    const std::string cw = tmp("fig3.cw"), side = tmp("fig3.y"), par = tmp("fig3.z"), out = tmp("fig3.out");
    write_file(cw, "01101\n");
    write_file(side, "011\n");
    write_file(par, "0\n");
    const Run r = dalc_run({"decode", "--codeword", cw, "--side", side, "--parity", par, "--alpha", kFig2Alpha,
                            "--code", "ldpc16", "--groups", "1", "--epsilon", "0.1", "--out", out});
    CHECK(r.code == 0);
    CHECK(r.out == "verified=true rank=1 candidates=6\n");
    CHECK(read_file(out) == "011\n");

    write_file(side, "010\n");
    const Run second = dalc_run({"decode", "--codeword", cw, "--side", side, "--parity", par, "--alpha", kFig2Alpha,
                                 "--code", "ldpc16", "--groups", "1", "--epsilon", "0.1", "--out", out});
    CHECK(second.code == 0);
    CHECK(second.out == "verified=true rank=2 candidates=6\n");
    CHECK(read_file(out) == "000\n");

    write_file(side, "011\n");
    write_file(par, "1\n");
    const Run failed = dalc_run({"decode", "--codeword", cw, "--side", side, "--parity", par, "--alpha", kFig2Alpha,
                                 "--code", "ldpc16", "--groups", "1", "--epsilon", "0.1", "--M", "1", "--out", out});
    CHECK(failed.code == 3);
    CHECK(failed.out == "verified=false rank=1 candidates=1\n");
    CHECK(read_file(out) == "011\n");
}

TEST_CASE("classic roundtrip through files") {
    const std::string in = tmp("rt.txt"), cw = tmp("rt.cw"), out = tmp("rt.out");
    const std::string bits = "0110100111010001011101000011110101010011100011101\n";
    write_file(in, bits);
    for (const char* mode : {"exact", "fixed64"}) {
        REQUIRE(dalc_run({"encode", in, "--p0", "0.4", "--mode", mode, "--code", "bch", "--out", cw}).code == 0);
        const Run r = dalc_run({"decode", "--codeword", cw, "--side", in, "--parity", cw + ".parity", "--p0", "0.4",
                                "--mode", mode, "--code", "bch", "--epsilon", "0.05", "--out", out});
        CHECK(r.code == 0);
        CHECK(read_file(out) == bits);
    }
}

TEST_CASE("decode input errors") {
    const std::string cw = tmp("e.cw"), side = tmp("e.y"), par = tmp("e.z"), out = tmp("e.out");
    write_file(cw, "01101\n");
    write_file(side, "011\n");
    write_file(par, "0010\n");
    CHECK(dalc_run({"decode", "--codeword", cw, "--side", side, "--parity", par, "--code", "crc16", "--out", out})
              .code == 2);
    CHECK(dalc_run({"decode", "--codeword", cw, "--side", side, "--code", "crc16", "--out", out}).code == 2);
    write_file(side, "");
    CHECK(dalc_run({"decode", "--codeword", cw, "--side", side, "--out", out}).code == 2);
    write_file(side, "011");
    CHECK(dalc_run({"decode", "--codeword", cw, "--side", side, "--metric", "ccs", "--out", out}).code == 1);
    CHECK(dalc_run({"decode", "--codeword", cw, "--side", side, "--M", "0", "--out", out}).code == 1);
    CHECK(dalc_run({"decode", "--codeword", cw, "--side", side, "--epsilon", "0.7", "--out", out}).code == 1);
}

TEST_CASE("sweep") {
    const std::string cfg = tmp("sweep.json"), csv = tmp("sweep.csv");
    write_file(cfg, R"({"n": 64, "alpha": 0.95, "M": 64, "epsilon_grid": [0.0], "trials": 1, "codes": ["none", "crc16"]})");
    const Run r = dalc_run({"sweep", cfg, "--out", "-"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string header, row1, row2, extra;
    std::getline(lines, header);
    std::getline(lines, row1);
    std::getline(lines, row2);
    CHECK(header == "epsilon,h_xy,method,ber,verified_fraction,tail_error_proportion,rate_bits_per_symbol,trials");
    CHECK(row1.rfind("0,1,mdac,0,1,,", 0) == 0);
    CHECK(row2.rfind("0,1,dalc-crc16,0,1,,", 0) == 0);
    CHECK_FALSE(std::getline(lines, extra));

    write_file(cfg, R"({"n": 80, "alpha": 0.6, "M": 32, "epsilon_grid": [0.05, 0.1], "trials": 6, "out": ")" + csv +
                        R"("})");
    REQUIRE(dalc_run({"sweep", cfg}).code == 0);
    const std::string first = read_file(csv);
    REQUIRE(dalc_run({"sweep", cfg, "--serial"}).code == 0);
    CHECK(read_file(csv) == first);
    CHECK(dalc_run({"sweep", cfg, "--out", "-"}).out == first);
    CHECK(dalc_run({"sweep", cfg, "--out", "-", "--seed", "99"}).out != first);

    write_file(cfg, R"({"trials": 0})");
    CHECK(dalc_run({"sweep", cfg}).code == 1);
    write_file(cfg, R"({"n": 10, "colour": 1})");
    CHECK(dalc_run({"sweep", cfg}).code == 1);
    CHECK(dalc_run({"sweep", tmp("nope.json")}).code == 1);
}

TEST_CASE("tail") {
    const std::string cfg = tmp("tail.json");
    write_file(cfg, R"({"n": 50, "alpha": 1.0, "M": 4, "epsilon_grid": [0.05], "trials": 2, "t_grid": [0, 3]})");
    const Run r = dalc_run({"tail", cfg, "--out", "-"});
    CHECK(r.code == 0);
    CHECK(r.out == "t,with_crc,without_crc\n0,,\n3,,\n");
}
