#include "dalc/config.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace dalc {

using nlohmann::json;

std::string to_string(ArithMode mode) { return mode == ArithMode::Exact ? "exact" : "fixed64"; }

ArithMode parse_arith_mode(const std::string& name) {
    if (name == "exact") return ArithMode::Exact;
    if (name == "fixed64") return ArithMode::Fixed64;
    throw std::invalid_argument("unknown arithmetic mode: " + name);
}

RunConfig parse_run_config(const std::string& json_text) {
    static const std::set<std::string> known{"n",         "p0",    "alpha",     "t",         "M",
                                             "metric",    "codes", "epsilon_grid", "trials", "base_seed",
                                             "mode",      "out",   "t_grid"};
    RunConfig rc;
    try {
        const json j = json::parse(json_text);
        if (!j.is_object()) throw std::invalid_argument("config: top level must be an object");
        for (const auto& [key, _] : j.items())
            if (!known.contains(key)) throw std::invalid_argument("config: unknown key '" + key + "'");

        SweepConfig& s = rc.sweep;
        if (j.contains("n")) s.n = j.at("n").get<std::size_t>();
        if (j.contains("p0")) s.p0 = j.at("p0").get<double>();
        if (j.contains("alpha")) s.alpha = j.at("alpha").get<double>();
        if (j.contains("t")) s.t = j.at("t").get<std::size_t>();
        if (j.contains("M")) s.M = j.at("M").get<std::size_t>();
        if (j.contains("metric")) s.metric = parse_metric(j.at("metric").get<std::string>());
        if (j.contains("codes")) {
            s.codes.clear();
            for (const auto& c : j.at("codes")) s.codes.push_back(parse_code_kind(c.get<std::string>()));
        }
        if (j.contains("epsilon_grid")) s.epsilon_grid = j.at("epsilon_grid").get<std::vector<double>>();
        if (j.contains("trials")) s.trials = j.at("trials").get<std::size_t>();
        if (j.contains("base_seed")) s.base_seed = j.at("base_seed").get<std::uint64_t>();
        if (j.contains("mode")) s.mode = parse_arith_mode(j.at("mode").get<std::string>());
        if (j.contains("out")) rc.out = j.at("out").get<std::string>();
        if (j.contains("t_grid")) rc.t_grid = j.at("t_grid").get<std::vector<std::size_t>>();
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("config: ") + e.what());
    }
    rc.sweep.validate();
    for (std::size_t t : rc.t_grid)
        if (t > rc.sweep.n) throw std::invalid_argument("config: t_grid entries must not exceed n");
    return rc;
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_run_config(ss.str());
}

std::string serialize_run_config(const RunConfig& rc) {
    const SweepConfig& s = rc.sweep;
    json codes = json::array();
    for (CodeKind k : s.codes) codes.push_back(to_string(k));
    json j = {{"n", s.n},
              {"p0", s.p0},
              {"alpha", s.alpha},
              {"t", s.t},
              {"M", s.M},
              {"metric", to_string(s.metric)},
              {"codes", codes},
              {"epsilon_grid", s.epsilon_grid},
              {"trials", s.trials},
              {"base_seed", s.base_seed},
              {"mode", to_string(s.mode)},
              {"out", rc.out},
              {"t_grid", rc.t_grid}};
    return j.dump(2) + "\n";
}

}  // namespace dalc
