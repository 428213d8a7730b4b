#include "circadian/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace circadian {

namespace {

using nlohmann::json;

std::array<double, 5> parse_init_string(const std::string& s) {
    std::array<double, 5> out{};
    std::vector<double> vals;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t pos = 0;
            vals.push_back(std::stod(tok, &pos));
            if (pos != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw UsageError("bad --init value '" + tok + "'");
        }
    }
    if (vals.size() == 1) {
        out.fill(vals[0]);  // broadcast a scalar to all five states
    } else if (vals.size() == 5) {
        std::copy(vals.begin(), vals.end(), out.begin());
    } else {
        throw UsageError("--init takes one value or five comma-separated "
                         "values, got " + std::to_string(vals.size()));
    }
    return out;
}

void apply_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw UsageError("config file " + path + ": " + e.what());
    }
    if (!j.is_object())
        throw UsageError("config file must contain a single flat object");

    auto num = [&](const json& v, const std::string& key) {
        if (!v.is_number())
            throw UsageError("config key '" + key + "' must be a number");
        return v.get<double>();
    };

    for (const auto& [key, value] : j.items()) {
        auto& p = cfg.params;
        if (key == "vs") p.vs = num(value, key);
        else if (key == "vm") p.vm = num(value, key);
        else if (key == "km") p.km = num(value, key);
        else if (key == "ks") p.ks = num(value, key);
        else if (key == "vd") p.vd = num(value, key);
        else if (key == "kd") p.kd = num(value, key);
        else if (key == "k1") p.k1 = num(value, key);
        else if (key == "k2") p.k2 = num(value, key);
        else if (key == "V1") p.V1 = num(value, key);
        else if (key == "V2") p.V2 = num(value, key);
        else if (key == "V3") p.V3 = num(value, key);
        else if (key == "V4") p.V4 = num(value, key);
        else if (key == "K1") p.K1 = num(value, key);
        else if (key == "K2") p.K2 = num(value, key);
        else if (key == "K3") p.K3 = num(value, key);
        else if (key == "K4") p.K4 = num(value, key);
        else if (key == "KI") p.KI = num(value, key);
        else if (key == "n") {
            if (!value.is_number_integer())
                throw UsageError("config key 'n' must be an integer");
            p.n = value.get<int>();
        }
        else if (key == "mbar") cfg.mbar = num(value, key);
        else if (key == "h") cfg.h = num(value, key);
        else if (key == "tol") cfg.tol = num(value, key);
        else if (key == "t_end") cfg.t_end = num(value, key);
        else if (key == "delay") cfg.delay = num(value, key);
        else if (key == "transient_cut") cfg.transient_cut = num(value, key);
        else if (key == "u0") cfg.u0 = num(value, key);
        else if (key == "max_iter") cfg.max_iter = value.get<std::size_t>();
        else if (key == "stride") cfg.stride = value.get<std::size_t>();
        else if (key == "seeds") {
            if (!value.is_array())
                throw UsageError("config key 'seeds' must be an array");
            cfg.seeds = value.get<std::vector<double>>();
        }
        else if (key == "init") {
            if (value.is_number()) {
                cfg.init.fill(value.get<double>());
            } else if (value.is_array() && value.size() == 5) {
                for (std::size_t i = 0; i < 5; ++i)
                    cfg.init[i] = num(value[i], key);
            } else {
                throw UsageError("config key 'init' must be a number or an "
                                 "array of five numbers");
            }
        }
        else
            throw UsageError("unknown config key '" + key + "'");
    }
}

}  // namespace

RunConfig parse_config(const std::optional<std::string>& file,
                       const ConfigOverrides& o) {
    RunConfig cfg;  // table defaults
    if (file) apply_file(cfg, *file);
    if (o.vs) cfg.params.vs = *o.vs;
    if (o.h) cfg.h = *o.h;
    if (o.tol) cfg.tol = *o.tol;
    if (o.t_end) cfg.t_end = *o.t_end;
    if (o.delay) cfg.delay = *o.delay;
    if (o.transient_cut) cfg.transient_cut = *o.transient_cut;
    if (o.u0) cfg.u0 = *o.u0;
    if (o.max_iter) cfg.max_iter = *o.max_iter;
    if (o.stride) cfg.stride = *o.stride;
    if (o.init) cfg.init = parse_init_string(*o.init);
    cfg.params.validate();
    return cfg;
}

std::string config_echo(const RunConfig& cfg) {
    const auto& p = cfg.params;
    json j;
    j["vs"] = p.vs;
    j["vm"] = p.vm;
    j["km"] = p.km;
    j["ks"] = p.ks;
    j["vd"] = p.vd;
    j["kd"] = p.kd;
    j["k1"] = p.k1;
    j["k2"] = p.k2;
    j["V1"] = p.V1;
    j["V2"] = p.V2;
    j["V3"] = p.V3;
    j["V4"] = p.V4;
    j["K1"] = p.K1;
    j["K2"] = p.K2;
    j["K3"] = p.K3;
    j["K4"] = p.K4;
    j["KI"] = p.KI;
    j["n"] = p.n;
    j["mbar"] = cfg.mbar;
    j["h"] = cfg.h;
    j["tol"] = cfg.tol;
    j["t_end"] = cfg.t_end;
    j["delay"] = cfg.delay;
    j["transient_cut"] = cfg.transient_cut;
    j["u0"] = cfg.u0;
    j["max_iter"] = cfg.max_iter;
    j["stride"] = cfg.stride;
    j["seeds"] = cfg.seeds;
    j["init"] = cfg.init;
    return j.dump(2);
}

}  // namespace circadian
