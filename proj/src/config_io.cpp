// SPDX-License-Identifier: Apache-2.0

#include "wppas/config_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace wppas {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_number(const std::string& key, const std::string& value, int line) {
    try {
        std::size_t used = 0;
        const double v = std::stod(value, &used);
        if (used != value.size())
            throw ConfigError("trailing characters after number for key '" + key + "'",
                              key, line);
        return v;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        throw ConfigError("cannot parse value '" + value + "' for key '" + key + "'",
                          key, line);
    }
}

int parse_int(const std::string& key, const std::string& value, int line) {
    const double v = parse_number(key, value, line);
    const double r = std::nearbyint(v);
    if (std::fabs(v - r) > 0.0 || r < -2147483648.0 || r > 2147483647.0)
        throw ConfigError("key '" + key + "' expects an integer, got '" + value + "'",
                          key, line);
    return static_cast<int>(r);
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

using Setter = std::function<void(SystemConfig&, const std::string&, int)>;

const std::map<std::string, Setter>& setters() {
    static const std::map<std::string, Setter> m = {
        {"fc", [](SystemConfig& c, const std::string& v, int ln) { c.fc = parse_number("fc", v, ln); }},
        {"n_eff", [](SystemConfig& c, const std::string& v, int ln) { c.n_eff = parse_number("n_eff", v, ln); }},
        {"alpha", [](SystemConfig& c, const std::string& v, int ln) { c.alpha = parse_number("alpha", v, ln); }},
        {"h", [](SystemConfig& c, const std::string& v, int ln) { c.h = parse_number("h", v, ln); }},
        {"L", [](SystemConfig& c, const std::string& v, int ln) { c.L = parse_number("L", v, ln); }},
        {"Dx", [](SystemConfig& c, const std::string& v, int ln) { c.Dx = parse_number("Dx", v, ln); }},
        {"Dy", [](SystemConfig& c, const std::string& v, int ln) { c.Dy = parse_number("Dy", v, ln); }},
        {"tau", [](SystemConfig& c, const std::string& v, int ln) { c.tau = parse_number("tau", v, ln); }},
        {"eta", [](SystemConfig& c, const std::string& v, int ln) { c.eta = parse_number("eta", v, ln); }},
        {"Ps_dBm", [](SystemConfig& c, const std::string& v, int ln) { c.Ps_dBm = parse_number("Ps_dBm", v, ln); }},
        {"sigma2_dBm", [](SystemConfig& c, const std::string& v, int ln) { c.sigma2_dBm = parse_number("sigma2_dBm", v, ln); }},
        {"R", [](SystemConfig& c, const std::string& v, int ln) { c.R = parse_number("R", v, ln); }},
        {"T", [](SystemConfig& c, const std::string& v, int ln) { c.T = parse_number("T", v, ln); }},
        {"N1", [](SystemConfig& c, const std::string& v, int ln) { c.N1 = parse_int("N1", v, ln); }},
        {"N2", [](SystemConfig& c, const std::string& v, int ln) { c.N2 = parse_int("N2", v, ln); }},
        {"K", [](SystemConfig& c, const std::string& v, int ln) { c.K = parse_int("K", v, ln); }},
    };
    return m;
}

}  // namespace

SystemConfig parse_config_text(const std::string& text) {
    SystemConfig cfg;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto hash = raw.find('#');
        std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("expected 'key = value'", "", line_no);
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const auto it = setters().find(key);
        if (it == setters().end())
            throw ConfigError("unknown key '" + key + "'", key, line_no);
        if (value.empty())
            throw ConfigError("empty value for key '" + key + "'", key, line_no);
        it->second(cfg, value, line_no);
    }
    try {
        validate_config(cfg);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    return cfg;
}

SystemConfig parse_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

std::string serialize_config(const SystemConfig& cfg) {
    std::ostringstream out;
    out << "fc = " << fmt17(cfg.fc) << "\n"
        << "n_eff = " << fmt17(cfg.n_eff) << "\n"
        << "alpha = " << fmt17(cfg.alpha) << "\n"
        << "h = " << fmt17(cfg.h) << "\n"
        << "L = " << fmt17(cfg.L) << "\n"
        << "Dx = " << fmt17(cfg.Dx) << "\n"
        << "Dy = " << fmt17(cfg.Dy) << "\n"
        << "tau = " << fmt17(cfg.tau) << "\n"
        << "eta = " << fmt17(cfg.eta) << "\n"
        << "Ps_dBm = " << fmt17(cfg.Ps_dBm) << "\n"
        << "sigma2_dBm = " << fmt17(cfg.sigma2_dBm) << "\n"
        << "R = " << fmt17(cfg.R) << "\n"
        << "T = " << fmt17(cfg.T) << "\n"
        << "N1 = " << cfg.N1 << "\n"
        << "N2 = " << cfg.N2 << "\n"
        << "K = " << cfg.K << "\n";
    return out.str();
}

}  // namespace wppas
