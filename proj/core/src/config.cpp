#include "tmk/config.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tmk/errors.hpp"

namespace tmk {

int Config::effective_t() const {
    return t >= 0 ? t : ProblemSpec::of(problem).t;
}

std::filesystem::path Config::effective_cache_dir() const {
    if (!cache_dir.empty()) return cache_dir;
    if (const char* env = std::getenv("TMK_CACHE_DIR"); env && *env) return env;
    return ".tmk-cache";
}

void Config::validate() const {
    const auto positive = [](int v, const char* name) {
        if (v <= 0) throw InputError(std::string("config: ") + name + " must be positive");
    };
    positive(r, "r");
    positive(n_max, "n_max");
    positive(exact_cap, "exact_cap");
    if (b_max < 0) throw InputError("config: b_max must be non-negative");
    if (b_max > n_max) throw InputError("config: b_max cannot exceed n_max");
    if (seeds.empty()) throw InputError("config: seeds must not be empty");
}

namespace {

template <class T>
void take(const nlohmann::json& j, const char* key, T& out) {
    if (!j.contains(key)) return;
    try {
        out = j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("config: bad value for '") + key + "': " + e.what());
    }
}

}  // namespace

Config config_from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("config: ") + e.what());
    }
    if (!j.is_object()) throw InputError("config: top level must be an object");
    static const char* known[] = {"problem", "r",         "t",          "b_max",     "n_max",
                                  "seeds",   "exact_cap", "cache_dir",  "report_dir", "generator"};
    for (const auto& item : j.items()) {
        if (std::find(std::begin(known), std::end(known), item.key()) == std::end(known)) {
            throw InputError("config: unknown key '" + item.key() + "'");
        }
    }
    Config c;
    std::string problem = to_string(c.problem);
    take(j, "problem", problem);
    c.problem = parse_problem(problem);
    c.generator.problem = c.problem;
    take(j, "r", c.r);
    take(j, "t", c.t);
    take(j, "b_max", c.b_max);
    take(j, "n_max", c.n_max);
    take(j, "seeds", c.seeds);
    take(j, "exact_cap", c.exact_cap);
    take(j, "cache_dir", c.cache_dir);
    take(j, "report_dir", c.report_dir);
    if (j.contains("generator")) {
        const auto& gj = j.at("generator");
        if (!gj.is_object()) throw InputError("config: generator must be an object");
        std::string family = to_string(c.generator.family);
        take(gj, "family", family);
        c.generator.family = parse_family(family);
        take(gj, "n", c.generator.n);
        take(gj, "k", c.generator.k);
        take(gj, "d", c.generator.d);
        take(gj, "attach", c.generator.attach);
    }
    c.validate();
    return c;
}

Config load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open config " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return config_from_json_text(ss.str());
}

std::string config_to_json(const Config& c) {
    nlohmann::ordered_json j;
    j["problem"] = to_string(c.problem);
    j["r"] = c.r;
    j["t"] = c.effective_t();
    j["b_max"] = c.b_max;
    j["n_max"] = c.n_max;
    j["seeds"] = c.seeds;
    j["exact_cap"] = c.exact_cap;
    j["cache_dir"] = c.cache_dir;
    j["report_dir"] = c.report_dir;
    j["generator"] = {{"family", to_string(c.generator.family)},
                      {"n", c.generator.n},
                      {"k", c.generator.k},
                      {"d", c.generator.d},
                      {"attach", c.generator.attach}};
    return j.dump(2);
}

}  // namespace tmk
