#include "superw/config.hpp"

#include "superw/report.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace superw {

namespace {

GroupPtr group_from_json(const nlohmann::json& j) {
    if (!j.contains("gamma_generators") || !j.contains("s"))
        throw std::invalid_argument("config: group needs 'gamma_generators' and 's'");
    std::vector<Rational> gens;
    for (const auto& g : j.at("gamma_generators")) gens.push_back(Rational::parse(g.get<std::string>()));
    Rational s = Rational::parse(j.at("s").get<std::string>());
    return std::make_shared<const Group>(std::move(gens), std::move(s));
}

nlohmann::json parse_json(const std::string& text, const char* what) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument(std::string(what) + ": malformed JSON");
    return j;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

AlgebraConfig AlgebraConfig::from_json_text(const std::string& text) {
    nlohmann::json j = parse_json(text, "config");
    AlgebraConfig cfg;
    cfg.group = group_from_json(j);
    if (j.contains("default_window_radius")) cfg.default_window_radius = j.at("default_window_radius").get<int>();
    if (cfg.default_window_radius < 1)
        throw std::invalid_argument("config: default_window_radius must be positive");
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    return cfg;
}

AlgebraConfig AlgebraConfig::load(const std::string& path) { return from_json_text(slurp(path)); }

std::string AlgebraConfig::canonical() const {
    return group->describe() + " radius=" + std::to_string(default_window_radius) +
           " seed=" + std::to_string(seed);
}

std::string AlgebraConfig::digest() const { return digest_hex(canonical()); }

RMatrixFile RMatrixFile::load(const std::string& path) {
    nlohmann::json j = parse_json(slurp(path), "r-matrix file");
    if (!j.contains("group") || !j.contains("r"))
        throw std::invalid_argument("r-matrix file: needs 'group' and 'r'");
    RMatrixFile f;
    f.group = group_from_json(j.at("group"));
    f.r_text = j.at("r").get<std::string>();
    return f;
}

}  // namespace superw
