#include "superw/report.hpp"

#include <algorithm>

#include <json.hpp>

namespace superw {

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string digest_hex(std::string_view data) {
    static const char* hex = "0123456789abcdef";
    std::uint64_t h = fnv1a64(data);
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

void CheckReport::add_counterexample(std::string input, std::string residual) {
    counterexamples.push_back({std::move(input), std::move(residual)});
}

void CheckReport::finalize() {
    std::sort(counterexamples.begin(), counterexamples.end());
    counterexamples.erase(std::unique(counterexamples.begin(), counterexamples.end()),
                          counterexamples.end());
    pass = counterexamples.empty();
}

std::string CheckReport::text() const {
    std::string out;
    out += "check: " + check_name + "\n";
    out += "config: " + config_digest + "\n";
    if (!window.empty()) out += "window: " + window + "\n";
    for (const auto& [k, v] : dimensions) out += k + ": " + std::to_string(v) + "\n";
    for (const auto& ce : counterexamples) {
        out += "counterexample: " + ce.input + "\n";
        out += "  residual: " + ce.residual + "\n";
    }
    out += std::string("result: ") + (pass ? "PASS" : "FAIL") + "\n";
    return out;
}

std::string CheckReport::structured() const {
    nlohmann::ordered_json j;
    j["check"] = check_name;
    j["config"] = config_digest;
    j["window"] = window;
    j["pass"] = pass;
    auto& ces = j["counterexamples"] = nlohmann::ordered_json::array();
    for (const auto& ce : counterexamples) ces.push_back({{"input", ce.input}, {"residual", ce.residual}});
    auto& dims = j["dimensions"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : dimensions) dims[k] = v;
    return j.dump(2) + "\n";
}

}  // namespace superw
