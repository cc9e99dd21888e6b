#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace superw {

/// FNV-1a, used for config digests in reports.
std::uint64_t fnv1a64(std::string_view data);
std::string digest_hex(std::string_view data);

/// Canonical, deterministic record of one verification run. Rendering is
/// byte-identical for identical inputs and seed: counterexamples are kept
/// sorted and dimensions live in an ordered map.
struct CheckReport {
    struct Counterexample {
        std::string input;
        std::string residual;
        friend bool operator<(const Counterexample& a, const Counterexample& b) {
            if (a.input != b.input) return a.input < b.input;
            return a.residual < b.residual;
        }
        friend bool operator==(const Counterexample& a, const Counterexample& b) {
            return a.input == b.input && a.residual == b.residual;
        }
    };

    std::string check_name;
    std::string config_digest;
    std::string window;
    bool pass = false;
    std::vector<Counterexample> counterexamples;
    std::map<std::string, long long> dimensions;

    void add_counterexample(std::string input, std::string residual);
    void finalize();  // sorts counterexamples, sets pass if untouched

    int exit_code() const { return pass ? 0 : 1; }

    std::string text() const;
    std::string structured() const;  // single-document JSON
};

}  // namespace superw
