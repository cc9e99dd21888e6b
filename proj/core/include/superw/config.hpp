#pragma once

#include "superw/group.hpp"

#include <cstdint>
#include <string>

namespace superw {

/// Algebra configuration file: the group, the default window radius and the
/// seed that fixes all randomized generation. JSON on disk:
///   { "gamma_generators": ["1"], "s": "1/2",
///     "default_window_radius": 4, "seed": 42 }
struct AlgebraConfig {
    GroupPtr group;
    int default_window_radius = 4;
    std::uint64_t seed = 0;

    static AlgebraConfig from_json_text(const std::string& text);
    static AlgebraConfig load(const std::string& path);

    /// Canonical one-line rendering; its hash is the report config digest.
    std::string canonical() const;
    std::string digest() const;
};

/// r-matrix input file: { "group": {"gamma_generators": [...], "s": "..."},
/// "r": "<tensor expression>" }. The expression is returned unparsed so the
/// caller can bind it to the right algebra.
struct RMatrixFile {
    GroupPtr group;
    std::string r_text;

    static RMatrixFile load(const std::string& path);
};

}  // namespace superw
