#pragma once

#include "superw/parse.hpp"
#include "superw/rng.hpp"
#include "superw/window.hpp"

#include <vector>

namespace fixtures {

using namespace superw;

inline Algebra case_a() { return Algebra(Group({Rational(1)}, Rational(0))); }
inline Algebra case_b() { return Algebra(Group({Rational(1)}, Rational(1, 2))); }

inline Rational small_coeff(Rng& rng) {
    long long num = rng.range(-6, 6);
    if (num == 0) num = 1;
    long long den = rng.range(1, 3);
    return Rational(num, den);
}

inline BasisSymbol random_symbol(const Algebra& alg, const DegreeWindow& window, Rng& rng) {
    auto symbols = window.symbols(alg);
    return symbols[rng.below(symbols.size())];
}

inline AlgElement random_element(const Algebra& alg, const DegreeWindow& window, Rng& rng,
                                 int max_terms = 4) {
    AlgElement out;
    auto symbols = window.symbols(alg);
    int n = static_cast<int>(rng.range(1, max_terms));
    for (int i = 0; i < n; ++i)
        out.add_term(alg.group_ptr(), symbols[rng.below(symbols.size())], small_coeff(rng));
    return out;
}

inline TensorElement random_tensor(const Algebra& alg, const DegreeWindow& window, Rng& rng,
                                   int max_terms = 4) {
    TensorElement out;
    auto symbols = window.symbols(alg);
    int n = static_cast<int>(rng.range(1, max_terms));
    for (int i = 0; i < n; ++i)
        out.add_term(alg.group_ptr(),
                     {symbols[rng.below(symbols.size())], symbols[rng.below(symbols.size())]},
                     small_coeff(rng));
    return out;
}

/// parity-homogeneous random tensor (keeps only pairs of the requested parity)
inline TensorElement random_tensor_of_parity(const Algebra& alg, const DegreeWindow& window,
                                             Rng& rng, Parity parity, int max_terms = 4) {
    TensorElement out;
    auto symbols = window.symbols(alg);
    int wanted = static_cast<int>(rng.range(1, max_terms));
    int guard = 64 * wanted;
    while (wanted > 0 && guard-- > 0) {
        BasisSymbol a = symbols[rng.below(symbols.size())];
        BasisSymbol b = symbols[rng.below(symbols.size())];
        if (a.parity() + b.parity() != parity) continue;
        out.add_term(alg.group_ptr(), {a, b}, small_coeff(rng));
        --wanted;
    }
    return out;
}

/// Zs-homogeneous, parity-homogeneous random tensor of the given degree
inline TensorElement random_homogeneous_tensor(const Algebra& alg, const DegreeWindow& window,
                                               Rng& rng, const Rational& degree, Parity parity,
                                               int max_terms = 3) {
    std::vector<SymbolPair> pool;
    auto symbols = window.symbols(alg);
    for (const auto& a : symbols)
        for (const auto& b : symbols)
            if (a.index.value + b.index.value == degree && a.parity() + b.parity() == parity)
                pool.push_back({a, b});
    TensorElement out;
    if (pool.empty()) return out;
    int n = static_cast<int>(rng.range(1, max_terms));
    for (int i = 0; i < n; ++i)
        out.add_term(alg.group_ptr(), pool[rng.below(pool.size())], small_coeff(rng));
    return out;
}

}  // namespace fixtures
