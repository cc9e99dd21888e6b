#pragma once

#include "superw/algebra.hpp"

#include <string>
#include <vector>

namespace superw {

/// Finite symmetric truncation of the index set, used by every "for all x"
/// check so that reports never overstate their scope. Unshifted indices are
/// k*eps for |k| <= N; in case B the shifted coset contributes (k+1/2)*eps
/// (2s in Gamma forces the shifted coset to sit at eps/2 mod Gamma).
class DegreeWindow {
public:
    DegreeWindow(const Group& g, int radius);

    const Rational& epsilon() const { return eps_; }
    int radius() const { return radius_; }
    bool include_half() const { return include_half_; }

    /// |v| <= N*eps and v in Zs.
    bool contains(const Group& g, const Rational& v) const;
    /// |v| <= (N-2)*eps and v in Zs; the interior used by the H1 quotient.
    bool interior_contains(const Group& g, const Rational& v) const;

    /// All index values in the window, unshifted coset first, ascending.
    std::vector<Rational> indices() const;

    /// All basis symbols with index in the window, canonical order.
    std::vector<BasisSymbol> symbols(const Algebra& algebra) const;

    std::string describe() const;

private:
    Rational eps_;
    int radius_;
    bool include_half_;
};

}  // namespace superw
