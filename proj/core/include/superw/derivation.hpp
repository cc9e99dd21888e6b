#pragma once

#include "superw/tensor.hpp"
#include "superw/window.hpp"

#include <map>
#include <utility>
#include <vector>

namespace superw {

/// A degree-t, parity-homogeneous partial linear map L -> L (x) L given by
/// its values on the basis symbols of a finite window. Invariants enforced on
/// assignment: deg(value[b]) = index(b) + t and parity(value[b]) = [b] + [d].
class HomDerivation {
public:
    using ValueMap = std::map<BasisSymbol, TensorElement, CanonicalLess>;

    HomDerivation(GroupPtr group, DegreeWindow window, Degree degree, Parity parity);

    const GroupPtr& group() const { return group_; }
    const DegreeWindow& window() const { return window_; }
    const Degree& degree() const { return degree_; }
    Parity parity() const { return parity_; }
    const ValueMap& values() const { return values_; }

    bool in_domain(const BasisSymbol& b) const;

    /// Zero when unset; throws std::domain_error when b is outside the window.
    const TensorElement& value(const BasisSymbol& b) const;

    /// Throws std::invalid_argument when v violates the degree or parity
    /// invariant for source b.
    void set_value(const BasisSymbol& b, TensorElement v);

    void subtract(const HomDerivation& other);

private:
    GroupPtr group_;
    DegreeWindow window_;
    Degree degree_;
    Parity parity_;
    ValueMap values_;
};

/// Cocycle defect of the pair (x, y):
///   d([x,y]) - (-1)^([d][x]) x o d(y) + (-1)^([y]([d]+[x])) y o d(x).
/// Zero exactly when the pair satisfies the derivation rule. Throws when x, y
/// or the symbol of [x,y] falls outside d's window.
TensorElement derivation_defect(const Algebra& algebra, const HomDerivation& d,
                                const BasisSymbol& x, const BasisSymbol& y);

/// Inner derivation u_Inn(b) = (-1)^([u][b]) b o u, materialized on every
/// basis symbol of the window. u must be parity-homogeneous of the given
/// parity and Zs-homogeneous; its degree becomes the derivation degree.
HomDerivation inner(const Algebra& algebra, const DegreeWindow& window, const TensorElement& u,
                    Parity parity);

/// For degree t != 0: the witness u = -d(L_0)/t, so that d = inner(u) holds on
/// the window interior whenever d is a genuine cocycle. Throws for t = 0.
TensorElement extract_witness(const Algebra& algebra, const HomDerivation& d);

struct NormalizeResult {
    HomDerivation reduced;
    std::vector<TensorElement> witnesses;
    long long steps = 0;
    long long mirror_steps = 0;
    long long initial_length = 0;  // sum over beta-classes of chain spans
};

/// Length-reduction of a degree-0 derivation: repeatedly subtracts inner
/// witnesses read off the minimal-degree chain entry of d(L_eps) in the given
/// tensor sector until that sector vanishes. When the primal denominator
/// degenerates the reduction routes through d(L_-eps) from the top instead;
/// if both directions degenerate, or no progress is made within the step
/// guard, the procedure aborts with std::domain_error / std::runtime_error.
///
/// Preconditions: d.degree == 0 and d(L_0) = 0.
NormalizeResult normalize_d0(const Algebra& algebra, const HomDerivation& d,
                             std::pair<Family, Family> sector);

}  // namespace superw
