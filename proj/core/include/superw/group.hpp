#pragma once

#include "superw/rational.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace superw {

/// Z2 parity of a homogeneous element.
enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

inline Parity operator+(Parity a, Parity b) {
    return static_cast<Parity>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}

/// (-1)^(ab) for parities a, b.
inline int parity_sign(Parity a, Parity b) {
    return (a == Parity::Odd && b == Parity::Odd) ? -1 : 1;
}

inline const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

/// Which coset of the index group a degree lives in.
enum class Coset : std::uint8_t { Gamma = 0, GammaPlusS = 1 };

/// Case A: s in Gamma (the two cosets coincide).
/// Case B: s not in Gamma, 2s in Gamma (genuinely shifted odd sector).
enum class GroupCase : std::uint8_t { A, B };

/// A degree in Zs = Gamma u (s + Gamma). The coset tag is derived data: in
/// case A it is always Gamma; equality and ordering use the value only.
struct Degree {
    Rational value;
    Coset coset = Coset::Gamma;

    friend bool operator==(const Degree& a, const Degree& b) { return a.value == b.value; }
    friend bool operator!=(const Degree& a, const Degree& b) { return a.value != b.value; }
    friend bool operator<(const Degree& a, const Degree& b) { return a.value < b.value; }
};

/// The index group: a finitely generated nontrivial subgroup Gamma of Q
/// together with the shift s, 2s in Gamma. A finitely generated subgroup of Q
/// is cyclic, so membership tests and the minimal positive element are exact
/// lattice arithmetic over the generators' common denominator.
///
/// Restriction: the index group is modeled inside Q, not R. Arbitrary real
/// subgroups are not finitely representable, and any finite computation over
/// finitely many indices embeds in a rational model; non-discrete subgroups
/// (with no minimal positive element) are out of scope.
class Group {
public:
    enum class Membership { Gamma, Shifted, Outside };

    /// Throws std::invalid_argument when Gamma is trivial or 2s is not in
    /// Gamma (outside the algebra's hypotheses).
    Group(std::vector<Rational> gamma_generators, Rational s);

    const std::vector<Rational>& generators() const { return generators_; }
    const Rational& shift() const { return s_; }

    /// Minimal positive element of Gamma (exists in the rational model).
    const Rational& epsilon() const { return eps_; }

    GroupCase group_case() const { return case_; }

    Membership member(const Rational& v) const;
    bool contains(const Rational& v) const { return member(v) == Membership::Gamma; }

    /// Classifies v as a degree in Zs; throws std::domain_error when v is
    /// outside Gamma u (s+Gamma). In case A the coset normalizes to Gamma.
    Degree degree_of(const Rational& v) const;

    /// Two groups are the same lattice-with-shift.
    friend bool operator==(const Group& a, const Group& b) {
        return a.eps_ == b.eps_ && a.s_ == b.s_;
    }

    /// Canonical one-line rendering used for config digests.
    std::string describe() const;

private:
    std::vector<Rational> generators_;
    Rational s_;
    Rational eps_;
    GroupCase case_;
};

using GroupPtr = std::shared_ptr<const Group>;

}  // namespace superw
