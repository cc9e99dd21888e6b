#pragma once

#include "superw/group.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace superw {

/// Basis families of the algebra. The numeric values are the degree-order
/// ranks: any L beats any I beats any G beats any H, regardless of index.
enum class Family : std::uint8_t { H = 0, G = 1, I = 2, L = 3 };

inline Parity parity_of(Family f) {
    return (f == Family::L || f == Family::I) ? Parity::Even : Parity::Odd;
}

inline char family_letter(Family f) {
    switch (f) {
        case Family::L: return 'L';
        case Family::I: return 'I';
        case Family::G: return 'G';
        case Family::H: return 'H';
    }
    return '?';
}

/// One basis vector L_p, I_p, G_r or H_r.
struct BasisSymbol {
    Family family;
    Degree index;

    Parity parity() const { return parity_of(family); }
    std::string str() const {
        return std::string(1, family_letter(family)) + "(" + index.value.str() + ")";
    }

    friend bool operator==(const BasisSymbol& a, const BasisSymbol& b) {
        return a.family == b.family && a.index == b.index;
    }
    friend bool operator!=(const BasisSymbol& a, const BasisSymbol& b) { return !(a == b); }
};

/// Which total order to use when picking extremal terms.
/// FamilyMajor is the algebra's canonical order: family rank first, then index.
/// IndexMajor (index first, family rank as tie-break) is exposed for
/// experimentation only; every shipped computation uses FamilyMajor.
enum class TermOrder { FamilyMajor, IndexMajor };

/// strict less-than in the degree order
inline bool degree_order_less(const BasisSymbol& a, const BasisSymbol& b,
                              TermOrder order = TermOrder::FamilyMajor) {
    if (order == TermOrder::FamilyMajor) {
        if (a.family != b.family) return a.family < b.family;
        return a.index < b.index;
    }
    if (a.index != b.index) return a.index < b.index;
    return a.family < b.family;
}

/// Canonical iteration/render order: family-major (L, I, G, H), index
/// ascending within a family.
struct CanonicalLess {
    bool operator()(const BasisSymbol& a, const BasisSymbol& b) const {
        if (a.family != b.family) return a.family > b.family;
        return a.index < b.index;
    }
};

/// Extremum selector for leading terms.
enum class End { Highest, Lowest };

class Algebra;

/// A finite Q-linear combination of basis symbols. Immutable value type: all
/// operations return new elements. The zero element carries no group; any
/// nonzero element remembers the group it was built over, and binary
/// operations reject mixed groups.
class AlgElement {
public:
    using TermMap = std::map<BasisSymbol, Rational, CanonicalLess>;

    AlgElement() = default;

    static AlgElement single(GroupPtr group, const BasisSymbol& b, const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    const GroupPtr& group() const { return group_; }
    Rational coeff(const BasisSymbol& b) const;

    /// Parity if all terms agree, nullopt for mixed.
    std::optional<Parity> parity() const;
    /// Zs-degree if all terms agree, nullopt for mixed or zero.
    std::optional<Degree> degree() const;
    /// Component of the given Zs-degree.
    AlgElement component(const Degree& d) const;

    /// Extremal term in the chosen order. Throws std::domain_error on zero.
    std::pair<BasisSymbol, Rational> leading_term(End end,
                                                  TermOrder order = TermOrder::FamilyMajor) const;

    AlgElement operator-() const;
    AlgElement& operator+=(const AlgElement& o);
    AlgElement& operator-=(const AlgElement& o);
    friend AlgElement operator+(AlgElement a, const AlgElement& b) { return a += b; }
    friend AlgElement operator-(AlgElement a, const AlgElement& b) { return a -= b; }
    friend AlgElement operator*(const Rational& c, const AlgElement& x);

    friend bool operator==(const AlgElement& a, const AlgElement& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const AlgElement& a, const AlgElement& b) { return !(a == b); }

    /// Canonical rendering, e.g. "-1*L(3)" or "3/2*L(5/2) - 1*G(1/2)".
    std::string str() const;

    void add_term(const GroupPtr& group, const BasisSymbol& b, const Rational& c);

private:
    GroupPtr group_;
    TermMap terms_;
};

/// Resolves the common group of two operands; throws on mismatch.
GroupPtr merge_groups(const GroupPtr& a, const GroupPtr& b);

/// The super-bracket, bilinear extension of the structure-constant table.
/// Throws std::invalid_argument on a group mismatch.
AlgElement bracket(const AlgElement& x, const AlgElement& y);

/// Bracket of two basis vectors: (coefficient, symbol) or nullopt when zero.
std::optional<std::pair<Rational, BasisSymbol>> bracket_basis(const Group& g,
                                                              const BasisSymbol& a,
                                                              const BasisSymbol& b);

/// The algebra context: wraps the index group and validates symbols against
/// it (L/I indices in Gamma, G/H indices in s+Gamma).
class Algebra {
public:
    explicit Algebra(Group g) : group_(std::make_shared<const Group>(std::move(g))) {}
    explicit Algebra(GroupPtr g) : group_(std::move(g)) {
        if (!group_) throw std::invalid_argument("Algebra: null group");
    }

    const Group& group() const { return *group_; }
    const GroupPtr& group_ptr() const { return group_; }

    /// Validated symbol construction; throws std::domain_error when the index
    /// is outside the coset required by the family.
    BasisSymbol symbol(Family f, const Rational& index) const;

    AlgElement basis(Family f, const Rational& index, const Rational& c = Rational(1)) const;
    AlgElement L(const Rational& p) const { return basis(Family::L, p); }
    AlgElement I(const Rational& p) const { return basis(Family::I, p); }
    AlgElement G(const Rational& r) const { return basis(Family::G, r); }
    AlgElement H(const Rational& r) const { return basis(Family::H, r); }

    AlgElement zero() const { return AlgElement(); }

    /// Super-Jacobi defect [x,[y,z]] - [[x,y],z] - (-1)^([x][y]) [y,[x,z]];
    /// identically zero when the bracket table is consistent.
    AlgElement jacobi_defect(const BasisSymbol& x, const BasisSymbol& y,
                             const BasisSymbol& z) const;

    /// Witt embedding sigma(L_k) = eps^-1 L_(eps k). Requires eps in Gamma,
    /// eps > 0.
    AlgElement virasoro_embed(long long k, const Rational& eps) const;

private:
    GroupPtr group_;
};

}  // namespace superw
