#pragma once

#include "superw/algebra.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace superw {

using SymbolPair = std::pair<BasisSymbol, BasisSymbol>;
using SymbolTriple = std::array<BasisSymbol, 3>;

struct CanonicalPairLess {
    bool operator()(const SymbolPair& a, const SymbolPair& b) const {
        CanonicalLess less;
        if (a.first != b.first) return less(a.first, b.first);
        return less(a.second, b.second);
    }
};

struct CanonicalTripleLess {
    bool operator()(const SymbolTriple& a, const SymbolTriple& b) const {
        CanonicalLess less;
        for (int i = 0; i < 3; ++i)
            if (a[i] != b[i]) return less(a[i], b[i]);
        return false;
    }
};

/// Degree of a pure tensor A_p (x) B_q in the pair order: lexicographic with
/// the first slot dominant, each slot compared in the element degree order.
/// Ties between equal pair degrees are broken nowhere here; callers that need
/// a total order on terms use the canonical key order.
inline bool pair_degree_less(const SymbolPair& a, const SymbolPair& b,
                             TermOrder order = TermOrder::FamilyMajor) {
    if (a.first != b.first) return degree_order_less(a.first, b.first, order);
    return degree_order_less(a.second, b.second, order);
}

/// Sparse element of the adjoint tensor module V = L (x) L.
class TensorElement {
public:
    using TermMap = std::map<SymbolPair, Rational, CanonicalPairLess>;

    TensorElement() = default;

    static TensorElement single(GroupPtr group, const BasisSymbol& a, const BasisSymbol& b,
                                const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    const GroupPtr& group() const { return group_; }
    Rational coeff(const SymbolPair& k) const;

    std::optional<Parity> parity() const;  // nullopt = mixed
    std::optional<Degree> degree() const;  // Zs-degree p+q; nullopt = mixed or zero

    /// Extremal term under the pair degree; canonical key order breaks ties.
    std::pair<SymbolPair, Rational> leading_pair(End end,
                                                 TermOrder order = TermOrder::FamilyMajor) const;

    TensorElement operator-() const;
    TensorElement& operator+=(const TensorElement& o);
    TensorElement& operator-=(const TensorElement& o);
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    friend TensorElement operator*(const Rational& c, const TensorElement& u);

    friend bool operator==(const TensorElement& a, const TensorElement& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const TensorElement& a, const TensorElement& b) { return !(a == b); }

    std::string str() const;

    void add_term(const GroupPtr& group, const SymbolPair& key, const Rational& c);

private:
    GroupPtr group_;
    TermMap terms_;
};

/// Sparse element of L (x) L (x) L.
class TripleTensor {
public:
    using TermMap = std::map<SymbolTriple, Rational, CanonicalTripleLess>;

    TripleTensor() = default;

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    const GroupPtr& group() const { return group_; }

    TripleTensor operator-() const;
    TripleTensor& operator+=(const TripleTensor& o);
    TripleTensor& operator-=(const TripleTensor& o);
    friend TripleTensor operator+(TripleTensor a, const TripleTensor& b) { return a += b; }
    friend TripleTensor operator-(TripleTensor a, const TripleTensor& b) { return a -= b; }
    friend TripleTensor operator*(const Rational& c, const TripleTensor& w);

    friend bool operator==(const TripleTensor& a, const TripleTensor& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const TripleTensor& a, const TripleTensor& b) { return !(a == b); }

    std::string str() const;

    void add_term(const GroupPtr& group, const SymbolTriple& key, const Rational& c);

private:
    GroupPtr group_;
    TermMap terms_;
};

/// Super-twist tau(x (x) y) = (-1)^([x][y]) y (x) x. Involution.
TensorElement twist(const TensorElement& u);

/// Super-cyclic map xi = (1 (x) tau)(tau (x) 1); xi^3 = id.
TripleTensor cyclic(const TripleTensor& w);

/// Adjoint diagonal action x o (a (x) b) = [x,a] (x) b + (-1)^([x][a]) a (x) [x,b].
/// x must be parity-homogeneous; throws std::invalid_argument otherwise.
TensorElement act(const AlgElement& x, const TensorElement& u);

/// Diagonal action on three tensor factors, same sign rule per slot.
TripleTensor act_triple(const AlgElement& x, const TripleTensor& w);

/// u - tau(u); lands in Im(1 (x) 1 - tau).
TensorElement skew_project(const TensorElement& u);

/// u in Im(1 (x) 1 - tau), equivalently tau(u) = -u.
bool is_skew(const TensorElement& u);

}  // namespace superw
