#include "superw/algebra.hpp"

namespace superw {

AlgElement AlgElement::single(GroupPtr group, const BasisSymbol& b, const Rational& c) {
    AlgElement e;
    e.add_term(group, b, c);
    return e;
}

void AlgElement::add_term(const GroupPtr& group, const BasisSymbol& b, const Rational& c) {
    if (c.is_zero()) return;
    group_ = merge_groups(group_, group);
    auto [it, inserted] = terms_.emplace(b, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    if (terms_.empty()) group_.reset();
}

Rational AlgElement::coeff(const BasisSymbol& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<Parity> AlgElement::parity() const {
    std::optional<Parity> p;
    for (const auto& [sym, c] : terms_) {
        if (!p) {
            p = sym.parity();
        } else if (*p != sym.parity()) {
            return std::nullopt;
        }
    }
    return p ? p : std::optional<Parity>(Parity::Even);  // zero counts as even
}

std::optional<Degree> AlgElement::degree() const {
    std::optional<Degree> d;
    for (const auto& [sym, c] : terms_) {
        if (!d) {
            d = sym.index;
        } else if (*d != sym.index) {
            return std::nullopt;
        }
    }
    return d;
}

AlgElement AlgElement::component(const Degree& d) const {
    AlgElement out;
    for (const auto& [sym, c] : terms_)
        if (sym.index == d) out.add_term(group_, sym, c);
    return out;
}

std::pair<BasisSymbol, Rational> AlgElement::leading_term(End end, TermOrder order) const {
    if (is_zero()) throw std::domain_error("leading_term: zero element");
    const std::pair<const BasisSymbol, Rational>* best = nullptr;
    for (const auto& term : terms_) {
        if (!best) {
            best = &term;
            continue;
        }
        bool better = end == End::Highest ? degree_order_less(best->first, term.first, order)
                                          : degree_order_less(term.first, best->first, order);
        if (better) best = &term;
    }
    return {best->first, best->second};
}

AlgElement AlgElement::operator-() const {
    AlgElement out = *this;
    for (auto& [sym, c] : out.terms_) c = -c;
    return out;
}

AlgElement& AlgElement::operator+=(const AlgElement& o) {
    for (const auto& [sym, c] : o.terms_) add_term(o.group_, sym, c);
    return *this;
}

AlgElement& AlgElement::operator-=(const AlgElement& o) {
    for (const auto& [sym, c] : o.terms_) add_term(o.group_, sym, -c);
    return *this;
}

AlgElement operator*(const Rational& c, const AlgElement& x) {
    AlgElement out;
    if (c.is_zero()) return out;
    for (const auto& [sym, coeff] : x.terms_) out.add_term(x.group_, sym, c * coeff);
    return out;
}

std::string AlgElement::str() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [sym, c] : terms_) {
        if (first) {
            out += c.is_negative() ? "-" : "";
            first = false;
        } else {
            out += c.is_negative() ? " - " : " + ";
        }
        out += c.abs().str() + "*" + sym.str();
    }
    return out;
}

GroupPtr merge_groups(const GroupPtr& a, const GroupPtr& b) {
    if (!a) return b;
    if (!b) return a;
    if (a == b || *a == *b) return a;
    throw std::invalid_argument("group mismatch: " + a->describe() + " vs " + b->describe());
}

namespace {

// Coset of a bracket result index, derived from the output family.
Coset result_coset(const Group& g, Family f) {
    if (g.group_case() == GroupCase::A) return Coset::Gamma;
    return parity_of(f) == Parity::Even ? Coset::Gamma : Coset::GammaPlusS;
}

// Table for rank(a) >= rank(b); pairs absent from the table are zero.
std::optional<std::pair<Rational, Family>> table_entry(Family fa, const Rational& p, Family fb,
                                                       const Rational& q) {
    const Rational half(1, 2);
    if (fa == Family::L) {
        switch (fb) {
            case Family::L: return {{p - q, Family::L}};
            case Family::I: return {{p - q, Family::I}};
            case Family::G: return {{half * p - q, Family::G}};
            case Family::H: return {{half * p - q, Family::H}};
        }
    }
    if (fa == Family::I && fb == Family::G) return {{p - Rational(2) * q, Family::H}};
    if (fa == Family::G && fb == Family::G) return {{Rational(1), Family::I}};
    // [I,I], [I,H], [G,H], [H,H] vanish
    return std::nullopt;
}

}  // namespace

std::optional<std::pair<Rational, BasisSymbol>> bracket_basis(const Group& g, const BasisSymbol& a,
                                                              const BasisSymbol& b) {
    bool flip = a.family < b.family;  // ranks: L > I > G > H
    const BasisSymbol& hi = flip ? b : a;
    const BasisSymbol& lo = flip ? a : b;
    auto entry = table_entry(hi.family, hi.index.value, lo.family, lo.index.value);
    if (!entry) return std::nullopt;
    Rational c = entry->first;
    if (flip) {
        // super-antisymmetry: [a,b] = -(-1)^([a][b]) [b,a]
        c = Rational(-parity_sign(a.parity(), b.parity())) * c;
    }
    if (c.is_zero()) return std::nullopt;
    Family fam = entry->second;
    Rational idx = a.index.value + b.index.value;
    return {{c, BasisSymbol{fam, Degree{idx, result_coset(g, fam)}}}};
}

AlgElement bracket(const AlgElement& x, const AlgElement& y) {
    GroupPtr g = merge_groups(x.group(), y.group());
    AlgElement out;
    if (!g) return out;  // either side zero
    for (const auto& [a, ca] : x.terms()) {
        for (const auto& [b, cb] : y.terms()) {
            if (auto r = bracket_basis(*g, a, b)) out.add_term(g, r->second, ca * cb * r->first);
        }
    }
    return out;
}

BasisSymbol Algebra::symbol(Family f, const Rational& index) const {
    Degree d = group_->degree_of(index);
    if (group_->group_case() == GroupCase::B) {
        bool wants_shifted = parity_of(f) == Parity::Odd;
        bool is_shifted = d.coset == Coset::GammaPlusS;
        if (wants_shifted != is_shifted)
            throw std::domain_error(std::string(1, family_letter(f)) + "(" + index.str() +
                                    "): index in wrong coset for family");
    }
    return BasisSymbol{f, d};
}

AlgElement Algebra::basis(Family f, const Rational& index, const Rational& c) const {
    return AlgElement::single(group_, symbol(f, index), c);
}

AlgElement Algebra::jacobi_defect(const BasisSymbol& x, const BasisSymbol& y,
                                  const BasisSymbol& z) const {
    auto el = [&](const BasisSymbol& s) { return AlgElement::single(group_, s, Rational(1)); };
    AlgElement lhs = bracket(el(x), bracket(el(y), el(z)));
    AlgElement mid = bracket(bracket(el(x), el(y)), el(z));
    AlgElement rhs = bracket(el(y), bracket(el(x), el(z)));
    return lhs - mid - Rational(parity_sign(x.parity(), y.parity())) * rhs;
}

AlgElement Algebra::virasoro_embed(long long k, const Rational& eps) const {
    if (!eps.is_positive() || !group_->contains(eps))
        throw std::domain_error("virasoro_embed: eps " + eps.str() +
                                " is not a positive element of Gamma");
    return basis(Family::L, eps * Rational(k), Rational(1) / eps);
}

}  // namespace superw
