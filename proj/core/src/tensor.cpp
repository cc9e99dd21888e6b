#include "superw/tensor.hpp"

namespace superw {

TensorElement TensorElement::single(GroupPtr group, const BasisSymbol& a, const BasisSymbol& b,
                                    const Rational& c) {
    TensorElement u;
    u.add_term(group, {a, b}, c);
    return u;
}

void TensorElement::add_term(const GroupPtr& group, const SymbolPair& key, const Rational& c) {
    if (c.is_zero()) return;
    group_ = merge_groups(group_, group);
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    if (terms_.empty()) group_.reset();
}

Rational TensorElement::coeff(const SymbolPair& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<Parity> TensorElement::parity() const {
    std::optional<Parity> p;
    for (const auto& [key, c] : terms_) {
        Parity q = key.first.parity() + key.second.parity();
        if (!p) {
            p = q;
        } else if (*p != q) {
            return std::nullopt;
        }
    }
    return p ? p : std::optional<Parity>(Parity::Even);
}

std::optional<Degree> TensorElement::degree() const {
    std::optional<Rational> d;
    std::optional<Degree> out;
    for (const auto& [key, c] : terms_) {
        Rational q = key.first.index.value + key.second.index.value;
        if (!d) {
            d = q;
            out = group_ ? group_->degree_of(q) : Degree{q, Coset::Gamma};
        } else if (*d != q) {
            return std::nullopt;
        }
    }
    return out;
}

std::pair<SymbolPair, Rational> TensorElement::leading_pair(End end, TermOrder order) const {
    if (is_zero()) throw std::domain_error("leading_pair: zero element");
    const std::pair<const SymbolPair, Rational>* best = nullptr;
    for (const auto& term : terms_) {
        if (!best) {
            best = &term;
            continue;
        }
        bool better = end == End::Highest ? pair_degree_less(best->first, term.first, order)
                                          : pair_degree_less(term.first, best->first, order);
        if (better) best = &term;
    }
    return {best->first, best->second};
}

TensorElement TensorElement::operator-() const {
    TensorElement out = *this;
    for (auto& [key, c] : out.terms_) c = -c;
    return out;
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
    for (const auto& [key, c] : o.terms_) add_term(o.group_, key, c);
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
    for (const auto& [key, c] : o.terms_) add_term(o.group_, key, -c);
    return *this;
}

TensorElement operator*(const Rational& c, const TensorElement& u) {
    TensorElement out;
    if (c.is_zero()) return out;
    for (const auto& [key, coeff] : u.terms_) out.add_term(u.group_, key, c * coeff);
    return out;
}

std::string TensorElement::str() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (first) {
            out += c.is_negative() ? "-" : "";
            first = false;
        } else {
            out += c.is_negative() ? " - " : " + ";
        }
        out += c.abs().str() + "*" + key.first.str() + "(x)" + key.second.str();
    }
    return out;
}

void TripleTensor::add_term(const GroupPtr& group, const SymbolTriple& key, const Rational& c) {
    if (c.is_zero()) return;
    group_ = merge_groups(group_, group);
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    if (terms_.empty()) group_.reset();
}

TripleTensor TripleTensor::operator-() const {
    TripleTensor out = *this;
    for (auto& [key, c] : out.terms_) c = -c;
    return out;
}

TripleTensor& TripleTensor::operator+=(const TripleTensor& o) {
    for (const auto& [key, c] : o.terms_) add_term(o.group_, key, c);
    return *this;
}

TripleTensor& TripleTensor::operator-=(const TripleTensor& o) {
    for (const auto& [key, c] : o.terms_) add_term(o.group_, key, -c);
    return *this;
}

TripleTensor operator*(const Rational& c, const TripleTensor& w) {
    TripleTensor out;
    if (c.is_zero()) return out;
    for (const auto& [key, coeff] : w.terms_) out.add_term(w.group_, key, c * coeff);
    return out;
}

std::string TripleTensor::str() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (first) {
            out += c.is_negative() ? "-" : "";
            first = false;
        } else {
            out += c.is_negative() ? " - " : " + ";
        }
        out += c.abs().str() + "*" + key[0].str() + "(x)" + key[1].str() + "(x)" + key[2].str();
    }
    return out;
}

TensorElement twist(const TensorElement& u) {
    TensorElement out;
    for (const auto& [key, c] : u.terms()) {
        int sign = parity_sign(key.first.parity(), key.second.parity());
        out.add_term(u.group(), {key.second, key.first}, Rational(sign) * c);
    }
    return out;
}

TripleTensor cyclic(const TripleTensor& w) {
    TripleTensor out;
    for (const auto& [key, c] : w.terms()) {
        // sign (-1)^([x1]([x2]+[x3]))
        Parity rest = key[1].parity() + key[2].parity();
        int sign = parity_sign(key[0].parity(), rest);
        out.add_term(w.group(), {key[1], key[2], key[0]}, Rational(sign) * c);
    }
    return out;
}

namespace {

Parity homogeneous_parity(const AlgElement& x, const char* who) {
    auto p = x.parity();
    if (!p) throw std::invalid_argument(std::string(who) + ": mixed-parity argument " + x.str());
    return *p;
}

}  // namespace

TensorElement act(const AlgElement& x, const TensorElement& u) {
    Parity px = homogeneous_parity(x, "act");
    GroupPtr g = merge_groups(x.group(), u.group());
    TensorElement out;
    if (!g) return out;
    for (const auto& [xs, xc] : x.terms()) {
        for (const auto& [key, c] : u.terms()) {
            const auto& [a, b] = key;
            if (auto r = bracket_basis(*g, xs, a))
                out.add_term(g, {r->second, b}, xc * c * r->first);
            if (auto r = bracket_basis(*g, xs, b)) {
                int sign = parity_sign(px, a.parity());
                out.add_term(g, {a, r->second}, Rational(sign) * xc * c * r->first);
            }
        }
    }
    return out;
}

TripleTensor act_triple(const AlgElement& x, const TripleTensor& w) {
    Parity px = homogeneous_parity(x, "act_triple");
    GroupPtr g = merge_groups(x.group(), w.group());
    TripleTensor out;
    if (!g) return out;
    for (const auto& [xs, xc] : x.terms()) {
        for (const auto& [key, c] : w.terms()) {
            Parity passed = Parity::Even;
            for (int slot = 0; slot < 3; ++slot) {
                if (auto r = bracket_basis(*g, xs, key[slot])) {
                    SymbolTriple t = key;
                    t[slot] = r->second;
                    int sign = parity_sign(px, passed);
                    out.add_term(g, t, Rational(sign) * xc * c * r->first);
                }
                passed = passed + key[slot].parity();
            }
        }
    }
    return out;
}

TensorElement skew_project(const TensorElement& u) { return u - twist(u); }

bool is_skew(const TensorElement& u) { return twist(u) == -u; }

}  // namespace superw
