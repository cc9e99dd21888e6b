#include "superw/derivation.hpp"

#include <algorithm>
#include <map>

namespace superw {

HomDerivation::HomDerivation(GroupPtr group, DegreeWindow window, Degree degree, Parity parity)
    : group_(std::move(group)), window_(std::move(window)), degree_(std::move(degree)),
      parity_(parity) {
    if (!group_) throw std::invalid_argument("HomDerivation: null group");
}

bool HomDerivation::in_domain(const BasisSymbol& b) const {
    return window_.contains(*group_, b.index.value);
}

const TensorElement& HomDerivation::value(const BasisSymbol& b) const {
    static const TensorElement zero;
    if (!in_domain(b))
        throw std::domain_error("HomDerivation: " + b.str() + " outside window (" +
                                window_.describe() + ")");
    auto it = values_.find(b);
    return it == values_.end() ? zero : it->second;
}

void HomDerivation::set_value(const BasisSymbol& b, TensorElement v) {
    if (!in_domain(b))
        throw std::domain_error("HomDerivation: " + b.str() + " outside window");
    if (!v.is_zero()) {
        auto dv = v.degree();
        if (!dv || dv->value != b.index.value + degree_.value)
            throw std::invalid_argument("HomDerivation: value of " + b.str() +
                                        " has wrong degree: " + v.str());
        auto pv = v.parity();
        if (!pv || *pv != b.parity() + parity_)
            throw std::invalid_argument("HomDerivation: value of " + b.str() +
                                        " has wrong parity: " + v.str());
        values_[b] = std::move(v);
    } else {
        values_.erase(b);
    }
}

void HomDerivation::subtract(const HomDerivation& other) {
    if (degree_ != other.degree_ || parity_ != other.parity_)
        throw std::invalid_argument("HomDerivation::subtract: degree/parity mismatch");
    for (const auto& [b, v] : other.values_) set_value(b, value(b) - v);
}

TensorElement derivation_defect(const Algebra& algebra, const HomDerivation& d,
                                const BasisSymbol& x, const BasisSymbol& y) {
    if (!d.in_domain(x) || !d.in_domain(y))
        throw std::domain_error("derivation_defect: pair (" + x.str() + ", " + y.str() +
                                ") outside window");
    TensorElement lhs;
    if (auto br = bracket_basis(algebra.group(), x, y)) {
        if (!d.in_domain(br->second))
            throw std::domain_error("derivation_defect: [" + x.str() + ", " + y.str() + "] = " +
                                    br->second.str() + " outside window");
        lhs = br->first * d.value(br->second);
    }
    AlgElement ex = AlgElement::single(algebra.group_ptr(), x, Rational(1));
    AlgElement ey = AlgElement::single(algebra.group_ptr(), y, Rational(1));
    int s1 = parity_sign(d.parity(), x.parity());
    int s2 = parity_sign(y.parity(), d.parity() + x.parity());
    return lhs - Rational(s1) * act(ex, d.value(y)) + Rational(s2) * act(ey, d.value(x));
}

HomDerivation inner(const Algebra& algebra, const DegreeWindow& window, const TensorElement& u,
                    Parity parity) {
    auto pu = u.parity();
    if (!pu) throw std::invalid_argument("inner: u has mixed parity: " + u.str());
    if (!u.is_zero() && *pu != parity)
        throw std::invalid_argument("inner: u is " + std::string(to_string(*pu)) +
                                    " but parity " + to_string(parity) + " requested");
    Degree t{Rational(0), Coset::Gamma};
    if (!u.is_zero()) {
        auto du = u.degree();
        if (!du) throw std::invalid_argument("inner: u is not Zs-homogeneous: " + u.str());
        t = *du;
    }
    HomDerivation d(algebra.group_ptr(), window, t, parity);
    for (const auto& sym : window.symbols(algebra)) {
        AlgElement b = AlgElement::single(algebra.group_ptr(), sym, Rational(1));
        int sign = parity_sign(parity, sym.parity());
        d.set_value(sym, Rational(sign) * act(b, u));
    }
    return d;
}

TensorElement extract_witness(const Algebra& algebra, const HomDerivation& d) {
    if (d.degree().value.is_zero())
        throw std::domain_error("extract_witness: degree 0 (use the length reduction instead)");
    BasisSymbol l0 = algebra.symbol(Family::L, Rational(0));
    return (Rational(-1) / d.degree().value) * d.value(l0);
}

namespace {

BigInt rational_floor(const Rational& q) {
    BigInt n = q.numerator(), den = q.denominator();
    BigInt quot = n / den;  // truncates toward zero
    if (n < 0 && quot * den != n) --quot;
    return quot;
}

// first-slot index mod eps*Z, the beta-class key
Rational class_key(const Rational& p, const Rational& eps) {
    return p - Rational(rational_floor(p / eps)) * eps;
}

// coefficient of [L_m, A_p] on A_(m+p)
Rational action_coeff(Family f, const Rational& m, const Rational& p) {
    if (f == Family::L || f == Family::I) return m - p;
    return Rational(1, 2) * m - p;
}

TensorElement sector_part(const TensorElement& v, std::pair<Family, Family> sector) {
    TensorElement out;
    for (const auto& [key, c] : v.terms())
        if (key.first.family == sector.first && key.second.family == sector.second)
            out.add_term(v.group(), key, c);
    return out;
}

long long chain_length(const TensorElement& v, const Rational& eps) {
    // per beta-class: (max first slot - min first slot)/eps + 1
    std::map<Rational, std::pair<Rational, Rational>> spans;  // key -> (min, max)
    for (const auto& [key, c] : v.terms()) {
        const Rational& p = key.first.index.value;
        Rational k = class_key(p, eps);
        auto it = spans.find(k);
        if (it == spans.end()) {
            spans.emplace(k, std::make_pair(p, p));
        } else {
            it->second.first = std::min(it->second.first, p);
            it->second.second = std::max(it->second.second, p);
        }
    }
    long long total = 0;
    for (const auto& [k, span] : spans)
        total += ((span.second - span.first) / eps).to_integer() + 1;
    return total;
}

}  // namespace

NormalizeResult normalize_d0(const Algebra& algebra, const HomDerivation& d,
                             std::pair<Family, Family> sector) {
    if (!d.degree().value.is_zero())
        throw std::domain_error("normalize_d0: derivation degree must be 0, got " +
                                d.degree().value.str());
    const Rational eps = algebra.group().epsilon();
    BasisSymbol l0 = algebra.symbol(Family::L, Rational(0));
    BasisSymbol lp = algebra.symbol(Family::L, eps);
    BasisSymbol lm = algebra.symbol(Family::L, -eps);
    if (!d.value(l0).is_zero())
        throw std::domain_error("normalize_d0: requires d(L_0) = 0, got " + d.value(l0).str());

    NormalizeResult res{d, {}, 0, 0, 0};
    TensorElement v0 = sector_part(res.reduced.value(lp), sector);
    res.initial_length = chain_length(v0, eps);
    long long guard =
        4 * static_cast<long long>(v0.terms().size() +
                                   sector_part(res.reduced.value(lm), sector).terms().size()) +
        12;

    while (true) {
        TensorElement v = sector_part(res.reduced.value(lp), sector);
        if (v.is_zero()) break;
        if (res.steps >= guard)
            throw std::runtime_error("normalize_d0: no progress after " + std::to_string(guard) +
                                     " steps; residual " + v.str());
        ++res.steps;

        // bottom entry: minimal first-slot index
        const std::pair<const SymbolPair, Rational>* bottom = nullptr;
        for (const auto& term : v.terms())
            if (!bottom || term.first.first.index.value < bottom->first.first.index.value)
                bottom = &term;
        const Rational& p = bottom->first.first.index.value;
        const Rational& q = bottom->first.second.index.value;
        Rational denom = action_coeff(sector.second, eps, q - eps);
        TensorElement w;
        if (!denom.is_zero()) {
            w = TensorElement::single(algebra.group_ptr(), bottom->first.first,
                                      algebra.symbol(sector.second, q - eps),
                                      bottom->second / denom);
        } else {
            // mirror reduction: strip the top entry of the same beta-class of
            // d(L_-eps)
            TensorElement v2 = sector_part(res.reduced.value(lm), sector);
            Rational key = class_key(p, eps);
            const std::pair<const SymbolPair, Rational>* top = nullptr;
            for (const auto& term : v2.terms()) {
                if (class_key(term.first.first.index.value, eps) != key) continue;
                if (!top || term.first.first.index.value > top->first.first.index.value)
                    top = &term;
            }
            if (!top)
                throw std::domain_error(
                    "normalize_d0: primal reduction degenerate at " + bottom->first.first.str() +
                    "(x)" + bottom->first.second.str() + " and the mirror chain is empty");
            const Rational& q2 = top->first.second.index.value;
            Rational denom2 = action_coeff(sector.second, -eps, q2 + eps);
            if (denom2.is_zero())
                throw std::domain_error("normalize_d0: both primal and mirror reductions "
                                        "degenerate for class beta=" + key.str());
            w = TensorElement::single(algebra.group_ptr(), top->first.first,
                                      algebra.symbol(sector.second, q2 + eps),
                                      top->second / denom2);
            ++res.mirror_steps;
        }
        res.reduced.subtract(inner(algebra, res.reduced.window(), w, res.reduced.parity()));
        res.witnesses.push_back(std::move(w));
    }
    return res;
}

}  // namespace superw
