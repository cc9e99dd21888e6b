#include "superw/bialgebra.hpp"

namespace superw {

RMatrix make_rmatrix(TensorElement u, Parity parity_if_zero) {
    auto p = u.parity();
    if (!p) throw std::invalid_argument("make_rmatrix: r has mixed parity: " + u.str());
    Parity parity = u.is_zero() ? parity_if_zero : *p;
    bool skew = is_skew(u);
    return RMatrix{std::move(u), parity, skew};
}

TensorElement cobracket(const RMatrix& r, const AlgElement& x) {
    auto px = x.parity();
    if (!px) throw std::invalid_argument("cobracket: mixed-parity x: " + x.str());
    int sign = parity_sign(r.parity, *px);
    return Rational(sign) * act(x, r.value);
}

TripleTensor cybe(const RMatrix& r) {
    TripleTensor out;
    const GroupPtr& g = r.value.group();
    for (const auto& [ti, ci] : r.value.terms()) {
        const auto& [ai, bi] = ti;
        for (const auto& [tj, cj] : r.value.terms()) {
            const auto& [aj, bj] = tj;
            Rational c = ci * cj;
            int sign = parity_sign(aj.parity(), bi.parity());
            // [r12,r13] = sum (-1)^([aj][bi]) [ai,aj] (x) bi (x) bj
            if (auto br = bracket_basis(*g, ai, aj))
                out.add_term(g, {br->second, bi, bj}, Rational(sign) * c * br->first);
            // [r12,r23] = sum ai (x) [bi,aj] (x) bj
            if (auto br = bracket_basis(*g, bi, aj))
                out.add_term(g, {ai, br->second, bj}, c * br->first);
            // [r13,r23] = sum (-1)^([aj][bi]) ai (x) aj (x) [bi,bj]
            if (auto br = bracket_basis(*g, bi, bj))
                out.add_term(g, {ai, aj, br->second}, Rational(sign) * c * br->first);
        }
    }
    return out;
}

long long annihilator_bound(const TensorElement& u) {
    return static_cast<long long>(u.terms().size()) + 1;
}

long long annihilator_bound(const TripleTensor& w) {
    return static_cast<long long>(w.terms().size()) + 1;
}

namespace {

CheckReport base_report(const Algebra& algebra, std::string name, const std::string& window) {
    CheckReport rep;
    rep.check_name = std::move(name);
    rep.config_digest = digest_hex(algebra.group().describe());
    rep.window = window;
    return rep;
}

}  // namespace

CheckReport mybe_check(const Algebra& algebra, const RMatrix& r,
                       const std::vector<BasisSymbol>& test_set) {
    CheckReport rep = base_report(algebra, "mybe", "");
    TripleTensor c = cybe(r);
    for (const auto& sym : test_set) {
        AlgElement x = AlgElement::single(algebra.group_ptr(), sym, Rational(1));
        TripleTensor residual = act_triple(x, c);
        if (!residual.is_zero()) rep.add_counterexample(sym.str(), residual.str());
    }
    rep.finalize();
    return rep;
}

CheckReport mybe_bound_scan(const Algebra& algebra, const RMatrix& r) {
    TripleTensor c = cybe(r);
    long long bound = annihilator_bound(c);
    std::vector<BasisSymbol> scan;
    const Rational& eps = algebra.group().epsilon();
    for (long long m = 1; m <= bound; ++m)
        scan.push_back(algebra.symbol(Family::L, Rational(m) * eps));
    CheckReport rep = mybe_check(algebra, r, scan);
    rep.check_name = "mybe-bound-scan";
    rep.dimensions["bound_M"] = bound;
    return rep;
}

CheckReport verify_coalgebra(const Algebra& algebra, const RMatrix& r,
                             const DegreeWindow& window) {
    if (!r.skew || r.parity != Parity::Even)
        throw std::domain_error(std::string("verify_coalgebra: r must be skew and even (skew=") +
                                (r.skew ? "yes" : "no") + ", parity=" + to_string(r.parity) + ")");
    CheckReport rep = base_report(algebra, "coalgebra", window.describe());
    for (const auto& sym : window.symbols(algebra)) {
        AlgElement x = AlgElement::single(algebra.group_ptr(), sym, Rational(1));
        TensorElement delta = cobracket(r, x);
        TensorElement skew_defect = delta + twist(delta);
        if (!skew_defect.is_zero())
            rep.add_counterexample("skew-image " + sym.str(), skew_defect.str());

        // (1 (x) Delta_r) applied to the second slot; r is even so no extra
        // sign enters.
        TripleTensor w;
        for (const auto& [key, c] : delta.terms()) {
            AlgElement second = AlgElement::single(algebra.group_ptr(), key.second, Rational(1));
            TensorElement inner_delta = cobracket(r, second);
            for (const auto& [pq, c2] : inner_delta.terms())
                w.add_term(algebra.group_ptr(), {key.first, pq.first, pq.second}, c * c2);
        }
        TripleTensor xi = cyclic(w);
        TripleTensor cojacobi = w + xi + cyclic(xi);
        if (!cojacobi.is_zero()) rep.add_counterexample("co-jacobi " + sym.str(), cojacobi.str());
    }
    rep.finalize();
    return rep;
}

CheckReport verify_compatibility(const Algebra& algebra, const RMatrix& r,
                                 const DegreeWindow& window) {
    CheckReport rep = base_report(algebra, "compatibility", window.describe());
    auto symbols = window.symbols(algebra);
    for (size_t i = 0; i < symbols.size(); ++i) {
        for (size_t j = i; j < symbols.size(); ++j) {
            const BasisSymbol& xs = symbols[i];
            const BasisSymbol& ys = symbols[j];
            AlgElement x = AlgElement::single(algebra.group_ptr(), xs, Rational(1));
            AlgElement y = AlgElement::single(algebra.group_ptr(), ys, Rational(1));
            AlgElement xy = bracket(x, y);
            TensorElement lhs = xy.is_zero() ? TensorElement() : cobracket(r, xy);
            int s1 = parity_sign(r.parity, xs.parity());
            int s2 = parity_sign(ys.parity(), r.parity + xs.parity());
            TensorElement residual = lhs - Rational(s1) * act(x, cobracket(r, y)) +
                                     Rational(s2) * act(y, cobracket(r, x));
            if (!residual.is_zero())
                rep.add_counterexample("(" + xs.str() + ", " + ys.str() + ")", residual.str());
        }
    }
    rep.finalize();
    return rep;
}

}  // namespace superw
