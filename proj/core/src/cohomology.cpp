#include "superw/cohomology.hpp"

#include <boost/integer/common_factor_rt.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace superw {

namespace {

void content_reduce(RowEchelon::IntRow& row) {
    if (row.empty()) return;
    BigInt g = 0;
    for (const auto& [col, v] : row) {
        g = boost::integer::gcd(g, v);
        if (g == 1) break;
    }
    if (g > 1)
        for (auto& [col, v] : row) v /= g;
    if (row.front().second < 0)
        for (auto& [col, v] : row) v = -v;
}

}  // namespace

bool RowEchelon::insert(const SparseRow& row) {
    BigInt denom_lcm = 1;
    for (const auto& [col, q] : row) denom_lcm = boost::integer::lcm(denom_lcm, q.denominator());
    IntRow r;
    r.reserve(row.size());
    for (const auto& [col, q] : row)
        r.emplace_back(col, q.numerator() * (denom_lcm / q.denominator()));
    return insert_int(std::move(r));
}

bool RowEchelon::insert_int(IntRow row) {
    while (!row.empty()) {
        content_reduce(row);
        int lead = row.front().first;
        auto it = pivots_.find(lead);
        if (it == pivots_.end()) {
            pivots_.emplace(lead, std::move(row));
            return true;
        }
        // fraction-free combination a*row - b*pivot; the lead cancels
        const IntRow& pivot = it->second;
        const BigInt a = pivot.front().second;
        const BigInt b = row.front().second;
        IntRow next;
        next.reserve(row.size() + pivot.size());
        size_t i = 0, j = 0;
        while (i < row.size() || j < pivot.size()) {
            if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
                next.emplace_back(row[i].first, a * row[i].second);
                ++i;
            } else if (i == row.size() || pivot[j].first < row[i].first) {
                next.emplace_back(pivot[j].first, -b * pivot[j].second);
                ++j;
            } else {
                BigInt c = a * row[i].second - b * pivot[j].second;
                if (c != 0) next.emplace_back(row[i].first, std::move(c));
                ++i;
                ++j;
            }
        }
        row = std::move(next);
    }
    return false;
}

namespace {

// family of [X_*, f_*] when the table entry is nonzero
std::optional<Family> action_family(Family x, Family f) {
    auto key = [](Family a, Family b) { return static_cast<int>(a) * 4 + static_cast<int>(b); };
    switch (key(x, f)) {
        case 3 * 4 + 3: return Family::L;  // [L,L]
        case 3 * 4 + 2:
        case 2 * 4 + 3: return Family::I;  // [L,I], [I,L]
        case 3 * 4 + 1:
        case 1 * 4 + 3: return Family::G;  // [L,G], [G,L]
        case 3 * 4 + 0:
        case 0 * 4 + 3: return Family::H;  // [L,H], [H,L]
        case 2 * 4 + 1:
        case 1 * 4 + 2: return Family::H;  // [I,G], [G,I]
        case 1 * 4 + 1: return Family::I;  // [G,G]
        default: return std::nullopt;
    }
}

bool symbol_exists(const Group& g, Family f, const Rational& index) {
    auto m = g.member(index);
    if (m == Group::Membership::Outside) return false;
    if (g.group_case() == GroupCase::A) return true;
    bool shifted = m == Group::Membership::Shifted;
    return shifted == (parity_of(f) == Parity::Odd);
}

struct UnknownKey {
    BasisSymbol source;
    SymbolPair target;
    friend bool operator<(const UnknownKey& a, const UnknownKey& b) {
        CanonicalLess less;
        if (a.source != b.source) return less(a.source, b.source);
        CanonicalPairLess pless;
        if (a.target != b.target) return pless(a.target, b.target);
        return false;
    }
};

class Assembler {
public:
    Assembler(const Algebra& algebra, const Degree& t, Parity parity, const DegreeWindow& window)
        : algebra_(algebra), group_(algebra.group()), t_(t), parity_(parity), window_(window),
          symbols_(window.symbols(algebra)) {
        for (const auto& s : symbols_) by_degree_[s.index.value].push_back(s);
        enumerate_unknowns();
    }

    CocycleSystem run() {
        CocycleSystem sys;
        sys.degree = t_;
        sys.parity = parity_;
        sys.window_desc = window_.describe();
        sys.unknowns = unknowns_;
        build_equations(sys);
        build_inners(sys);
        // Interior coordinates: interior source AND a target pair whose whole
        // preimage fan under the window actions stays tracked. Coordinates
        // near the slot boundary are legitimately under-determined by the
        // truncated system; including them would read truncation artifacts as
        // cohomology.
        for (int i = 0; i < static_cast<int>(unknowns_.size()); ++i) {
            const auto& u = unknowns_[i];
            const Rational& src = u.source.index.value;
            if (!window_.interior_contains(group_, src)) continue;
            if (!in_window(u.target.first.index.value - src)) continue;
            if (!in_window(u.target.second.index.value - src)) continue;
            sys.interior.push_back(i);
        }
        return sys;
    }

private:
    const Algebra& algebra_;
    const Group& group_;
    Degree t_;
    Parity parity_;
    const DegreeWindow& window_;
    std::vector<BasisSymbol> symbols_;
    std::map<Rational, std::vector<BasisSymbol>> by_degree_;
    std::vector<CocycleSystem::Unknown> unknowns_;
    std::map<UnknownKey, int> index_;

    void enumerate_unknowns() {
        for (const auto& b : symbols_) {
            Rational target_degree = b.index.value + t_.value;
            Parity target_parity = b.parity() + parity_;
            for (const auto& p : symbols_) {
                auto it = by_degree_.find(target_degree - p.index.value);
                if (it == by_degree_.end()) continue;
                for (const auto& q : it->second) {
                    if (p.parity() + q.parity() != target_parity) continue;
                    UnknownKey key{b, {p, q}};
                    index_.emplace(key, static_cast<int>(unknowns_.size()));
                    unknowns_.push_back({b, {p, q}});
                }
            }
        }
    }

    int coord(const BasisSymbol& src, const SymbolPair& tgt) const {
        auto it = index_.find(UnknownKey{src, tgt});
        return it == index_.end() ? -1 : it->second;
    }

    bool in_window(const Rational& v) const { return window_.contains(group_, v); }

    // True when every real-algebra contribution to the defect component of
    // (x, y) at target is carried by a tracked coordinate.
    bool component_complete(const BasisSymbol& x, const BasisSymbol& y,
                            const SymbolPair& target) const {
        for (const BasisSymbol* actor : {&x, &y}) {
            for (int slot = 0; slot < 2; ++slot) {
                const BasisSymbol& out = slot == 0 ? target.first : target.second;
                Rational pre_index = out.index.value - actor->index.value;
                for (Family f : {Family::L, Family::I, Family::G, Family::H}) {
                    auto rf = action_family(actor->family, f);
                    if (!rf || *rf != out.family) continue;
                    if (!symbol_exists(group_, f, pre_index)) continue;
                    BasisSymbol pre{f, group_.degree_of(pre_index)};
                    auto br = bracket_basis(group_, *actor, pre);
                    if (!br) continue;  // structure constant vanishes
                    if (!in_window(pre_index)) return false;
                }
            }
        }
        return true;
    }

    void build_equations(CocycleSystem& sys) {
        for (size_t i = 0; i < symbols_.size(); ++i) {
            for (size_t j = i; j < symbols_.size(); ++j) {
                const BasisSymbol& x = symbols_[i];
                const BasisSymbol& y = symbols_[j];
                if (i == j && x.parity() == Parity::Even) continue;  // defect trivially 0

                auto br = bracket_basis(group_, x, y);
                if (br && !in_window(br->second.index.value)) continue;  // excluded pair

                int s1 = parity_sign(parity_, x.parity());
                int s2 = parity_sign(y.parity(), parity_ + x.parity());

                std::map<SymbolPair, SparseRow, CanonicalPairLess> components;
                auto contribute = [&](const SymbolPair& target, int col, const Rational& c) {
                    if (!in_window(target.first.index.value) ||
                        !in_window(target.second.index.value))
                        return;
                    components[target].emplace_back(col, c);
                };

                if (br) {
                    const BasisSymbol& z = br->second;
                    Rational tgt_deg = z.index.value + t_.value;
                    for (const auto& p : symbols_) {
                        auto it = by_degree_.find(tgt_deg - p.index.value);
                        if (it == by_degree_.end()) continue;
                        for (const auto& q : it->second) {
                            int col = coord(z, {p, q});
                            if (col >= 0) contribute({p, q}, col, br->first);
                        }
                    }
                }

                // -s1 * (x o d(y)) and +s2 * (y o d(x))
                auto action_side = [&](const BasisSymbol& actor, const BasisSymbol& source,
                                       const Rational& outer_sign) {
                    Rational tgt_deg = source.index.value + t_.value;
                    for (const auto& p : symbols_) {
                        auto it = by_degree_.find(tgt_deg - p.index.value);
                        if (it == by_degree_.end()) continue;
                        for (const auto& q : it->second) {
                            int col = coord(source, {p, q});
                            if (col < 0) continue;
                            if (auto b1 = bracket_basis(group_, actor, p))
                                contribute({b1->second, q}, col, outer_sign * b1->first);
                            if (auto b2 = bracket_basis(group_, actor, q)) {
                                int s = parity_sign(actor.parity(), p.parity());
                                contribute({p, b2->second}, col,
                                           outer_sign * Rational(s) * b2->first);
                            }
                        }
                    }
                };
                action_side(x, y, Rational(-s1));
                action_side(y, x, Rational(s2));

                for (auto& [target, row] : components) {
                    if (!component_complete(x, y, target)) continue;
                    std::sort(row.begin(), row.end(),
                              [](const auto& a, const auto& b) { return a.first < b.first; });
                    SparseRow merged;
                    for (const auto& [col, c] : row) {
                        if (!merged.empty() && merged.back().first == col) {
                            merged.back().second += c;
                            if (merged.back().second.is_zero()) merged.pop_back();
                        } else if (!c.is_zero()) {
                            merged.emplace_back(col, c);
                        }
                    }
                    if (!merged.empty()) sys.equations.push_back(std::move(merged));
                }
            }
        }
    }

    void build_inners(CocycleSystem& sys) {
        // homogeneous u of degree t and the requested parity, supported in the
        // window: one generator per tracked pair
        for (const auto& a : symbols_) {
            auto it = by_degree_.find(t_.value - a.index.value);
            if (it == by_degree_.end()) continue;
            for (const auto& b : it->second) {
                if (a.parity() + b.parity() != parity_) continue;
                SparseRow row;
                for (const auto& src : symbols_) {
                    int sign = parity_sign(parity_, src.parity());
                    if (auto b1 = bracket_basis(group_, src, a)) {
                        int col = coord(src, {b1->second, b});
                        if (col >= 0) row.emplace_back(col, Rational(sign) * b1->first);
                    }
                    if (auto b2 = bracket_basis(group_, src, b)) {
                        int s = parity_sign(src.parity(), a.parity());
                        int col = coord(src, {a, b2->second});
                        if (col >= 0) row.emplace_back(col, Rational(sign * s) * b2->first);
                    }
                }
                std::sort(row.begin(), row.end(),
                          [](const auto& u, const auto& v) { return u.first < v.first; });
                SparseRow merged;
                for (const auto& [col, c] : row) {
                    if (!merged.empty() && merged.back().first == col) {
                        merged.back().second += c;
                        if (merged.back().second.is_zero()) merged.pop_back();
                    } else if (!c.is_zero()) {
                        merged.emplace_back(col, c);
                    }
                }
                if (!merged.empty()) sys.inner_generators.push_back(std::move(merged));
            }
        }
    }
};

std::string render_row(const SparseRow& row) {
    std::string out;
    for (size_t k = 0; k < row.size(); ++k) {
        if (k) out += ' ';
        out += std::to_string(row[k].first) + ":" + row[k].second.str();
    }
    return out;
}

}  // namespace

std::string CocycleSystem::export_text() const {
    std::ostringstream out;
    out << "superw-cocycle-system v1\n";
    out << "degree " << degree.value.str() << "\n";
    out << "parity " << to_string(parity) << "\n";
    out << "window " << window_desc << "\n";
    out << "unknowns " << unknowns.size() << "\n";
    for (size_t i = 0; i < unknowns.size(); ++i)
        out << "# u" << i << " = d(" << unknowns[i].source.str() << ")[" << unknowns[i].target.first.str()
            << "," << unknowns[i].target.second.str() << "]\n";
    out << "interior";
    for (int i : interior) out << ' ' << i;
    out << "\n";
    out << "equations " << equations.size() << "\n";
    for (const auto& row : equations) out << render_row(row) << "\n";
    out << "inners " << inner_generators.size() << "\n";
    for (const auto& row : inner_generators) out << render_row(row) << "\n";
    out << "end\n";
    return out.str();
}

CocycleSystem assemble_cocycle_system(const Algebra& algebra, const Degree& t, Parity parity,
                                      const DegreeWindow& window) {
    return Assembler(algebra, t, parity, window).run();
}

CheckReport solve_h1_window(const Algebra& algebra, const Degree& t, Parity parity,
                            const DegreeWindow& window, CocycleSystem* out_system) {
    CheckReport rep;
    rep.check_name = "h1-window";
    rep.config_digest = digest_hex(algebra.group().describe());
    rep.window = window.describe();

    if (window.radius() < 2)
        throw std::domain_error("solve_h1_window: window interior is empty (radius " +
                                std::to_string(window.radius()) + ")");
    CocycleSystem sys = assemble_cocycle_system(algebra, t, parity, window);

    // shorter rows first keeps the pivot set sparse
    std::vector<const SparseRow*> ordered;
    ordered.reserve(sys.equations.size());
    for (const auto& row : sys.equations) ordered.push_back(&row);
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const SparseRow* a, const SparseRow* b) { return a->size() < b->size(); });
    RowEchelon echelon;
    for (const SparseRow* row : ordered) echelon.insert(*row);
    long long rank_eq = echelon.rank();
    long long n = static_cast<long long>(sys.unknowns.size());
    long long cocycle_dim = n - rank_eq;

    // dim of cocycles restricted to the interior coordinates:
    // rank(equations + interior unit rows) - rank(equations)
    long long cocycle_dim_interior = 0;
    for (int i : sys.interior)
        if (echelon.insert({{i, Rational(1)}})) ++cocycle_dim_interior;

    // inner derivations restricted to the interior coordinates
    std::vector<int> interior_pos(sys.unknowns.size(), -1);
    for (size_t k = 0; k < sys.interior.size(); ++k) interior_pos[sys.interior[k]] = static_cast<int>(k);
    RowEchelon inner_echelon;
    for (const auto& row : sys.inner_generators) {
        SparseRow restricted;
        for (const auto& [col, c] : row)
            if (interior_pos[col] >= 0) restricted.emplace_back(interior_pos[col], c);
        if (!restricted.empty()) inner_echelon.insert(std::move(restricted));
    }
    long long inner_dim_interior = inner_echelon.rank();

    long long quotient = cocycle_dim_interior - inner_dim_interior;
    rep.dimensions["unknowns"] = n;
    rep.dimensions["equations"] = static_cast<long long>(sys.equations.size());
    rep.dimensions["cocycle_dim"] = cocycle_dim;
    rep.dimensions["cocycle_dim_interior"] = cocycle_dim_interior;
    rep.dimensions["inner_dim_interior"] = inner_dim_interior;
    rep.dimensions["interior_quotient"] = quotient;
    if (quotient != 0)
        rep.add_counterexample("degree=" + t.value.str() + " parity=" + to_string(parity),
                               "interior_quotient=" + std::to_string(quotient));
    rep.finalize();
    if (out_system) *out_system = std::move(sys);
    return rep;
}

namespace {

template <typename Value, typename Action>
CheckReport scan_impl(const Algebra& algebra, const Value& x, const Rational& eps, long long bound,
                      const std::string& what, Action&& action) {
    CheckReport rep;
    rep.check_name = "annihilator-scan";
    rep.config_digest = digest_hex(algebra.group().describe());
    rep.dimensions["bound_M"] = bound;
    for (long long m = 1; m <= bound; ++m) {
        AlgElement lm = algebra.basis(Family::L, Rational(m) * eps);
        if (!action(lm, x)) continue;  // annihilated, keep scanning
        rep.dimensions["found_m"] = m;
        rep.pass = true;
        return rep;
    }
    rep.add_counterexample(what, "no m in [1," + std::to_string(bound) + "] with nonzero action");
    rep.finalize();
    rep.pass = false;
    return rep;
}

}  // namespace

CheckReport annihilator_scan(const Algebra& algebra, const AlgElement& x, const Rational& eps,
                             long long bound) {
    if (x.is_zero()) throw std::domain_error("annihilator_scan: x must be nonzero");
    return scan_impl(algebra, x, eps, bound, x.str(),
                     [](const AlgElement& lm, const AlgElement& v) { return !bracket(lm, v).is_zero(); });
}

CheckReport annihilator_scan(const Algebra& algebra, const TensorElement& u, const Rational& eps,
                             long long bound) {
    if (u.is_zero()) throw std::domain_error("annihilator_scan: u must be nonzero");
    return scan_impl(algebra, u, eps, bound, u.str(),
                     [](const AlgElement& lm, const TensorElement& v) { return !act(lm, v).is_zero(); });
}

CheckReport annihilator_scan(const Algebra& algebra, const TripleTensor& w, const Rational& eps,
                             long long bound) {
    if (w.is_zero()) throw std::domain_error("annihilator_scan: w must be nonzero");
    return scan_impl(algebra, w, eps, bound, w.str(), [](const AlgElement& lm, const TripleTensor& v) {
        return !act_triple(lm, v).is_zero();
    });
}

}  // namespace superw
