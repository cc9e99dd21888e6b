#include "superw/window.hpp"

#include <algorithm>

namespace superw {

DegreeWindow::DegreeWindow(const Group& g, int radius)
    : eps_(g.epsilon()), radius_(radius), include_half_(g.group_case() == GroupCase::B) {
    if (radius < 1) throw std::invalid_argument("DegreeWindow: radius must be positive");
}

bool DegreeWindow::contains(const Group& g, const Rational& v) const {
    if (g.member(v) == Group::Membership::Outside) return false;
    return v.abs() <= Rational(radius_) * eps_;
}

bool DegreeWindow::interior_contains(const Group& g, const Rational& v) const {
    if (radius_ < 2) return false;
    if (g.member(v) == Group::Membership::Outside) return false;
    return v.abs() <= Rational(radius_ - 2) * eps_;
}

std::vector<Rational> DegreeWindow::indices() const {
    std::vector<Rational> out;
    for (int k = -radius_; k <= radius_; ++k) out.push_back(Rational(k) * eps_);
    if (include_half_) {
        Rational half(1, 2);
        for (int k = -radius_; k < radius_; ++k) out.push_back((Rational(k) + half) * eps_);
    }
    return out;
}

std::vector<BasisSymbol> DegreeWindow::symbols(const Algebra& algebra) const {
    // In case A every family lives on the unshifted indices; in case B the
    // odd families take the shifted ones.
    std::vector<Rational> even_idx, odd_idx;
    for (int k = -radius_; k <= radius_; ++k) even_idx.push_back(Rational(k) * eps_);
    if (include_half_) {
        Rational half(1, 2);
        for (int k = -radius_; k < radius_; ++k) odd_idx.push_back((Rational(k) + half) * eps_);
    } else {
        odd_idx = even_idx;
    }
    std::vector<BasisSymbol> out;
    for (Family f : {Family::L, Family::I, Family::G, Family::H}) {
        const auto& idx = parity_of(f) == Parity::Even ? even_idx : odd_idx;
        for (const auto& v : idx) out.push_back(algebra.symbol(f, v));
    }
    std::sort(out.begin(), out.end(), CanonicalLess{});
    return out;
}

std::string DegreeWindow::describe() const {
    std::string out = "N=" + std::to_string(radius_) + " eps=" + eps_.str();
    out += include_half_ ? " cosets=both" : " cosets=gamma";
    return out;
}

}  // namespace superw
