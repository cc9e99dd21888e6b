#include "superw/group.hpp"

#include <boost/integer/common_factor_rt.hpp>

namespace superw {

namespace {

// gcd over cpp_int, result nonnegative
BigInt big_gcd(BigInt a, BigInt b) { return boost::integer::gcd(a, b); }
BigInt big_lcm(const BigInt& a, const BigInt& b) { return boost::integer::lcm(a, b); }

}  // namespace

Group::Group(std::vector<Rational> gamma_generators, Rational s)
    : generators_(std::move(gamma_generators)), s_(std::move(s)) {
    // Gamma = <g1,...,gk> over Z. With D = lcm of denominators the lattice is
    // (g/D)Z where g = gcd of the scaled numerators, so the minimal positive
    // element always exists here.
    BigInt denom_lcm = 1;
    bool nontrivial = false;
    for (const auto& g : generators_) {
        if (g.is_zero()) continue;
        nontrivial = true;
        denom_lcm = big_lcm(denom_lcm, g.denominator());
    }
    if (!nontrivial) throw std::invalid_argument("Group: Gamma must be nontrivial");
    BigInt num_gcd = 0;
    for (const auto& g : generators_) {
        if (g.is_zero()) continue;
        BigInt scaled = g.numerator() * (denom_lcm / g.denominator());
        num_gcd = big_gcd(num_gcd, scaled);
    }
    eps_ = Rational(num_gcd, denom_lcm);

    if (contains(s_)) {
        case_ = GroupCase::A;
    } else if (contains(s_ + s_)) {
        case_ = GroupCase::B;
    } else {
        throw std::invalid_argument("Group: 2s not in Gamma (s=" + s_.str() + ", eps=" +
                                    eps_.str() + ")");
    }
}

Group::Membership Group::member(const Rational& v) const {
    if ((v / eps_).is_integer()) return Membership::Gamma;
    if (((v - s_) / eps_).is_integer()) return Membership::Shifted;
    return Membership::Outside;
}

Degree Group::degree_of(const Rational& v) const {
    switch (member(v)) {
        case Membership::Gamma:
            return Degree{v, Coset::Gamma};
        case Membership::Shifted:
            return Degree{v, case_ == GroupCase::A ? Coset::Gamma : Coset::GammaPlusS};
        default:
            throw std::domain_error("Group: value " + v.str() + " outside Zs");
    }
}

std::string Group::describe() const {
    std::string out = "gamma=<";
    for (size_t i = 0; i < generators_.size(); ++i) {
        if (i) out += ',';
        out += generators_[i].str();
    }
    out += "> s=" + s_.str() + " eps=" + eps_.str();
    out += " case=";
    out += (case_ == GroupCase::A ? 'A' : 'B');
    return out;
}

}  // namespace superw
