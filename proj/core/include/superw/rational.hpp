#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace superw {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar. Every coefficient, index and structure constant in
/// the library is one of these; no floating point appears anywhere in the
/// computational core. Always stored in lowest terms with positive
/// denominator, zero is 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(n) {}
    Rational(const BigInt& n) : v_(n) {}
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}
    Rational(const BigInt& num, const BigInt& den) : v_(make_ratio(num, den)) {}

    /// Parses "a", "-a", "a/b" (optionally signed numerator).
    static Rational parse(std::string_view text);

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_integer() const { return denominator() == 1; }
    bool is_positive() const { return v_ > 0; }
    bool is_negative() const { return v_ < 0; }

    /// Requires is_integer() and a value that fits in long long.
    long long to_integer() const;

    Rational operator-() const { Rational r; r.v_ = -v_; return r; }
    Rational abs() const { return is_negative() ? -*this : *this; }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    /// Canonical rendering: "3", "-3", "3/2", "-3/2".
    std::string str() const;

private:
    static boost::multiprecision::cpp_rational make_ratio(BigInt num, BigInt den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        return boost::multiprecision::cpp_rational(std::move(num), std::move(den));
    }

    boost::multiprecision::cpp_rational v_;
};

}  // namespace superw
