#include "superw/rational.hpp"

#include <cctype>

namespace superw {

Rational Rational::parse(std::string_view text) {
    auto fail = [&]() -> Rational {
        throw std::invalid_argument("Rational::parse: bad rational '" + std::string(text) + "'");
    };
    size_t i = 0;
    auto read_int = [&]() -> BigInt {
        bool neg = false;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            neg = text[i] == '-';
            ++i;
        }
        size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) fail();
        BigInt n(std::string(text.substr(start, i - start)));
        return neg ? BigInt(-n) : n;
    };
    BigInt num = read_int();
    BigInt den = 1;
    if (i < text.size() && text[i] == '/') {
        ++i;
        den = read_int();
        if (den <= 0) fail();
    }
    if (i != text.size()) fail();
    return Rational(num, den);
}

long long Rational::to_integer() const {
    if (!is_integer()) throw std::domain_error("Rational::to_integer: not an integer: " + str());
    return static_cast<long long>(numerator());
}

std::string Rational::str() const {
    std::string s = numerator().str();
    if (!is_integer()) {
        s += '/';
        s += denominator().str();
    }
    return s;
}

}  // namespace superw
