#include "superw/parse.hpp"

#include <cctype>

namespace superw {

namespace {

struct Cursor {
    std::string_view text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!accept(c)) fail(std::string("expected '") + c + "' " + what);
    }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

    // "(x)" tensor marker, consumed atomically
    bool accept_tensor_mark() {
        skip_ws();
        size_t save = pos;
        if (accept('(')) {
            if (accept('x') && accept(')')) return true;
            pos = save;
        }
        return false;
    }

    Rational rational(bool allow_sign) {
        skip_ws();
        size_t start = pos;
        if (allow_sign && pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos < text.size() && text[pos] == '/') {
            ++pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        }
        if (pos == start) fail("expected a rational number");
        try {
            return Rational::parse(text.substr(start, pos - start));
        } catch (const std::invalid_argument& e) {
            pos = start;
            fail(e.what());
        }
    }

    bool at_family() {
        char c = peek();
        return c == 'L' || c == 'I' || c == 'G' || c == 'H';
    }

    Family family() {
        char c = peek();
        ++pos;
        switch (c) {
            case 'L': return Family::L;
            case 'I': return Family::I;
            case 'G': return Family::G;
            case 'H': return Family::H;
        }
        --pos;
        fail("expected a family letter L, I, G or H");
    }
};

// gen := fam '(' rational ')'
BasisSymbol parse_gen(const Algebra& algebra, Cursor& c) {
    Family f = c.family();
    c.expect('(', "before index");
    Rational idx = c.rational(true);
    c.expect(')', "after index");
    return algebra.symbol(f, idx);
}

// leading coefficient of a term: [rational '*'], defaults to 1
Rational parse_coeff(Cursor& c) {
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
        Rational r = c.rational(false);
        c.expect('*', "between coefficient and generator");
        return r;
    }
    return Rational(1);
}

AlgElement parse_element_impl(const Algebra& algebra, Cursor& c) {
    AlgElement out;
    bool first = true;
    while (true) {
        Rational sign(1);
        if (c.accept('-')) {
            sign = Rational(-1);
        } else if (c.accept('+')) {
            // explicit plus
        } else if (!first) {
            break;
        }
        Rational coeff = sign * parse_coeff(c);
        BasisSymbol sym = parse_gen(algebra, c);
        out.add_term(algebra.group_ptr(), sym, coeff);
        first = false;
    }
    if (first) c.fail("expected an element term");
    return out;
}

// factor := gen | '(' element ')'
AlgElement parse_factor(const Algebra& algebra, Cursor& c) {
    if (c.at_family()) {
        BasisSymbol sym = parse_gen(algebra, c);
        return AlgElement::single(algebra.group_ptr(), sym, Rational(1));
    }
    if (c.accept('(')) {
        AlgElement inner = parse_element_impl(algebra, c);
        c.expect(')', "after parenthesized element");
        return inner;
    }
    c.fail("expected a generator or parenthesized element");
}

}  // namespace

AlgElement parse_element(const Algebra& algebra, std::string_view text) {
    Cursor c{text};
    AlgElement out = parse_element_impl(algebra, c);
    if (!c.done()) c.fail("trailing input after element");
    return out;
}

TensorElement parse_tensor(const Algebra& algebra, std::string_view text) {
    Cursor c{text};
    TensorElement out;
    bool first = true;
    while (true) {
        Rational sign(1);
        if (c.accept('-')) {
            sign = Rational(-1);
        } else if (c.accept('+')) {
            // explicit plus
        } else if (!first) {
            break;
        }
        Rational coeff = sign * parse_coeff(c);
        AlgElement left = parse_factor(algebra, c);
        if (!c.accept_tensor_mark()) c.fail("expected '(x)' between tensor factors");
        AlgElement right = parse_factor(algebra, c);
        for (const auto& [a, ca] : left.terms())
            for (const auto& [b, cb] : right.terms())
                out.add_term(algebra.group_ptr(), {a, b}, coeff * ca * cb);
        first = false;
    }
    if (first) c.fail("expected a tensor term");
    if (!c.done()) c.fail("trailing input after tensor");
    return out;
}

std::vector<Rational> collect_indices(std::string_view text) {
    std::vector<Rational> out;
    Cursor c{text};
    while (!c.done()) {
        if (c.at_family()) {
            ++c.pos;
            if (c.accept('(')) {
                size_t save = c.pos;
                // skip the "(x)" marker
                if (c.accept('x') && c.accept(')')) continue;
                c.pos = save;
                try {
                    out.push_back(c.rational(true));
                } catch (const ParseError&) {
                    continue;
                }
            }
            continue;
        }
        ++c.pos;
    }
    return out;
}

}  // namespace superw
