#include "circpat/rational.hpp"

#include "circpat/errors.hpp"

#include <cctype>

namespace circpat {

std::string rat_to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += "/";
        s += denominator(r).str();
    }
    return s;
}

Rational rat_from_string(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    std::size_t i = 0;
    if (s[i] == '+' || s[i] == '-') ++i;
    bool seen_slash = false;
    bool digits_before = false, digits_after = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c == '/') {
            if (seen_slash) throw ParseError("malformed rational: " + s);
            seen_slash = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            (seen_slash ? digits_after : digits_before) = true;
        } else {
            throw ParseError("malformed rational: " + s);
        }
    }
    if (!digits_before || (seen_slash && !digits_after))
        throw ParseError("malformed rational: " + s);
    try {
        return Rational(s);
    } catch (const std::exception&) {
        throw ParseError("malformed rational: " + s);
    }
}

double rat_to_double(const Rational& r) { return r.convert_to<double>(); }

BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace circpat
