#include "richwords/rational.hpp"

#include <stdexcept>

namespace richwords {

Rational::Rational(long num, long den) : value_(num, den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    value_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : value_(num, den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("rational: empty string");
    auto parse_int = [](std::string_view s) -> mpz_class {
        if (s.empty()) throw std::invalid_argument("rational: empty integer part");
        std::size_t i = 0;
        if (s[0] == '-') i = 1;
        if (i == s.size()) throw std::invalid_argument("rational: sign without digits");
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') {
                throw std::invalid_argument(
                    "rational: expected an exact fraction like 14/5, got '" + std::string(s) + "'");
            }
        }
        return mpz_class(std::string(s), 10);
    };
    std::size_t slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_int(text), 1);
    }
    mpz_class num = parse_int(text.substr(0, slash));
    mpz_class den = parse_int(text.substr(slash + 1));
    if (den <= 0) throw std::invalid_argument("rational: denominator must be positive");
    return Rational(num, den);
}

std::string Rational::str() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.value_ == 0) throw std::invalid_argument("rational: division by zero");
    return Rational(a.value_ / b.value_);
}

int compare_to_sqrt2_combination(const Rational& r, const Rational& a, const Rational& b) {
    // sign of x - b*sqrt(2) with x = r - a, all exact.
    Rational x = r - a;
    int sx = x > Rational(0) ? 1 : (x < Rational(0) ? -1 : 0);
    int sb = b > Rational(0) ? 1 : (b < Rational(0) ? -1 : 0);
    if (sb == 0) return sx;
    if (sx != sb) return sx > sb ? 1 : -1;  // includes sx == 0
    // Same nonzero sign: compare x^2 with 2 b^2.
    Rational lhs = x * x;
    Rational rhs = b * b * Rational(2);
    if (lhs == rhs) return 0;
    bool magnitude_larger = lhs > rhs;
    if (sx > 0) return magnitude_larger ? 1 : -1;
    return magnitude_larger ? -1 : 1;
}

}  // namespace richwords
