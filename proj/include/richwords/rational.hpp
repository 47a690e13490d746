#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace richwords {

// Exact rational number.  Exponents, thresholds and the convergent identities
// all go through this type; floating point is for display only.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long num, long den = 1);
    Rational(const mpz_class& num, const mpz_class& den);

    // Accepts "14/5", "7/3", "3"; rejects decimals and anything else.
    static Rational parse(std::string_view text);

    mpz_class num() const { return value_.get_num(); }
    mpz_class den() const { return value_.get_den(); }

    // Canonical "num/den" form, e.g. "3/1", "14/5".
    std::string str() const;
    double to_double() const { return value_.get_d(); }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.value_ + b.value_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.value_ - b.value_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.value_ * b.value_); }
    friend Rational operator/(const Rational& a, const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

private:
    explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

    mpq_class value_;
};

// Sign of r - (a + b*sqrt(2)), computed exactly.
int compare_to_sqrt2_combination(const Rational& r, const Rational& a, const Rational& b);

}  // namespace richwords
