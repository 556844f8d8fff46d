#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cga {

class division_by_zero : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class parse_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Exact rational number in lowest terms with positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long n) : value_(n) {}
    Rational(int n) : value_(n) {}
    Rational(long n, long d);
    explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }
    Rational(const mpz_class& n, const mpz_class& d);

    static Rational parse(std::string_view text);

    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] bool is_one() const { return value_ == 1; }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(value_); }

    [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
    [[nodiscard]] const mpq_class& raw() const { return value_; }

    [[nodiscard]] Rational inverse() const;
    [[nodiscard]] Rational pow(unsigned e) const;

    // "num/den", with "/den" omitted for integers.
    [[nodiscard]] std::string to_string() const;

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class value_{0};
};

Rational factorial(unsigned n);

}  // namespace cga
