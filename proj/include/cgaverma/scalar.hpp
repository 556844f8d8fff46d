#pragma once

#include "cgaverma/polynomial.hpp"

#include <string>
#include <string_view>

namespace cga {

class invalid_point : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Throws invalid_point when theta is zero; every formula downstream divides by theta.
void require_nonzero_theta(const Point& at);

// Element of Q(theta, d, r) in canonical form: gcd(num, den) = 1 and the
// leading coefficient of den (graded-lex) is 1. Equal values compare equal
// structurally.
class Scalar {
public:
    Scalar() : den_(1) {}
    Scalar(const Rational& c) : num_(c), den_(1) {}
    Scalar(int c) : Scalar(Rational(c)) {}
    Scalar(long c) : Scalar(Rational(c)) {}
    Scalar(Polynomial p) : num_(std::move(p)), den_(1) {}
    Scalar(Polynomial num, Polynomial den);

    static Scalar theta() { return Scalar(Polynomial::variable(Var::theta)); }
    static Scalar d() { return Scalar(Polynomial::variable(Var::d)); }
    static Scalar r() { return Scalar(Polynomial::variable(Var::r)); }

    // Accepts "(num)/(den)" and ordinary arithmetic over integers, θ|theta, d, r.
    static Scalar parse(std::string_view text);

    [[nodiscard]] const Polynomial& num() const { return num_; }
    [[nodiscard]] const Polynomial& den() const { return den_; }
    [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
    [[nodiscard]] bool is_one() const { return num_.is_one() && den_.is_one(); }
    [[nodiscard]] bool is_polynomial() const { return den_.is_one(); }
    [[nodiscard]] bool is_constant() const { return den_.is_one() && num_.is_constant(); }
    [[nodiscard]] Rational constant_value() const { return num_.constant_value(); }

    [[nodiscard]] Scalar inverse() const;
    [[nodiscard]] Scalar pow(unsigned e) const;

    // Exact value at a point; rejects theta = 0 and poles.
    [[nodiscard]] Rational specialize(const Point& at) const;
    [[nodiscard]] Scalar substitute(const PartialPoint& at) const;

    // Always "(num)/(den)".
    [[nodiscard]] std::string to_string() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend Scalar operator-(const Scalar& a);

    friend bool operator==(const Scalar& a, const Scalar& b) = default;

private:
    void normalize();

    Polynomial num_;
    Polynomial den_;
};

}  // namespace cga
