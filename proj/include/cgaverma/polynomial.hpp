#pragma once

#include "cgaverma/rational.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cga {

// Indeterminates of the coefficient field, in canonical order.
enum class Var : int { theta = 0, d = 1, r = 2 };

inline constexpr int num_vars = 3;

const char* var_name(Var v);

struct Point {
    Rational theta{1};
    Rational d{0};
    Rational r{0};
};

// Values for any subset of the indeterminates; unset ones stay symbolic.
struct PartialPoint {
    std::optional<Rational> theta;
    std::optional<Rational> d;
    std::optional<Rational> r;

    [[nodiscard]] const std::optional<Rational>& operator[](Var v) const;
    [[nodiscard]] bool empty() const { return !theta && !d && !r; }
    [[nodiscard]] bool complete() const { return theta && d && r; }
};

class evaluation_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

using Exponents = std::array<unsigned, num_vars>;

// Graded-lex, theta > d > r; orders the *larger* exponent first so that the
// first map entry is the leading term.
struct GrlexDescending {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse polynomial in Q[theta, d, r]. No zero coefficients are stored.
class Polynomial {
public:
    using TermMap = std::map<Exponents, Rational, GrlexDescending>;

    Polynomial() = default;
    Polynomial(const Rational& c);
    Polynomial(int c) : Polynomial(Rational(c)) {}
    Polynomial(long c) : Polynomial(Rational(c)) {}

    static Polynomial variable(Var v, unsigned power = 1);
    static Polynomial monomial(const Rational& c, const Exponents& e);

    [[nodiscard]] const TermMap& terms() const { return terms_; }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] bool is_constant() const;
    [[nodiscard]] bool is_one() const;
    // Constant term value; only meaningful when is_constant().
    [[nodiscard]] Rational constant_value() const;

    [[nodiscard]] const Exponents& leading_exponents() const;
    [[nodiscard]] const Rational& leading_coefficient() const;
    [[nodiscard]] unsigned degree(Var v) const;
    [[nodiscard]] unsigned total_degree() const;
    [[nodiscard]] bool contains(Var v) const { return degree(v) > 0; }

    // Coefficients with respect to v: result[i] multiplies v^i and is free of v.
    [[nodiscard]] std::vector<Polynomial> coefficients_in(Var v) const;

    [[nodiscard]] Polynomial monic() const;
    [[nodiscard]] Polynomial pow(unsigned e) const;

    [[nodiscard]] Rational evaluate(const Point& at) const;
    [[nodiscard]] Polynomial substitute(const PartialPoint& at) const;

    [[nodiscard]] std::string to_string() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator-(const Polynomial& a);

    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

    void add_term(const Exponents& e, const Rational& c);

private:
    TermMap terms_;
};

// Quotient a / b when b divides a exactly, nullopt otherwise.
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);
// As divide_exact, but throws std::logic_error when the division is not exact.
Polynomial exact_quotient(const Polynomial& a, const Polynomial& b);

// Monic greatest common divisor; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

// gcd of the coefficients of a viewed as a polynomial in v.
Polynomial content_in(const Polynomial& a, Var v);

// Distinct rational roots of a univariate polynomial in v with constant
// coefficients, ascending. Throws std::invalid_argument if other variables occur.
std::vector<Rational> rational_roots(const Polynomial& a, Var v);

}  // namespace cga
