#include "cgaverma/scalar.hpp"

#include <cctype>

namespace cga {

void require_nonzero_theta(const Point& at) {
    if (at.theta.is_zero()) throw invalid_point("theta = 0 is not allowed (central element must act nondegenerately)");
}

Scalar::Scalar(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw division_by_zero("scalar with zero denominator");
    normalize();
}

void Scalar::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial(1);
        return;
    }
    if (!den_.is_constant()) {
        Polynomial g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = exact_quotient(num_, g);
            den_ = exact_quotient(den_, g);
        }
    }
    if (!den_.leading_coefficient().is_one()) {
        Rational inv = den_.leading_coefficient().inverse();
        num_ *= inv;
        den_ *= inv;
    }
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw division_by_zero("inverse of zero scalar");
    return Scalar(den_, num_);
}

Scalar Scalar::pow(unsigned e) const {
    Scalar out;
    out.num_ = num_.pow(e);
    out.den_ = den_.pow(e);
    return out;
}

Rational Scalar::specialize(const Point& at) const {
    require_nonzero_theta(at);
    Rational den = den_.evaluate(at);
    if (den.is_zero()) {
        std::string factor = den_.to_string();
        const std::array<std::pair<Var, const Rational*>, num_vars> values{
            {{Var::theta, &at.theta}, {Var::d, &at.d}, {Var::r, &at.r}}};
        for (const auto& [v, value] : values) {
            Polynomial linear = Polynomial::variable(v) - Polynomial(*value);
            if (divide_exact(den_, linear)) {
                factor = linear.to_string();
                break;
            }
        }
        throw evaluation_error("pole: denominator factor (" + factor + ") vanishes at θ=" + at.theta.to_string() +
                               ", d=" + at.d.to_string() + ", r=" + at.r.to_string());
    }
    return num_.evaluate(at) / den;
}

Scalar Scalar::substitute(const PartialPoint& at) const {
    if (at.theta && at.theta->is_zero()) throw invalid_point("theta = 0 is not allowed");
    Polynomial den = den_.substitute(at);
    if (den.is_zero()) throw evaluation_error("pole: denominator (" + den_.to_string() + ") vanishes under substitution");
    return Scalar(num_.substitute(at), den);
}

std::string Scalar::to_string() const {
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (den_ == o.den_) {
        num_ += o.num_;
        if (!den_.is_one()) normalize();
        else if (num_.is_zero()) den_ = Polynomial(1);
        return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    return *this += -o;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    num_ *= o.num_;
    if (num_.is_zero()) {
        den_ = Polynomial(1);
        return *this;
    }
    if (den_.is_one() && o.den_.is_one()) return *this;
    den_ *= o.den_;
    normalize();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    return *this *= o.inverse();
}

Scalar operator-(const Scalar& a) {
    Scalar out = a;
    out.num_ = -out.num_;
    return out;
}

namespace {

// Recursive-descent parser over the field operations.
class ScalarParser {
public:
    explicit ScalarParser(std::string_view text) : text_(text) {}

    Scalar parse() {
        Scalar value = expression();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return value;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw parse_error("cannot parse scalar '" + std::string(text_) + "': " + why + " at offset " +
                          std::to_string(pos_));
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(std::string_view token) {
        skip_space();
        if (text_.substr(pos_, token.size()) == token) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    Scalar expression() {
        Scalar value = term();
        for (;;) {
            if (accept("+")) value += term();
            else if (accept("-")) value -= term();
            else return value;
        }
    }

    Scalar term() {
        Scalar value = unary();
        for (;;) {
            if (accept("*")) value *= unary();
            else if (accept("/")) {
                Scalar divisor = unary();
                if (divisor.is_zero()) fail("division by zero");
                value /= divisor;
            } else return value;
        }
    }

    Scalar unary() {
        if (accept("-")) return -unary();
        if (accept("+")) return unary();
        return power();
    }

    Scalar power() {
        Scalar base = atom();
        if (accept("^")) {
            skip_space();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            base = base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
        }
        return base;
    }

    Scalar atom() {
        skip_space();
        if (accept("(")) {
            Scalar inner = expression();
            if (!accept(")")) fail("expected ')'");
            return inner;
        }
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return Scalar(Rational(mpq_class(mpz_class(std::string(text_.substr(start, pos_ - start)), 10))));
        }
        if (accept("θ") || accept("theta")) return Scalar::theta();
        if (accept("d")) return Scalar::d();
        if (accept("r")) return Scalar::r();
        fail("unexpected token");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(std::string_view text) {
    return ScalarParser(text).parse();
}

}  // namespace cga
