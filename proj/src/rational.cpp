#include "cgaverma/rational.hpp"

#include <cctype>

namespace cga {

Rational::Rational(long n, long d) {
    if (d == 0) throw division_by_zero("rational with zero denominator");
    value_ = mpq_class(n, d);
    value_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
    if (sgn(d) == 0) throw division_by_zero("rational with zero denominator");
    value_ = mpq_class(n, d);
    value_.canonicalize();
}

namespace {

bool valid_integer(std::string_view s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

std::string strip_plus(std::string_view s) {
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    return std::string(s);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_integer(num, true) || !valid_integer(den, false))
        throw parse_error("cannot parse rational '" + std::string(text) + "'");
    mpz_class n(strip_plus(num), 10);
    mpz_class d(std::string(den), 10);
    if (sgn(d) == 0) throw parse_error("rational '" + std::string(text) + "' has zero denominator");
    return Rational(n, d);
}

Rational Rational::inverse() const {
    if (is_zero()) throw division_by_zero("inverse of zero");
    return Rational(mpq_class(1 / value_));
}

Rational Rational::pow(unsigned e) const {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), e);
    return Rational(n, d);
}

std::string Rational::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw division_by_zero("division by zero");
    value_ /= o.value_;
    return *this;
}

Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(mpq_class(f));
}

}  // namespace cga
