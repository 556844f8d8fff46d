#include "cgaverma/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cga {

const char* var_name(Var v) {
    switch (v) {
        case Var::theta: return "θ";
        case Var::d: return "d";
        case Var::r: return "r";
    }
    return "?";
}

const std::optional<Rational>& PartialPoint::operator[](Var v) const {
    switch (v) {
        case Var::theta: return theta;
        case Var::d: return d;
        case Var::r: return r;
    }
    throw std::out_of_range("bad variable");
}

bool GrlexDescending::operator()(const Exponents& a, const Exponents& b) const {
    unsigned da = a[0] + a[1] + a[2];
    unsigned db = b[0] + b[1] + b[2];
    if (da != db) return da > db;
    return a > b;
}

Polynomial::Polynomial(const Rational& c) {
    if (!c.is_zero()) terms_.emplace(Exponents{0, 0, 0}, c);
}

Polynomial Polynomial::variable(Var v, unsigned power) {
    Exponents e{0, 0, 0};
    e[static_cast<int>(v)] = power;
    return monomial(Rational(1), e);
}

Polynomial Polynomial::monomial(const Rational& c, const Exponents& e) {
    Polynomial p;
    if (!c.is_zero()) p.terms_.emplace(e, c);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0, 0});
}

bool Polynomial::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0, 0} &&
           terms_.begin()->second.is_one();
}

Rational Polynomial::constant_value() const {
    auto it = terms_.find(Exponents{0, 0, 0});
    return it == terms_.end() ? Rational(0) : it->second;
}

const Exponents& Polynomial::leading_exponents() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.begin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
    if (terms_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return terms_.begin()->second;
}

unsigned Polynomial::degree(Var v) const {
    unsigned deg = 0;
    for (const auto& [e, c] : terms_) deg = std::max(deg, e[static_cast<int>(v)]);
    return deg;
}

unsigned Polynomial::total_degree() const {
    return terms_.empty() ? 0 : leading_exponents()[0] + leading_exponents()[1] + leading_exponents()[2];
}

std::vector<Polynomial> Polynomial::coefficients_in(Var v) const {
    int idx = static_cast<int>(v);
    std::vector<Polynomial> out(degree(v) + 1);
    for (const auto& [e, c] : terms_) {
        Exponents rest = e;
        rest[idx] = 0;
        out[e[idx]].add_term(rest, c);
    }
    return out;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return *this * leading_coefficient().inverse();
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result(1);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e > 0) base *= base;
    }
    return result;
}

Rational Polynomial::evaluate(const Point& at) const {
    const std::array<const Rational*, num_vars> values{&at.theta, &at.d, &at.r};
    Rational sum;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < num_vars; ++i)
            if (e[i] > 0) t *= values[i]->pow(e[i]);
        sum += t;
    }
    return sum;
}

Polynomial Polynomial::substitute(const PartialPoint& at) const {
    if (at.empty()) return *this;
    Polynomial out;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        Exponents rest = e;
        for (int i = 0; i < num_vars; ++i) {
            const auto& value = at[static_cast<Var>(i)];
            if (value && e[i] > 0) {
                t *= value->pow(e[i]);
                rest[i] = 0;
            }
        }
        out.add_term(rest, t);
    }
    return out;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) out += "+";
        first = false;
        out += c.to_string();
        for (int i = 0; i < num_vars; ++i) {
            if (e[i] == 0) continue;
            out += "*";
            out += var_name(static_cast<Var>(i));
            if (e[i] > 1) out += "^" + std::to_string(e[i]);
        }
    }
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            out.add_term(Exponents{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coef] : terms_) coef *= c;
    return *this;
}

Polynomial operator-(const Polynomial& a) {
    Polynomial out = a;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw division_by_zero("polynomial division by zero");
    if (b.is_constant()) return a * b.constant_value().inverse();
    Polynomial quotient;
    Polynomial remainder = a;
    const Exponents& lb = b.leading_exponents();
    const Rational inv_lc = b.leading_coefficient().inverse();
    while (!remainder.is_zero()) {
        const Exponents& lr = remainder.leading_exponents();
        Exponents shift{};
        for (int i = 0; i < num_vars; ++i) {
            if (lr[i] < lb[i]) return std::nullopt;
            shift[i] = lr[i] - lb[i];
        }
        Polynomial t = Polynomial::monomial(remainder.leading_coefficient() * inv_lc, shift);
        quotient += t;
        remainder -= t * b;
    }
    return quotient;
}

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
    auto q = divide_exact(a, b);
    if (!q) throw std::logic_error("inexact polynomial division: (" + a.to_string() + ")/(" + b.to_string() + ")");
    return *std::move(q);
}

namespace {

std::optional<Var> first_variable(const Polynomial& a, const Polynomial& b) {
    for (int i = 0; i < num_vars; ++i) {
        auto v = static_cast<Var>(i);
        if (a.contains(v) || b.contains(v)) return v;
    }
    return std::nullopt;
}

Polynomial primitive_part(const Polynomial& a, Var v) {
    if (a.is_zero()) return a;
    return exact_quotient(a, content_in(a, v)).monic();
}

// Pseudo-remainder of a by b in the variable v (coefficients in the other variables).
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, Var v) {
    const unsigned db = b.degree(v);
    const Polynomial lb = b.coefficients_in(v).back();
    Polynomial rem = a;
    while (!rem.is_zero() && rem.degree(v) >= db) {
        const unsigned dr = rem.degree(v);
        Polynomial lr = rem.coefficients_in(v).back();
        rem = lb * rem - lr * Polynomial::variable(v, dr - db) * b;
    }
    return rem;
}

}  // namespace

Polynomial content_in(const Polynomial& a, Var v) {
    Polynomial g;
    for (const auto& c : a.coefficients_in(v)) {
        if (c.is_zero()) continue;
        g = gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return Polynomial(1);
    if (a == b) return a.monic();

    const Var v = *first_variable(a, b);
    if (!a.contains(v)) return gcd(a, content_in(b, v));
    if (!b.contains(v)) return gcd(content_in(a, v), b);

    const Polynomial ca = content_in(a, v);
    const Polynomial cb = content_in(b, v);
    const Polynomial content = gcd(ca, cb);

    Polynomial x = exact_quotient(a, ca).monic();
    Polynomial y = exact_quotient(b, cb).monic();
    if (x.degree(v) < y.degree(v)) std::swap(x, y);
    while (!y.is_zero()) {
        if (y.degree(v) == 0) {
            x = Polynomial(1);
            break;
        }
        Polynomial rem = pseudo_remainder(x, y, v);
        x = std::move(y);
        y = primitive_part(rem, v);
    }
    return (content * primitive_part(x, v)).monic();
}

namespace {

void collect_prime_factors(mpz_class n, std::set<mpz_class>& primes);

mpz_class pollard_rho(const mpz_class& n) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (unsigned long c = 1;; ++c) {
        mpz_class x = 2, y = 2, g = 1;
        auto step = [&](const mpz_class& z) { return mpz_class((z * z + c) % n); };
        while (g == 1) {
            x = step(x);
            y = step(step(y));
            mpz_class diff = abs(x - y);
            mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (g != n) return g;
    }
}

void collect_prime_factors(mpz_class n, std::set<mpz_class>& primes) {
    n = abs(n);
    for (unsigned long p = 2; p < 10000 && n > 1; ++p) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            primes.insert(mpz_class(p));
            while (mpz_divisible_ui_p(n.get_mpz_t(), p)) n /= p;
        }
    }
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 40) > 0) {
        primes.insert(n);
        return;
    }
    mpz_class f = pollard_rho(n);
    collect_prime_factors(f, primes);
    collect_prime_factors(n / f, primes);
}

std::vector<mpz_class> divisors(const mpz_class& n) {
    std::set<mpz_class> primes;
    collect_prime_factors(n, primes);
    std::vector<mpz_class> out{1};
    mpz_class rest = abs(n);
    for (const auto& p : primes) {
        std::size_t base = out.size();
        mpz_class power = 1;
        while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
            rest /= p;
            power *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
        }
    }
    return out;
}

Polynomial derivative(const Polynomial& a, Var v) {
    int idx = static_cast<int>(v);
    Polynomial out;
    for (const auto& [e, c] : a.terms()) {
        if (e[idx] == 0) continue;
        Exponents lowered = e;
        lowered[idx] -= 1;
        out.add_term(lowered, c * Rational(static_cast<long>(e[idx])));
    }
    return out;
}

}  // namespace

std::vector<Rational> rational_roots(const Polynomial& a, Var v) {
    for (int i = 0; i < num_vars; ++i)
        if (static_cast<Var>(i) != v && a.contains(static_cast<Var>(i)))
            throw std::invalid_argument("rational_roots: polynomial is not univariate in " + std::string(var_name(v)));
    if (a.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");

    std::vector<Rational> roots;
    // Square-free part keeps the candidate set small.
    Polynomial f = exact_quotient(a, gcd(a, derivative(a, v)));
    auto coeffs = f.coefficients_in(v);
    std::size_t low = 0;
    while (coeffs[low].is_zero()) ++low;
    if (low > 0) roots.emplace_back(0);

    // Clear denominators to an integer polynomial.
    mpz_class lcm = 1;
    for (const auto& c : coeffs) {
        if (c.is_zero()) continue;
        mpz_class den = c.constant_value().denominator();
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }
    std::vector<mpz_class> ints;
    for (std::size_t i = low; i < coeffs.size(); ++i)
        ints.push_back((coeffs[i].constant_value() * Rational(lcm, 1)).numerator());

    if (ints.size() > 1) {
        auto evaluate = [&](const Rational& x) {
            Rational sum;
            for (std::size_t i = ints.size(); i-- > 0;) sum = sum * x + Rational(ints[i], 1);
            return sum;
        };
        for (const auto& num : divisors(ints.front())) {
            for (const auto& den : divisors(ints.back())) {
                for (int s : {1, -1}) {
                    Rational candidate(num * s, den);
                    if (evaluate(candidate).is_zero() &&
                        std::find(roots.begin(), roots.end(), candidate) == roots.end())
                        roots.push_back(candidate);
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace cga
