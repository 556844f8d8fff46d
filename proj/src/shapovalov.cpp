#include "cgaverma/shapovalov.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace cga {

namespace {

PolyElement apply(Generator g, unsigned times, PolyElement v) {
    for (unsigned i = 0; i < times && !v.is_zero(); ++i) {
        PolyElement next;
        for (const auto& [mono, c] : v.terms())
            for (const auto& [target, ic] : act_monomial(g, mono).terms()) next.add(target, c * ic);
        v = std::move(next);
    }
    return v;
}

Polynomial compute_pair(const Monomial& a, const Monomial& b) {
    // omega(C^h K-^k F-^l F+^m) = P-^m P+^l K+^k H^h, applied right to left.
    PolyElement v(b);
    v = apply(omega(Generator::C), a.h, std::move(v));
    v = apply(omega(Generator::Kminus), a.k, std::move(v));
    v = apply(omega(Generator::Fminus), a.l, std::move(v));
    v = apply(omega(Generator::Fplus), a.m, std::move(v));
    return v.coefficient(Monomial{});
}

class PairCache {
public:
    const Polynomial& get(const Monomial& a, const Monomial& b) {
        {
            std::shared_lock lock(mutex_);
            auto it = table_.find({a, b});
            if (it != table_.end()) return it->second;
        }
        Polynomial value = compute_pair(a, b);
        std::unique_lock lock(mutex_);
        return table_.try_emplace({a, b}, std::move(value)).first->second;
    }

private:
    std::shared_mutex mutex_;
    std::map<std::pair<Monomial, Monomial>, Polynomial> table_;
};

PairCache& pair_cache() {
    static PairCache c;
    return c;
}

}  // namespace

const Polynomial& pair_monomials(const Monomial& a, const Monomial& b) {
    return pair_cache().get(a, b);
}

Scalar pair(const ModuleElement& u, const ModuleElement& v) {
    Scalar sum;
    for (const auto& [a, ca] : u.terms())
        for (const auto& [b, cb] : v.terms()) {
            const Polynomial& value = pair_monomials(a, b);
            if (!value.is_zero()) sum += ca * cb * Scalar(value);
        }
    return sum;
}

Rational pair(const RationalElement& u, const RationalElement& v, const Point& at) {
    require_nonzero_theta(at);
    Rational sum;
    for (const auto& [a, ca] : u.terms())
        for (const auto& [b, cb] : v.terms()) {
            const Polynomial& value = pair_monomials(a, b);
            if (!value.is_zero()) sum += ca * cb * value.evaluate(at);
        }
    return sum;
}

Matrix<Polynomial> gram_polynomial(const WeightLabel& w, const PartialPoint& at) {
    const auto basis = enumerate_basis(w);
    Matrix<Polynomial> g(basis.size(), basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) g(i, j) = pair_monomials(basis[i], basis[j]).substitute(at);
    return g;
}

GramMatrix gram(const WeightLabel& w) {
    GramMatrix out{w, enumerate_basis(w), {}};
    out.entries = gram_polynomial(w).map([](const Polynomial& p) { return Scalar(p); });
    return out;
}

Matrix<Rational> gram(const WeightLabel& w, const Point& at) {
    require_nonzero_theta(at);
    return gram_polynomial(w).map([&at](const Polynomial& p) { return p.evaluate(at); });
}

Polynomial gram_det(const WeightLabel& w, const PartialPoint& at) {
    if (at.theta && at.theta->is_zero()) throw invalid_point("theta = 0 is not allowed");
    return determinant(gram_polynomial(w, at));
}

std::vector<Rational> rational_roots_in_d(const Polynomial& det) {
    if (det.is_zero()) throw std::invalid_argument("determinant vanishes identically");
    // Group by the (theta, r) part; a rational d0 is a root iff it kills every group.
    std::map<std::pair<unsigned, unsigned>, Polynomial> groups;
    for (const auto& [e, c] : det.terms()) groups[{e[0], e[2]}].add_term(Exponents{0, e[1], 0}, c);
    Polynomial g;
    for (const auto& [key, poly] : groups) g = gcd(g, poly);
    if (g.is_constant()) return {};
    return rational_roots(g, Var::d);
}

std::vector<Rational> gram_det_roots(const WeightLabel& w) {
    return rational_roots_in_d(gram_det(w));
}

}  // namespace cga
