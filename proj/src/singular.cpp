#include "cgaverma/singular.hpp"

#include <stdexcept>

namespace cga {

namespace {

template <class T, class Convert>
AnnihilatorSystem<T> build_system(const WeightLabel& w, Convert convert) {
    AnnihilatorSystem<T> sys;
    sys.weight = w;
    sys.domain_basis = enumerate_basis(w);
    std::size_t offset = 0;
    for (std::size_t b = 0; b < annihilator_generators.size(); ++b) {
        Generator g = annihilator_generators[b];
        WeightLabel target = shifted(w, g);
        sys.blocks[b] = AnnihilatorBlock{g, target, enumerate_basis(target), offset};
        offset += sys.blocks[b].target_basis.size();
    }
    sys.rows = Matrix<T>(offset, sys.domain_basis.size());
    for (const auto& block : sys.blocks) {
        for (std::size_t j = 0; j < sys.domain_basis.size(); ++j) {
            for (const auto& [target, c] : act_monomial(block.generator, sys.domain_basis[j]).terms()) {
                int i = basis_index(block.target_basis, target);
                if (i < 0) throw std::logic_error("action left the expected weight space");
                sys.rows(block.row_offset + static_cast<std::size_t>(i), j) = convert(c);
            }
        }
    }
    return sys;
}

template <class T>
SingularVectorCandidate to_candidate(const WeightLabel& w, const std::vector<Monomial>& basis,
                                     const std::vector<T>& x) {
    SingularVectorCandidate c{w, {}};
    for (std::size_t j = 0; j < basis.size(); ++j)
        if (!x[j].is_zero()) c.coefficients[lm_of(basis[j])] = Scalar(x[j]);
    return c;
}

}  // namespace

AnnihilatorSystem<Scalar> build_annihilator(const WeightLabel& w) {
    return build_system<Scalar>(w, [](const Polynomial& c) { return Scalar(c); });
}

AnnihilatorSystem<Rational> build_annihilator(const WeightLabel& w, const Point& at) {
    require_nonzero_theta(at);
    return build_system<Rational>(w, [&at](const Polynomial& c) { return c.evaluate(at); });
}

ModuleElement SingularVectorCandidate::vector() const {
    ModuleElement v;
    for (const auto& [lm, c] : coefficients) {
        auto mono = monomial_at(weight, lm.first, lm.second);
        if (!mono) throw std::logic_error("coefficient outside the weight space");
        v.add(*mono, c);
    }
    return v;
}

std::vector<SingularVectorCandidate> solve_singular(const WeightLabel& w, const SolveMode& mode) {
    std::vector<SingularVectorCandidate> out;
    if (w.p <= 0) return out;
    if (mode.is_generic()) {
        auto sys = build_annihilator(w);
        for (const auto& x : nullspace(sys.rows)) out.push_back(to_candidate(w, sys.domain_basis, x));
    } else {
        auto sys = build_annihilator(w, *mode.point);
        for (const auto& x : nullspace(sys.rows)) out.push_back(to_candidate(w, sys.domain_basis, x));
    }
    return out;
}

CoefficientTable q0_coefficient_table(int p) {
    if (p < 1) throw std::invalid_argument("q0_coefficient_table requires p >= 1");
    CoefficientTable table;
    const Rational pf = factorial(static_cast<unsigned>(p));
    for (int m = 0; m <= p; ++m) {
        for (int l = 0; l <= std::min(m, p - m); ++l) {
            Rational c = Rational(-1, 2).pow(static_cast<unsigned>(m + l)) * pf /
                         (factorial(static_cast<unsigned>(l)) * factorial(static_cast<unsigned>(m - l)) *
                          factorial(static_cast<unsigned>(p - l - m)));
            table[{l, m}] = Scalar(c) / Scalar::theta().pow(static_cast<unsigned>(m));
        }
    }
    return table;
}

std::vector<ModuleElement> kplus_kernel(const WeightLabel& w) {
    if (w.q < 1) throw std::invalid_argument("kplus_kernel requires q >= 1");
    std::vector<ModuleElement> out;
    const Scalar ratio = Scalar(Rational(-1, 2)) / Scalar::theta();
    for (int l = w.q; 2 * l <= w.p + w.q; ++l) {
        ModuleElement v;
        for (int m = l - w.q; m <= w.p - l; ++m) {
            auto mono = monomial_at(w, l, m);
            Rational denom = factorial(static_cast<unsigned>(w.p - l - m)) * factorial(static_cast<unsigned>(w.q - l + m));
            v.add(*mono, ratio.pow(static_cast<unsigned>(m)) * Scalar(denom.inverse()));
        }
        out.push_back(std::move(v));
    }
    return out;
}

LevelExpectation classify_level(const WeightLabel& w, const Rational& d) {
    if (w.q != 0 || w.p < 1) return LevelExpectation::none;
    return Rational(2) * d + Rational(3) == Rational(w.p) ? LevelExpectation::one : LevelExpectation::none;
}

namespace {

template <class Coef>
std::optional<Coef> ratio_of(const BasicModuleElement<Coef>& a, const BasicModuleElement<Coef>& b) {
    if (a.is_zero() && b.is_zero()) return Coef(1);
    if (a.is_zero() || b.is_zero()) return std::nullopt;
    const auto& [mono, cb] = *b.terms().begin();
    Coef factor = a.coefficient(mono) / cb;
    if (factor.is_zero()) return std::nullopt;
    if (b * factor != a) return std::nullopt;
    return factor;
}

}  // namespace

std::optional<Scalar> proportionality(const ModuleElement& a, const ModuleElement& b) {
    return ratio_of(a, b);
}

std::optional<Rational> proportionality(const RationalElement& a, const RationalElement& b) {
    return ratio_of(a, b);
}

std::optional<Monomial> monomial_at(const WeightLabel& w, int l, int m) {
    const int h = w.p - l - m;
    const int k = w.q - l + m;
    if (l < 0 || m < 0 || h < 0 || k < 0) return std::nullopt;
    return Monomial{static_cast<unsigned>(h), static_cast<unsigned>(k), static_cast<unsigned>(l),
                    static_cast<unsigned>(m)};
}

bool is_annihilated(const ModuleElement& v) {
    for (Generator g : annihilator_generators)
        if (!act(g, v).is_zero()) return false;
    return true;
}

bool is_annihilated(const RationalElement& v, const Point& at) {
    for (Generator g : annihilator_generators)
        if (!act(g, v, at).is_zero()) return false;
    return true;
}

bool matches_closed_form(const SingularVectorCandidate& candidate, const SolveMode& mode) {
    if (candidate.weight.q != 0 || candidate.weight.p < 1) return false;
    const ModuleElement closed = closed_form_power(candidate.weight.p);
    if (mode.is_generic()) return proportionality(candidate.vector(), closed).has_value();
    return proportionality(specialize(candidate.vector(), *mode.point), specialize(closed, *mode.point)).has_value();
}

nlohmann::ordered_json to_json(const SingularVectorCandidate& c) {
    nlohmann::ordered_json coefs = nlohmann::ordered_json::array();
    for (const auto& [lm, value] : c.coefficients)
        coefs.push_back({{"l", lm.first}, {"m", lm.second}, {"coef", value.to_string()}});
    return {{"weight", to_json(c.weight)}, {"coefficients", coefs}, {"vector", to_json(c.vector())}};
}

}  // namespace cga
