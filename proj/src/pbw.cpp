#include "cgaverma/pbw.hpp"

#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace cga {

int pbw_rank(Generator g) {
    switch (g) {
        case Generator::C: return 0;
        case Generator::Kminus: return 1;
        case Generator::Fminus: return 2;
        case Generator::Fplus: return 3;
        default: return -1;
    }
}

namespace {

constexpr std::array<Generator, 4> lowering_order{Generator::C, Generator::Kminus, Generator::Fminus,
                                                  Generator::Fplus};

unsigned& exponent(Monomial& mono, Generator g) {
    switch (g) {
        case Generator::C: return mono.h;
        case Generator::Kminus: return mono.k;
        case Generator::Fminus: return mono.l;
        case Generator::Fplus: return mono.m;
        default: throw std::logic_error("not a lowering generator");
    }
}

std::uint64_t cache_key(Generator g, const Monomial& mono) {
    constexpr unsigned limit = 1U << 15;
    if (mono.h >= limit || mono.k >= limit || mono.l >= limit || mono.m >= limit)
        throw std::out_of_range("monomial exponent too large");
    return (static_cast<std::uint64_t>(g) << 60) | (static_cast<std::uint64_t>(mono.h) << 45) |
           (static_cast<std::uint64_t>(mono.k) << 30) | (static_cast<std::uint64_t>(mono.l) << 15) | mono.m;
}

class ActionCache {
public:
    const PolyElement* find(std::uint64_t key) const {
        std::shared_lock lock(mutex_);
        auto it = table_.find(key);
        return it == table_.end() ? nullptr : &it->second;
    }

    const PolyElement& insert(std::uint64_t key, PolyElement value) {
        std::unique_lock lock(mutex_);
        // Node-based map: references survive rehashing, and entries are never erased.
        return table_.try_emplace(key, std::move(value)).first->second;
    }

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<std::uint64_t, PolyElement> table_;
};

ActionCache& cache() {
    static ActionCache c;
    return c;
}

Polynomial eigenvalue(Generator g) {
    switch (g) {
        case Generator::D: return Polynomial::variable(Var::d);
        case Generator::J: return Polynomial::variable(Var::r);
        case Generator::Theta: return Polynomial::variable(Var::theta);
        default: throw std::logic_error("not a cartan generator");
    }
}

Polynomial as_polynomial(const Scalar& c) {
    if (!c.is_polynomial()) throw std::logic_error("structure constant is not polynomial");
    return c.num();
}

PolyElement act_poly(Generator g, const PolyElement& v) {
    PolyElement out;
    for (const auto& [mono, c] : v.terms()) {
        const PolyElement& image = act_monomial(g, mono);
        for (const auto& [target, ic] : image.terms()) out.add(target, c * ic);
    }
    return out;
}

PolyElement compute_action(Generator g, const Monomial& mono) {
    if (mono.is_highest_weight()) {
        switch (part_of(g)) {
            case TriangularPart::raising: return {};
            case TriangularPart::cartan: return PolyElement(mono, eigenvalue(g));
            case TriangularPart::lowering: {
                Monomial out;
                exponent(out, g) = 1;
                return PolyElement(out);
            }
        }
    }

    Generator first = Generator::C;
    for (Generator y : lowering_order) {
        Monomial probe = mono;
        if (exponent(probe, y) > 0) {
            first = y;
            break;
        }
    }

    if (part_of(g) == TriangularPart::lowering && pbw_rank(g) <= pbw_rank(first)) {
        Monomial out = mono;
        exponent(out, g) += 1;
        return PolyElement(out);
    }

    // g y Y = y (g Y) + [g, y] Y
    Monomial rest = mono;
    exponent(rest, first) -= 1;
    PolyElement out = act_poly(first, act_monomial(g, rest));
    for (const auto& [z, c] : bracket(g, first).terms()) {
        const Polynomial coef = as_polynomial(c);
        for (const auto& [target, ic] : act_monomial(z, rest).terms()) out.add(target, coef * ic);
    }
    return out;
}

}  // namespace

ModuleElement highest_weight_vector() {
    return ModuleElement(Monomial{});
}

const PolyElement& act_monomial(Generator g, const Monomial& mono) {
    const std::uint64_t key = cache_key(g, mono);
    if (const PolyElement* hit = cache().find(key)) return *hit;
    return cache().insert(key, compute_action(g, mono));
}

ModuleElement act(Generator g, const ModuleElement& v) {
    ModuleElement out;
    for (const auto& [mono, c] : v.terms())
        for (const auto& [target, ic] : act_monomial(g, mono).terms()) out.add(target, c * Scalar(ic));
    return out;
}

ModuleElement act(const LieElement& x, const ModuleElement& v) {
    ModuleElement out;
    for (const auto& [g, c] : x.terms()) out += act(g, v) * c;
    return out;
}

RationalElement act(Generator g, const RationalElement& v, const Point& at) {
    require_nonzero_theta(at);
    RationalElement out;
    for (const auto& [mono, c] : v.terms())
        for (const auto& [target, ic] : act_monomial(g, mono).terms()) out.add(target, c * ic.evaluate(at));
    return out;
}

ModuleElement act_word(const UEAWord& w, const ModuleElement& v) {
    ModuleElement out = v;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out = act(*it, out);
    return out;
}

RationalElement act_word(const UEAWord& w, const RationalElement& v, const Point& at) {
    RationalElement out = v;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out = act(*it, out, at);
    return out;
}

UEAWord word_of(const Monomial& mono) {
    UEAWord w;
    w.insert(w.end(), mono.h, Generator::C);
    w.insert(w.end(), mono.k, Generator::Kminus);
    w.insert(w.end(), mono.l, Generator::Fminus);
    w.insert(w.end(), mono.m, Generator::Fplus);
    return w;
}

ModuleElement closed_form_power(int p) {
    if (p < 1) throw std::invalid_argument("closed_form_power requires p >= 1, got " + std::to_string(p));
    const Scalar two_theta = Scalar(2) * Scalar::theta();
    ModuleElement v = highest_weight_vector();
    for (int i = 0; i < p; ++i) v = act(Generator::C, v) * two_theta - act_word({Generator::Kminus, Generator::Fplus}, v);
    return v;
}

}  // namespace cga
