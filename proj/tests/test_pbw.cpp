#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cgaverma/pbw.hpp"
#include "cgaverma/weights.hpp"
#include "printed_actions.hpp"

#include <random>

using namespace cga;
using G = Generator;

namespace {

const Scalar theta = Scalar::theta();
const Scalar dd = Scalar::d();

ModuleElement mono(unsigned h, unsigned k, unsigned l, unsigned m, Scalar c = Scalar(1)) {
    return ModuleElement(Monomial{h, k, l, m}, c);
}

}  // namespace

TEST_CASE("highest-weight conditions") {
    const ModuleElement hw = highest_weight_vector();
    for (G g : {G::H, G::Pplus, G::Pminus, G::Kplus}) CHECK(act(g, hw).is_zero());
    CHECK(act(G::D, hw) == hw * dd);
    CHECK(act(G::J, hw) == hw * Scalar::r());
    CHECK(act(G::Theta, hw) == hw * theta);
}

TEST_CASE("single actions") {
    CHECK(act(G::Kplus, mono(0, 1, 0, 0)) == mono(0, 0, 0, 0, Scalar(-2) * theta));
    CHECK(act(G::H, mono(1, 0, 0, 0)) == mono(0, 0, 0, 0, Scalar(-2) * dd));
    // K- C = C K- - F-
    CHECK(act(G::Kminus, mono(1, 0, 0, 0)) == mono(1, 1, 0, 0) - mono(0, 0, 1, 0));
    for (unsigned h = 0; h <= 2; ++h)
        for (unsigned k = 0; k <= 2; ++k)
            for (unsigned l = 0; l <= 2; ++l)
                for (unsigned m = 0; m <= 2; ++m) CHECK(act(G::Fplus, mono(h, k, l, m)) == mono(h, k, l, m + 1));
}

TEST_CASE("words") {
    const ModuleElement hw = highest_weight_vector();
    CHECK(act_word({G::H, G::C}, hw) == hw * (Scalar(-2) * dd));
    CHECK(act_word({}, mono(1, 2, 0, 1)) == mono(1, 2, 0, 1));
    CHECK(act_word({G::Kplus, G::Kminus}, hw) == hw * (Scalar(-2) * theta));
    CHECK(act_word(word_of(Monomial{2, 1, 1, 3}), hw) == mono(2, 1, 1, 3));
}

TEST_CASE("engine reproduces the printed actions on all exponents <= 4") {
    int compared = 0;
    for (unsigned h = 0; h <= 4; ++h)
        for (unsigned k = 0; k <= 4; ++k)
            for (unsigned l = 0; l <= 4; ++l)
                for (unsigned m = 0; m <= 4; ++m)
                    for (G g : {G::D, G::J, G::H, G::Kplus, G::Pplus, G::Pminus}) {
                        const Monomial b{h, k, l, m};
                        const ModuleElement expected = *printed::action(g, b);
                        const ModuleElement got = act(g, ModuleElement(b));
                        if (got != expected) FAIL_CHECK(name(g), " on ", b.to_string());
                        ++compared;
                    }
    CHECK(compared == 625 * 6);
}

TEST_CASE("representation property on random monomials") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<unsigned> e(0, 4);
    std::uniform_int_distribution<int> pick(0, 10);
    for (int trial = 0; trial < 300; ++trial) {
        const G x = all_generators[pick(rng)];
        const G y = all_generators[pick(rng)];
        const ModuleElement v(Monomial{e(rng), e(rng), e(rng), e(rng)});
        const ModuleElement lhs = act(x, act(y, v)) - act(y, act(x, v));
        CHECK(lhs == act(bracket(x, y), v));
    }
}

TEST_CASE("diagonal cartan action and weight shifts") {
    for (unsigned h = 0; h <= 3; ++h)
        for (unsigned k = 0; k <= 3; ++k)
            for (unsigned l = 0; l <= 3; ++l)
                for (unsigned m = 0; m <= 3; ++m) {
                    const Monomial b{h, k, l, m};
                    const WeightLabel w = weight_of(b);
                    CHECK(act(G::D, ModuleElement(b)) == ModuleElement(b, dd - Scalar(w.p)));
                    CHECK(act(G::J, ModuleElement(b)) == ModuleElement(b, Scalar::r() - Scalar(w.q)));
                    for (G g : all_generators) {
                        const ModuleElement image = act(g, ModuleElement(b));
                        for (const auto& [target, c] : image.terms()) CHECK(weight_of(target) == shifted(w, g));
                    }
                }
}

TEST_CASE("closed-form powers") {
    CHECK(closed_form_power(1) == mono(1, 0, 0, 0, Scalar(2) * theta) - mono(0, 1, 0, 1));
    CHECK_THROWS_AS(closed_form_power(0), std::invalid_argument);

    // p = 2 by hand: (2θC - K-F+)^2 |hw> with K-F+ C = C K-F+ - F-F+.
    const ModuleElement p2 = mono(2, 0, 0, 0, Scalar(4) * theta * theta) - mono(1, 1, 0, 1, Scalar(4) * theta) +
                             mono(0, 0, 1, 1, Scalar(2) * theta) + mono(0, 2, 0, 2);
    CHECK(closed_form_power(2) == p2);

    for (int p = 1; p <= 8; ++p) {
        const ModuleElement v = closed_form_power(p);
        for (const auto& [b, c] : v.terms()) CHECK(weight_of(b) == WeightLabel{p, 0});
    }
}

TEST_CASE("closed-form power is singular exactly at d = (p-3)/2") {
    for (int p = 1; p <= 5; ++p) {
        const ModuleElement v = closed_form_power(p);
        const Point at{Rational(-2), Rational(p - 3, 2), Rational(5)};
        const RationalElement s = specialize(v, at);
        for (G g : {G::H, G::Pplus, G::Pminus, G::Kplus}) CHECK(act(g, s, at).is_zero());
        const Point off{Rational(-2), Rational(p - 2, 2), Rational(5)};
        CHECK_FALSE(act(G::H, specialize(v, off), off).is_zero());
    }
}

TEST_CASE("module element json") {
    const ModuleElement v = closed_form_power(1);
    auto j = to_json(v);
    REQUIRE(j.size() == 2);
    CHECK(j[0]["h"] == 0);
    CHECK(j[0]["k"] == 1);
    CHECK(j[0]["coef"] == "(-1)/(1)");
    CHECK(j[1]["coef"] == "(2*θ)/(1)");
    CHECK(module_element_from_json(j) == v);
}
