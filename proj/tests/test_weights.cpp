#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cgaverma/weights.hpp"

#include <algorithm>

using namespace cga;

TEST_CASE("weight_of") {
    CHECK(weight_of({1, 2, 3, 4}) == WeightLabel{8, 1});
    CHECK(weight_of({0, 0, 0, 0}) == WeightLabel{0, 0});
    CHECK(weight_of({2, 0, 1, 3}) == WeightLabel{6, -2});
}

TEST_CASE("enumerate_basis examples") {
    CHECK(enumerate_basis({1, 0}) == std::vector<Monomial>{{1, 0, 0, 0}, {0, 1, 0, 1}});
    CHECK(enumerate_basis({0, 0}) == std::vector<Monomial>{{0, 0, 0, 0}});
    const std::vector<Monomial> expected{{2, 1, 0, 0}, {1, 2, 0, 1}, {0, 3, 0, 2}, {1, 0, 1, 0}, {0, 1, 1, 1}};
    CHECK(enumerate_basis({2, 1}) == expected);
    CHECK(enumerate_basis({1, 2}) == std::vector<Monomial>{{1, 2, 0, 0}, {0, 3, 0, 1}, {0, 1, 1, 0}});
    CHECK(enumerate_basis({0, 1}) == std::vector<Monomial>{{0, 1, 0, 0}});
    CHECK(enumerate_basis({0, -1}).empty());
    CHECK(enumerate_basis({-1, 0}).empty());
}

TEST_CASE("enumeration agrees with a brute-force scan") {
    for (int p = 0; p <= 6; ++p)
        for (int q = -4; q <= 4; ++q) {
            const WeightLabel w{p, q};
            const auto basis = enumerate_basis(w);
            std::vector<Monomial> scanned;
            const unsigned bound = static_cast<unsigned>(p + std::abs(q));
            for (unsigned h = 0; h <= bound; ++h)
                for (unsigned k = 0; k <= bound; ++k)
                    for (unsigned l = 0; l <= bound; ++l)
                        for (unsigned m = 0; m <= bound; ++m)
                            if (weight_of({h, k, l, m}) == w) scanned.push_back({h, k, l, m});
            auto by_lm = [](const Monomial& a, const Monomial& b) { return std::pair(a.l, a.m) < std::pair(b.l, b.m); };
            std::sort(scanned.begin(), scanned.end(), by_lm);
            CHECK(basis == scanned);
            CHECK(std::is_sorted(basis.begin(), basis.end(), by_lm));
            for (const auto& b : basis) CHECK(weight_of(b) == w);
        }
}

TEST_CASE("weight shifts of the generators") {
    using G = Generator;
    CHECK(weight_shift(G::H) == WeightLabel{-1, 0});
    CHECK(weight_shift(G::Kplus) == WeightLabel{0, -1});
    CHECK(weight_shift(G::Pplus) == WeightLabel{-1, -1});
    CHECK(weight_shift(G::Pminus) == WeightLabel{-1, 1});
    CHECK(weight_shift(G::C) == WeightLabel{1, 0});
    CHECK(weight_shift(G::Kminus) == WeightLabel{0, 1});
    CHECK(weight_shift(G::Fminus) == WeightLabel{1, 1});
    CHECK(weight_shift(G::Fplus) == WeightLabel{1, -1});
    for (G g : {G::D, G::J, G::Theta}) CHECK(weight_shift(g) == WeightLabel{0, 0});
    // Each pair (x, omega(x)) shifts in opposite directions.
    for (G g : all_generators) {
        const WeightLabel a = weight_shift(g), b = weight_shift(omega(g));
        CHECK(a.p == -b.p);
        CHECK(a.q == -b.q);
    }
}
