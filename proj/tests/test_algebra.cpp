#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cgaverma/algebra.hpp"

using namespace cga;
using G = Generator;

TEST_CASE("bracket table entries") {
    CHECK(bracket(G::H, G::Kplus) == LieElement(G::Pplus, -1));
    CHECK(bracket(G::H, G::Kminus) == LieElement(G::Pminus, -1));
    CHECK(bracket(G::Pplus, G::Fminus) == LieElement(G::Theta, 4));
    CHECK(bracket(G::Pminus, G::Fplus) == LieElement(G::Theta, -4));
    CHECK(bracket(G::Kplus, G::Kminus) == LieElement(G::Theta, -2));
    CHECK(bracket(G::C, G::H) == LieElement(G::D, 2));
    CHECK(bracket(G::J, G::Fminus) == LieElement(G::Fminus, -1));
    CHECK(bracket(G::D, G::Theta).is_zero());
    for (G x : all_generators) {
        CHECK(bracket(G::Theta, x).is_zero());
        CHECK(bracket(x, x).is_zero());
    }
    // Unlisted brackets read as zero.
    CHECK(bracket(G::D, G::Kplus).is_zero());
    CHECK(bracket(G::C, G::Fplus).is_zero());
    CHECK(bracket(G::Kminus, G::Fplus).is_zero());
    CHECK(bracket(G::Fplus, G::Fminus).is_zero());
    CHECK(bracket(G::Pplus, G::Pminus).is_zero());
}

TEST_CASE("Jacobi on (H, C, K+) by hand") {
    // [[H,C],K+] = [-2D, K+] = 0
    CHECK(bracket(bracket(G::H, G::C), LieElement(G::Kplus)).is_zero());
    // [[C,K+],H] = [F+, H] = 2K+
    CHECK(bracket(bracket(G::C, G::Kplus), LieElement(G::H)) == LieElement(G::Kplus, 2));
    // [[K+,H],C] = [P+, C] = -2K+
    CHECK(bracket(bracket(G::Kplus, G::H), LieElement(G::C)) == LieElement(G::Kplus, -2));
}

TEST_CASE("exhaustive structure scan") {
    const StructureReport report = check_jacobi();
    CHECK(report.triples_checked == 1331);
    CHECK(report.pairs_checked == 121);
    CHECK(report.jacobi_violations.empty());
    CHECK(report.antisymmetry_violations.empty());
    CHECK(report.omega_violations.empty());
    CHECK(report.ok());
}

TEST_CASE("omega") {
    CHECK(omega(G::C) == G::H);
    CHECK(omega(G::Kplus) == G::Kminus);
    CHECK(omega(G::Pplus) == G::Fminus);
    CHECK(omega(G::Pminus) == G::Fplus);
    CHECK(omega(omega(G::Pplus)) == G::Pplus);
    for (G x : all_generators) {
        CHECK(omega(omega(x)) == x);
        const TriangularPart part = part_of(x);
        const TriangularPart image = part_of(omega(x));
        if (part == TriangularPart::cartan) CHECK(omega(x) == x);
        if (part == TriangularPart::raising) CHECK(image == TriangularPart::lowering);
        if (part == TriangularPart::lowering) CHECK(image == TriangularPart::raising);
    }
}

TEST_CASE("triangular grading") {
    int counts[3] = {0, 0, 0};
    for (G x : all_generators) ++counts[static_cast<int>(part_of(x))];
    CHECK(counts[0] == 4);
    CHECK(counts[1] == 3);
    CHECK(counts[2] == 4);
    for (G x : all_generators)
        for (G y : all_generators) {
            if (part_of(x) != part_of(y) || part_of(x) == TriangularPart::cartan) continue;
            for (const auto& [z, c] : bracket(x, y).terms())
                CHECK(part_of(z) != (part_of(x) == TriangularPart::raising ? TriangularPart::lowering
                                                                          : TriangularPart::raising));
        }
}

TEST_CASE("bracket table export") {
    auto table = bracket_table_json();
    CHECK(table.contains("H,Kplus"));
    CHECK(table["H,Kplus"]["Pplus"] == "(-1)/(1)");
    CHECK(table["Kplus,H"]["Pplus"] == "(1)/(1)");
    CHECK_FALSE(table.contains("D,Theta"));
    CHECK(generator_from_name("Fminus") == G::Fminus);
    CHECK_FALSE(generator_from_name("X").has_value());
}
