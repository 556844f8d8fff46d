#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cgaverma/singular.hpp"

using namespace cga;
using G = Generator;

namespace {

const Scalar theta = Scalar::theta();

Scalar coefficient(const ModuleElement& v, const WeightLabel& w, int l, int m) {
    auto mono = monomial_at(w, l, m);
    return mono ? v.coefficient(*mono) : Scalar();
}

// K+ recurrence 2θ(q-l+m) a_{l,m} + (p-l-m+1) a_{l,m-1} = 0 for 1 <= m <= p, l <= min(p-m, q-1+m).
bool satisfies_kplus_recurrence(const ModuleElement& v, const WeightLabel& w) {
    const int p = w.p, q = w.q;
    for (int m = 1; m <= p; ++m)
        for (int l = 0; l <= std::min(p - m, q - 1 + m); ++l) {
            Scalar lhs = Scalar(2) * theta * Scalar(q - l + m) * coefficient(v, w, l, m) +
                         Scalar(p - l - m + 1) * coefficient(v, w, l, m - 1);
            if (!lhs.is_zero()) return false;
        }
    return true;
}

bool vanishes_at_m_zero(const ModuleElement& v, const WeightLabel& w) {
    for (int l = 0; l <= std::min(w.p, w.q - 1); ++l)
        if (!coefficient(v, w, l, 0).is_zero()) return false;
    return true;
}

Scalar factorial_scalar(int n) {
    return Scalar(factorial(static_cast<unsigned>(n)));
}

}  // namespace

TEST_CASE("annihilator system at (1,0)") {
    const auto sys = build_annihilator({1, 0});
    REQUIRE(sys.domain_basis.size() == 2);
    const AnnihilatorBlock& kplus = sys.blocks[3];
    CHECK(kplus.generator == G::Kplus);
    REQUIRE(kplus.target_basis == std::vector<Monomial>{{0, 0, 0, 1}});
    CHECK(sys.rows(kplus.row_offset, 0) == Scalar(-1));
    CHECK(sys.rows(kplus.row_offset, 1) == Scalar(-2) * theta);

    const AnnihilatorBlock& h = sys.blocks[0];
    CHECK(sys.rows(h.row_offset, 0) == Scalar(-2) * Scalar::d());
    CHECK(sys.rows(h.row_offset, 1) == Scalar(4) * theta);

    const auto spec = build_annihilator({1, 0}, Point{Rational(3), Rational(-1), Rational(0)});
    CHECK(spec.rows(h.row_offset, 0) == Rational(2));
    CHECK(spec.rows(h.row_offset, 1) == Rational(12));
    CHECK_THROWS_AS(build_annihilator({1, 0}, Point{Rational(0), Rational(-1), Rational(0)}), invalid_point);
}

TEST_CASE("annihilator system at the highest weight is the zero map") {
    const auto sys = build_annihilator({0, 0});
    CHECK(sys.domain_basis.size() == 1);
    for (std::size_t i = 0; i < sys.rows.rows(); ++i) CHECK(sys.rows(i, 0).is_zero());
    CHECK(solve_singular({0, 0}, SolveMode::generic()).empty());
}

TEST_CASE("solver examples") {
    const Point p1{Rational(1), Rational(-1), Rational(0)};
    auto found = solve_singular({1, 0}, SolveMode::specialized(p1));
    REQUIRE(found.size() == 1);
    CHECK(found[0].coefficients.at({0, 0}) == Scalar(1));
    CHECK(found[0].coefficients.at({0, 1}) == Scalar(Rational(-1, 2)));
    CHECK(matches_closed_form(found[0], SolveMode::specialized(p1)));

    const Point generic_point{Rational(1, 3), Rational(7, 3), Rational(5)};
    CHECK(solve_singular({2, 1}, SolveMode::specialized(generic_point)).empty());
    CHECK(solve_singular({3, -1}, SolveMode::specialized(generic_point)).empty());

    const Point half{Rational(-2), Rational(-1, 2), Rational(5)};
    found = solve_singular({2, 0}, SolveMode::specialized(half));
    REQUIRE(found.size() == 1);
    CHECK(matches_closed_form(found[0], SolveMode::specialized(half)));
    CHECK(is_annihilated(specialize(found[0].vector(), half), half));

    // With d symbolic the condition p = 2d+3 cannot be met.
    CHECK(solve_singular({1, 0}, SolveMode::generic()).empty());
    CHECK(solve_singular({2, 1}, SolveMode::generic()).empty());
    CHECK_THROWS_AS(solve_singular({1, 0}, SolveMode::specialized(Point{Rational(0), Rational(-1), Rational(0)})),
                    invalid_point);
}

TEST_CASE("level three at d = 0 for several theta") {
    for (int t : {1, -3, 7}) {
        const Point at{Rational(t), Rational(0), Rational(1)};
        auto found = solve_singular({3, 0}, SolveMode::specialized(at));
        REQUIRE(found.size() == 1);
        CHECK(found[0].coefficients.begin()->first == std::pair(0, 0));
    }
}

TEST_CASE("q0 coefficient table") {
    auto t1 = q0_coefficient_table(1);
    CHECK(t1.size() == 2);
    CHECK(t1.at({0, 0}) == Scalar(1));
    CHECK(t1.at({0, 1}) == Scalar(Rational(-1, 2)) / theta);
    auto t2 = q0_coefficient_table(2);
    CHECK(t2.at({1, 1}) == Scalar(Rational(1, 2)) / theta);
    CHECK_THROWS_AS(q0_coefficient_table(0), std::invalid_argument);

    for (int p = 1; p <= 8; ++p) {
        const auto table = q0_coefficient_table(p);
        const WeightLabel w{p, 0};
        for (const auto& [lm, c] : table) CHECK(monomial_at(w, lm.first, lm.second).has_value());
        CHECK(table.size() == enumerate_basis(w).size());

        // Independent route: diagonal chain a_{l,l}, then the m-chain from each diagonal entry.
        for (const auto& [lm, c] : table) {
            const int l = lm.first, m = lm.second;
            Scalar diag = (Scalar(1) / (Scalar(4) * theta)).pow(static_cast<unsigned>(l)) * factorial_scalar(p) /
                          (factorial_scalar(l) * factorial_scalar(p - 2 * l));
            Scalar chain = (Scalar(-1) / (Scalar(2) * theta)).pow(static_cast<unsigned>(m - l)) *
                           factorial_scalar(p - 2 * l) / (factorial_scalar(p - l - m) * factorial_scalar(m - l)) * diag;
            CHECK(c == chain);
        }
    }
}

TEST_CASE("q0 table satisfies the P+ and H recurrences") {
    for (int p = 1; p <= 7; ++p) {
        const auto table = q0_coefficient_table(p);
        auto a = [&](int l, int m) {
            auto it = table.find({l, m});
            return it == table.end() ? Scalar() : it->second;
        };
        const Scalar d = Scalar(Rational(p - 3, 2));
        for (int l = 0; l <= p; ++l)
            for (int m = 0; m <= p; ++m) {
                Scalar pplus = Scalar(4 * (l + 1)) * theta * a(l + 1, m) +
                               Scalar(4 * (p - l - m) * (m - l)) * theta * a(l, m) +
                               Scalar((p - l - m + 1) * (p - l - m)) * a(l, m - 1);
                CHECK(pplus.is_zero());
                Scalar h = Scalar(-2 * (l + 1)) * a(l + 1, m) +
                           Scalar(p - l - m) * (Scalar(p + l + m - 1) - Scalar(2) * d) * a(l, m) +
                           Scalar(4 * (m - l + 1) * (m + 1)) * theta * a(l, m + 1);
                CHECK(h.is_zero());
            }
    }
}

TEST_CASE("K+ kernel for q > 0") {
    CHECK(kplus_kernel({1, 2}).empty());
    CHECK_THROWS_AS(kplus_kernel({2, 0}), std::invalid_argument);

    const auto k21 = kplus_kernel({2, 1});
    REQUIRE(k21.size() == 1);
    CHECK(act(G::Kplus, k21[0]).is_zero());

    for (int p = 0; p <= 6; ++p)
        for (int q = 1; q <= 4; ++q) {
            const WeightLabel w{p, q};
            const auto kernel = kplus_kernel(w);
            if (p < q) CHECK(kernel.empty());

            // Dimension agrees with the exact nullspace of the K+ block.
            const auto sys = build_annihilator(w);
            const AnnihilatorBlock& block = sys.blocks[3];
            Matrix<Scalar> kplus(block.target_basis.size(), sys.domain_basis.size());
            for (std::size_t i = 0; i < kplus.rows(); ++i)
                for (std::size_t j = 0; j < kplus.cols(); ++j) kplus(i, j) = sys.rows(block.row_offset + i, j);
            const auto null = nullspace(kplus);
            CHECK(null.size() == kernel.size());

            for (const auto& v : kernel) {
                CHECK(act(G::Kplus, v).is_zero());
                CHECK_FALSE(act(G::Pplus, v).is_zero());
                CHECK(satisfies_kplus_recurrence(v, w));
                CHECK(vanishes_at_m_zero(v, w));
            }
            for (const auto& x : null) {
                SingularVectorCandidate c{w, {}};
                for (std::size_t j = 0; j < x.size(); ++j)
                    if (!x[j].is_zero()) c.coefficients[lm_of(sys.domain_basis[j])] = x[j];
                CHECK(satisfies_kplus_recurrence(c.vector(), w));
                CHECK(vanishes_at_m_zero(c.vector(), w));
            }
        }
}

TEST_CASE("classify_level") {
    CHECK(classify_level({3, 0}, Rational(0)) == LevelExpectation::one);
    CHECK(classify_level({3, 0}, Rational(1)) == LevelExpectation::none);
    CHECK(classify_level({4, 2}, Rational(1, 2)) == LevelExpectation::none);
    CHECK(classify_level({0, 0}, Rational(-3, 2)) == LevelExpectation::none);
    CHECK(classify_level({1, 0}, Rational(-1)) == LevelExpectation::one);
}

TEST_CASE("solver outputs are annihilated and normalized") {
    for (int p = 1; p <= 5; ++p)
        for (const Rational& t : {Rational(1), Rational(-2), Rational(1, 3)}) {
            const Point at{t, Rational(p - 3, 2), Rational(0)};
            for (const auto& v : solve_singular({p, 0}, SolveMode::specialized(at))) {
                CHECK(is_annihilated(specialize(v.vector(), at), at));
                CHECK(v.coefficients.begin()->second == Scalar(1));
            }
        }
}

TEST_CASE("candidate json") {
    const Point at{Rational(1), Rational(-1), Rational(0)};
    auto found = solve_singular({1, 0}, SolveMode::specialized(at));
    REQUIRE(found.size() == 1);
    auto j = to_json(found[0]);
    CHECK(j["weight"]["p"] == 1);
    CHECK(j["coefficients"][1]["coef"] == "(-1/2)/(1)");
}
