#pragma once

#include "cgaverma/linalg.hpp"
#include "cgaverma/pbw.hpp"
#include "cgaverma/weights.hpp"

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace cga {

inline constexpr std::array<Generator, 4> annihilator_generators{Generator::H, Generator::Pplus, Generator::Pminus,
                                                                 Generator::Kplus};

// Generic mode keeps theta, d, r symbolic; specialized mode works at a rational point.
struct SolveMode {
    std::optional<Point> point;

    static SolveMode generic() { return {}; }
    static SolveMode specialized(const Point& at) { return {at}; }
    [[nodiscard]] bool is_generic() const { return !point.has_value(); }
};

struct AnnihilatorBlock {
    Generator generator;
    WeightLabel target;
    std::vector<Monomial> target_basis;
    std::size_t row_offset;
};

// Stacked matrices of H, P+, P-, K+ restricted to one weight space; column j
// is the image of domain_basis[j].
template <class T>
struct AnnihilatorSystem {
    WeightLabel weight;
    std::vector<Monomial> domain_basis;
    std::array<AnnihilatorBlock, 4> blocks;
    Matrix<T> rows;
};

AnnihilatorSystem<Scalar> build_annihilator(const WeightLabel& w);
AnnihilatorSystem<Rational> build_annihilator(const WeightLabel& w, const Point& at);

using CoefficientTable = std::map<std::pair<int, int>, Scalar>;  // (l, m) -> a_{l,m}

struct SingularVectorCandidate {
    WeightLabel weight;
    CoefficientTable coefficients;

    [[nodiscard]] ModuleElement vector() const;
};

// Basis of the singular vectors of weight w: the nullspace of the stacked
// annihilator system, each vector scaled so its first (l,m)-lex coefficient
// is 1. Level p = 0 holds only the highest-weight vector itself and yields
// an empty list.
std::vector<SingularVectorCandidate> solve_singular(const WeightLabel& w, const SolveMode& mode);

// Coefficient table of the q = 0 singular vector at level p with a_{0,0} = 1:
// a_{l,m} = (-1/2)^{m+l} theta^{-m} p! / (l! (m-l)! (p-l-m)!).
CoefficientTable q0_coefficient_table(int p);

// The vectors |v^l>, q <= l <= floor((p+q)/2), spanning ker(K+) on the (p,q)
// weight space for q >= 1. Throws std::invalid_argument for q < 1.
std::vector<ModuleElement> kplus_kernel(const WeightLabel& w);

enum class LevelExpectation { none, one };

// Predicted count: one singular vector iff q = 0, p = 2d + 3 and p >= 1.
LevelExpectation classify_level(const WeightLabel& w, const Rational& d);

// Some c with a = c * b, or nullopt if not proportional (both zero -> 1).
std::optional<Scalar> proportionality(const ModuleElement& a, const ModuleElement& b);
std::optional<Rational> proportionality(const RationalElement& a, const RationalElement& b);

// (l, m) coordinates of the monomial |h,k,l,m>.
inline std::pair<int, int> lm_of(const Monomial& mono) {
    return {static_cast<int>(mono.l), static_cast<int>(mono.m)};
}
// The monomial of weight w with the given (l, m); nullopt when out of range.
std::optional<Monomial> monomial_at(const WeightLabel& w, int l, int m);

// True when every raising generator H, P+, P-, K+ annihilates v.
bool is_annihilated(const ModuleElement& v);
bool is_annihilated(const RationalElement& v, const Point& at);

bool matches_closed_form(const SingularVectorCandidate& candidate, const SolveMode& mode);

nlohmann::ordered_json to_json(const SingularVectorCandidate& c);

}  // namespace cga
