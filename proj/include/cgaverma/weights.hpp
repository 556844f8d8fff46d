#pragma once

#include "cgaverma/algebra.hpp"
#include "cgaverma/module.hpp"

#include <compare>
#include <string>
#include <vector>

namespace cga {

// Grading pair of the weight space with D-eigenvalue d - p and J-eigenvalue r - q.
struct WeightLabel {
    int p = 0;
    int q = 0;

    friend auto operator<=>(const WeightLabel&, const WeightLabel&) = default;
    [[nodiscard]] std::string to_string() const;
};

WeightLabel weight_of(const Monomial& mono);

// Change of (p, q) produced by acting with g.
WeightLabel weight_shift(Generator g);
WeightLabel shifted(const WeightLabel& w, Generator g);

// All monomials of weight w, ordered by (l, m) ascending.
std::vector<Monomial> enumerate_basis(const WeightLabel& w);

// Index of mono in enumerate_basis(weight_of(mono)) order; -1 if absent.
int basis_index(const std::vector<Monomial>& basis, const Monomial& mono);

nlohmann::ordered_json to_json(const WeightLabel& w);
nlohmann::ordered_json to_json(const Monomial& mono);

}  // namespace cga
