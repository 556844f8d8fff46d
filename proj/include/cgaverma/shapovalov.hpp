#pragma once

#include "cgaverma/linalg.hpp"
#include "cgaverma/pbw.hpp"
#include "cgaverma/weights.hpp"

#include <vector>

namespace cga {

// The contravariant form on V^{d,r}: (A|hw>, B|hw>) is the highest-weight
// coefficient of omega(A) B |hw>, normalized by (|hw>, |hw>) = 1.
const Polynomial& pair_monomials(const Monomial& a, const Monomial& b);

Scalar pair(const ModuleElement& u, const ModuleElement& v);
Rational pair(const RationalElement& u, const RationalElement& v, const Point& at);

struct GramMatrix {
    WeightLabel weight;
    std::vector<Monomial> basis;
    Matrix<Scalar> entries;
};

GramMatrix gram(const WeightLabel& w);
Matrix<Polynomial> gram_polynomial(const WeightLabel& w, const PartialPoint& at = {});
Matrix<Rational> gram(const WeightLabel& w, const Point& at);

// Determinant of the Gram matrix, with any given variables substituted first.
Polynomial gram_det(const WeightLabel& w, const PartialPoint& at = {});

// Rational values of d at which det vanishes identically in the remaining
// variables. Throws std::invalid_argument when det is the zero polynomial.
std::vector<Rational> rational_roots_in_d(const Polynomial& det);
std::vector<Rational> gram_det_roots(const WeightLabel& w);

}  // namespace cga
