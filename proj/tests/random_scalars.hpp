#pragma once

#include "cgaverma/scalar.hpp"

#include <random>

// Deterministic generator of small random polynomials and rational functions.
class RandomScalars {
public:
    explicit RandomScalars(unsigned seed) : rng_(seed) {}

    cga::Polynomial polynomial(int max_terms = 3, unsigned max_degree = 2) {
        std::uniform_int_distribution<int> terms(0, max_terms);
        std::uniform_int_distribution<unsigned> exp(0, max_degree);
        std::uniform_int_distribution<long> coef(-4, 4);
        std::uniform_int_distribution<long> den(1, 3);
        cga::Polynomial p;
        for (int i = terms(rng_); i > 0; --i)
            p += cga::Polynomial::monomial(cga::Rational(coef(rng_), den(rng_)),
                                           cga::Exponents{exp(rng_), exp(rng_), exp(rng_) / 2});
        return p;
    }

    cga::Scalar scalar() {
        cga::Polynomial den;
        while (den.is_zero()) den = polynomial(2, 1);
        return cga::Scalar(polynomial(), den);
    }

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    std::mt19937& engine() { return rng_; }

private:
    std::mt19937 rng_;
};
