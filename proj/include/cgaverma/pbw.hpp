#pragma once

#include "cgaverma/algebra.hpp"
#include "cgaverma/module.hpp"

#include <vector>

namespace cga {

// Ordered product of generators; acts on a vector right to left.
using UEAWord = std::vector<Generator>;

// Position of a lowering generator in the PBW order C < K- < F- < F+.
int pbw_rank(Generator g);

ModuleElement highest_weight_vector();

// Action of g on a single basis monomial, with polynomial coefficients in
// (theta, d, r). Computed by commuting g rightward with the bracket table and
// memoized; safe to call concurrently.
const PolyElement& act_monomial(Generator g, const Monomial& mono);

ModuleElement act(Generator g, const ModuleElement& v);
ModuleElement act(const LieElement& x, const ModuleElement& v);
RationalElement act(Generator g, const RationalElement& v, const Point& at);

ModuleElement act_word(const UEAWord& w, const ModuleElement& v);
RationalElement act_word(const UEAWord& w, const RationalElement& v, const Point& at);

// The word C^h K-^k F-^l F+^m.
UEAWord word_of(const Monomial& mono);

// Normal-ordered (2 theta C - K- F+)^p |hw>, built by p successive applications.
// Throws std::invalid_argument for p < 1.
ModuleElement closed_form_power(int p);

}  // namespace cga
