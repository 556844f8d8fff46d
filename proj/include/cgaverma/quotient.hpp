#pragma once

#include "cgaverma/linalg.hpp"
#include "cgaverma/pbw.hpp"
#include "cgaverma/weights.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cga {

// p0 = 2d + 3 when it is a positive integer; d = -3/2 (p0 = 0) is excluded.
std::optional<int> singular_level(const Rational& d);

struct SubmoduleSlice {
    WeightLabel weight;
    std::vector<Monomial> basis;                  // enumerate_basis(weight)
    std::vector<RationalElement> spanning_vectors;  // lowering words applied to v_s
    std::vector<RationalElement> reduced_basis;     // echelonized, independent
    Subspace<Rational> span{0};

    [[nodiscard]] std::size_t dimension() const { return reduced_basis.size(); }
};

std::vector<Rational> coordinates(const RationalElement& v, const std::vector<Monomial>& basis);
RationalElement from_coordinates(const std::vector<Rational>& x, const std::vector<Monomial>& basis);

// The submodule I^d = U(g-) v_s at a specialized point, built slice by slice
// on demand. Not shared between threads; create one per worker.
class SingularSubmodule {
public:
    // Throws std::invalid_argument unless 2 at.d + 3 is a positive integer.
    explicit SingularSubmodule(const Point& at);

    [[nodiscard]] const Point& point() const { return point_; }
    [[nodiscard]] int singular_level() const { return p0_; }
    [[nodiscard]] const RationalElement& singular_vector() const { return singular_vector_; }

    const SubmoduleSlice& slice(const WeightLabel& w);

    // Basis monomials of w whose classes span V_w / (I^d ∩ V_w), chosen greedily in (l,m) order.
    std::vector<Monomial> quotient_basis(const WeightLabel& w);

    // Coordinates of v + I^d on quotient_basis(weight).
    std::vector<Rational> quotient_coordinates(const RationalElement& v, const WeightLabel& weight);

private:
    Point point_;
    int p0_;
    RationalElement singular_vector_;
    std::map<WeightLabel, SubmoduleSlice> slices_;
};

SubmoduleSlice submodule_slice(const WeightLabel& w, const Point& at);
std::vector<Monomial> quotient_basis(const WeightLabel& w, const Point& at);

struct QuotientLevel {
    WeightLabel weight;
    std::size_t verma_dimension = 0;
    std::size_t submodule_dimension = 0;
    std::size_t quotient_dimension = 0;
    std::size_t nullspace_dimension = 0;
    std::vector<RationalElement> offending;  // representatives of nonzero singular classes
};

struct QuotientCheckReport {
    Point point;
    int p0 = 0;
    int p_max = 0;
    int q_max = 0;
    std::vector<QuotientLevel> levels;

    [[nodiscard]] bool ok() const;
};

// For every weight with 1 <= p <= p_max and |q| <= q_max, solves the
// annihilation conditions in the quotient (images reduced modulo I^d) and
// records the nullspace; ok() iff all are zero.
QuotientCheckReport quotient_singular_check(const Point& at, int p_max, int q_max = 3);

// Exact closure checks on slice w: raising and lowering images of every
// spanning vector lie in the corresponding slices.
bool slice_closed_under_action(SingularSubmodule& sub, const WeightLabel& w);

enum class Branch { verma_irreducible, quotient_irreducible };

struct ClassificationVerdict {
    Rational d, r, theta;
    Branch branch = Branch::verma_irreducible;
    std::optional<int> p0;
    std::string convention;
};

ClassificationVerdict classify(const Rational& d, const Rational& r, const Rational& theta);

std::string_view name(Branch b);
nlohmann::ordered_json to_json(const ClassificationVerdict& v);
nlohmann::ordered_json to_json(const QuotientCheckReport& report);

}  // namespace cga
