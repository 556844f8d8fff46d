#pragma once

#include "cgaverma/quotient.hpp"
#include "cgaverma/singular.hpp"

#include <functional>
#include <json.hpp>
#include <vector>

namespace cga {

// Parameter grid shared by the grid checks.
std::vector<Rational> grid_d_values();      // -3, -5/2, ..., 1, 7/3
std::vector<Rational> grid_theta_values();  // 1, -2, 1/3
std::vector<Rational> grid_r_values();      // 0, 5

// Worker count from CGA_VERMA_THREADS, else hardware concurrency (at least 1).
unsigned worker_count();

// Runs task(i) for i in [0, n) on up to `threads` workers.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& task);

struct GridCell {
    WeightLabel weight;
    Point point;
    std::size_t found = 0;
    LevelExpectation expected = LevelExpectation::none;
    bool annihilated = true;      // every solver vector re-checked through the engine
    bool closed_form = true;      // every solver vector proportional to the closed form

    [[nodiscard]] bool ok() const {
        return found == (expected == LevelExpectation::one ? 1U : 0U) && annihilated && closed_form;
    }
};

// Specialized solver against classify_level over p <= p_max, |q| <= q_max and
// the full (d, theta, r) grid. Cells are returned sorted by (p, q, d, theta, r).
std::vector<GridCell> singular_vector_grid(int p_max, int q_max, unsigned threads);

struct ClosedFormCheck {
    int p = 0;
    bool solver_unique = false;
    bool solver_matches_power = false;
    bool power_matches_table = false;

    [[nodiscard]] bool ok() const { return solver_unique && solver_matches_power && power_matches_table; }
};

// At d = (p-3)/2: solver vector vs. closed_form_power(p) vs. q0_coefficient_table(p).
ClosedFormCheck closed_form_check(int p, const Rational& theta = Rational(1), const Rational& r = Rational(0));

// Whole-suite report for the verify-theorems command; "ok" is false on any violation.
nlohmann::ordered_json verify_theorems(int p_max, int q_max, unsigned threads);

}  // namespace cga
