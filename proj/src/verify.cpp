#include "cgaverma/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

namespace cga {

std::vector<Rational> grid_d_values() {
    return {Rational(-3),    Rational(-5, 2), Rational(-2),   Rational(-3, 2), Rational(-1),
            Rational(-1, 2), Rational(0),     Rational(1, 2), Rational(1),     Rational(7, 3)};
}

std::vector<Rational> grid_theta_values() {
    return {Rational(1), Rational(-2), Rational(1, 3)};
}

std::vector<Rational> grid_r_values() {
    return {Rational(0), Rational(5)};
}

unsigned worker_count() {
    unsigned n = std::max(1U, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("CGA_VERMA_THREADS")) {
        char* end = nullptr;
        long cap = std::strtol(env, &end, 10);
        if (end != env && cap >= 1) n = std::min(n, static_cast<unsigned>(cap));
    }
    return n;
}

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& task) {
    threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                task(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);
}

std::vector<GridCell> singular_vector_grid(int p_max, int q_max, unsigned threads) {
    std::vector<GridCell> cells;
    for (int p = 0; p <= p_max; ++p)
        for (int q = -q_max; q <= q_max; ++q)
            for (const auto& d : grid_d_values())
                for (const auto& theta : grid_theta_values())
                    for (const auto& r : grid_r_values()) {
                        GridCell c;
                        c.weight = {p, q};
                        c.point = Point{theta, d, r};
                        c.expected = classify_level(c.weight, d);
                        cells.push_back(std::move(c));
                    }
    parallel_for(cells.size(), threads, [&cells](std::size_t i) {
        GridCell& c = cells[i];
        const SolveMode mode = SolveMode::specialized(c.point);
        const auto found = solve_singular(c.weight, mode);
        c.found = found.size();
        for (const auto& v : found) {
            if (!is_annihilated(specialize(v.vector(), c.point), c.point)) c.annihilated = false;
            if (!matches_closed_form(v, mode)) c.closed_form = false;
        }
    });
    return cells;
}

ClosedFormCheck closed_form_check(int p, const Rational& theta, const Rational& r) {
    ClosedFormCheck check;
    check.p = p;
    const Point at{theta, Rational(p - 3, 2), r};
    const auto found = solve_singular({p, 0}, SolveMode::specialized(at));
    check.solver_unique = found.size() == 1;

    const ModuleElement power = closed_form_power(p);
    if (check.solver_unique)
        check.solver_matches_power =
            proportionality(specialize(found.front().vector(), at), specialize(power, at)).has_value();

    SingularVectorCandidate from_table{{p, 0}, q0_coefficient_table(p)};
    check.power_matches_table = proportionality(power, from_table.vector()).has_value();
    return check;
}

nlohmann::ordered_json verify_theorems(int p_max, int q_max, unsigned threads) {
    using json = nlohmann::ordered_json;
    json out;
    out["schema"] = 1;
    out["p_max"] = p_max;
    out["q_max"] = q_max;
    bool all_ok = true;

    const StructureReport structure = check_jacobi();
    out["structure"] = {{"triples_checked", structure.triples_checked},
                        {"pairs_checked", structure.pairs_checked},
                        {"jacobi_violations", structure.jacobi_violations.size()},
                        {"antisymmetry_violations", structure.antisymmetry_violations.size()},
                        {"omega_violations", structure.omega_violations.size()},
                        {"ok", structure.ok()}};
    all_ok = all_ok && structure.ok();

    const auto cells = singular_vector_grid(p_max, q_max, threads);
    json violations = json::array();
    std::size_t with_vector = 0;
    for (const auto& c : cells) {
        if (c.found > 0) ++with_vector;
        if (!c.ok())
            violations.push_back({{"p", c.weight.p},
                                  {"q", c.weight.q},
                                  {"d", c.point.d.to_string()},
                                  {"theta", c.point.theta.to_string()},
                                  {"r", c.point.r.to_string()},
                                  {"found", c.found},
                                  {"expected", c.expected == LevelExpectation::one ? 1 : 0}});
    }
    out["singular_grid"] = {{"cells", cells.size()},
                            {"cells_with_singular_vector", with_vector},
                            {"violations", violations},
                            {"ok", violations.empty()}};
    all_ok = all_ok && violations.empty();

    json closed = json::array();
    for (int p = 1; p <= std::min(p_max, 5); ++p) {
        const ClosedFormCheck c = closed_form_check(p);
        closed.push_back({{"p", p},
                          {"solver_unique", c.solver_unique},
                          {"solver_matches_power", c.solver_matches_power},
                          {"power_matches_table", c.power_matches_table},
                          {"ok", c.ok()}});
        all_ok = all_ok && c.ok();
    }
    out["closed_form"] = closed;

    struct QuotientJob {
        Point point;
        int p0;
        QuotientCheckReport report;
    };
    std::vector<QuotientJob> jobs;
    for (const auto& d : grid_d_values()) {
        auto p0 = singular_level(d);
        if (!p0 || *p0 > p_max) continue;
        for (const auto& theta : grid_theta_values())
            for (const auto& r : grid_r_values()) jobs.push_back({Point{theta, d, r}, *p0, {}});
    }
    parallel_for(jobs.size(), threads, [&jobs, q_max](std::size_t i) {
        jobs[i].report = quotient_singular_check(jobs[i].point, jobs[i].p0 + 3, q_max);
    });
    json quotient = json::array();
    for (const auto& job : jobs) {
        bool additive = true;
        for (const auto& level : job.report.levels)
            additive = additive && level.verma_dimension == level.submodule_dimension + level.quotient_dimension;
        const bool ok = job.report.ok() && additive;
        quotient.push_back({{"d", job.point.d.to_string()},
                            {"theta", job.point.theta.to_string()},
                            {"r", job.point.r.to_string()},
                            {"p0", job.p0},
                            {"levels_checked", job.report.levels.size()},
                            {"dimension_additivity", additive},
                            {"ok", ok}});
        all_ok = all_ok && ok;
    }
    out["quotient"] = quotient;
    out["ok"] = all_ok;
    return out;
}

}  // namespace cga
