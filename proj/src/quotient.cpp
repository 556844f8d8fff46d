#include "cgaverma/quotient.hpp"

#include "cgaverma/singular.hpp"

#include <stdexcept>

namespace cga {

std::optional<int> singular_level(const Rational& d) {
    Rational p0 = Rational(2) * d + Rational(3);
    if (!p0.is_integer() || p0.sign() <= 0) return std::nullopt;
    if (!p0.numerator().fits_sint_p()) throw std::out_of_range("singular level too large");
    return static_cast<int>(p0.numerator().get_si());
}

std::vector<Rational> coordinates(const RationalElement& v, const std::vector<Monomial>& basis) {
    std::vector<Rational> x(basis.size());
    for (const auto& [mono, c] : v.terms()) {
        int i = basis_index(basis, mono);
        if (i < 0) throw std::logic_error("vector " + mono.to_string() + " outside the expected weight space");
        x[static_cast<std::size_t>(i)] = c;
    }
    return x;
}

RationalElement from_coordinates(const std::vector<Rational>& x, const std::vector<Monomial>& basis) {
    RationalElement v;
    for (std::size_t i = 0; i < x.size(); ++i) v.add(basis[i], x[i]);
    return v;
}

SingularSubmodule::SingularSubmodule(const Point& at) : point_(at) {
    require_nonzero_theta(at);
    auto level = cga::singular_level(at.d);
    if (!level) throw std::invalid_argument("2d+3 = " + (Rational(2) * at.d + Rational(3)).to_string() +
                                            " is not a positive integer; V^{d,r} has no singular vector");
    p0_ = *level;
    singular_vector_ = specialize(closed_form_power(p0_), at);
}

const SubmoduleSlice& SingularSubmodule::slice(const WeightLabel& w) {
    if (auto it = slices_.find(w); it != slices_.end()) return it->second;
    SubmoduleSlice s;
    s.weight = w;
    s.basis = enumerate_basis(w);
    s.span = Subspace<Rational>(s.basis.size());
    if (w.p >= p0_) {
        for (const auto& word : enumerate_basis({w.p - p0_, w.q})) {
            RationalElement v = act_word(word_of(word), singular_vector_, point_);
            s.span.insert(coordinates(v, s.basis));
            s.spanning_vectors.push_back(std::move(v));
        }
        for (const auto& row : s.span.rows()) s.reduced_basis.push_back(from_coordinates(row, s.basis));
    }
    return slices_.emplace(w, std::move(s)).first->second;
}

std::vector<Monomial> SingularSubmodule::quotient_basis(const WeightLabel& w) {
    const SubmoduleSlice& s = slice(w);
    std::vector<Monomial> reps;
    for (std::size_t i = 0; i < s.basis.size(); ++i)
        if (!s.span.is_pivot(i)) reps.push_back(s.basis[i]);
    return reps;
}

std::vector<Rational> SingularSubmodule::quotient_coordinates(const RationalElement& v, const WeightLabel& weight) {
    const SubmoduleSlice& s = slice(weight);
    std::vector<Rational> reduced = s.span.reduce(coordinates(v, s.basis));
    std::vector<Rational> out;
    for (std::size_t i = 0; i < s.basis.size(); ++i)
        if (!s.span.is_pivot(i)) out.push_back(reduced[i]);
    return out;
}

SubmoduleSlice submodule_slice(const WeightLabel& w, const Point& at) {
    SingularSubmodule sub(at);
    return sub.slice(w);
}

std::vector<Monomial> quotient_basis(const WeightLabel& w, const Point& at) {
    SingularSubmodule sub(at);
    return sub.quotient_basis(w);
}

bool QuotientCheckReport::ok() const {
    for (const auto& level : levels)
        if (level.nullspace_dimension != 0) return false;
    return true;
}

QuotientCheckReport quotient_singular_check(const Point& at, int p_max, int q_max) {
    SingularSubmodule sub(at);
    QuotientCheckReport report{at, sub.singular_level(), p_max, q_max, {}};
    for (int p = 1; p <= p_max; ++p) {
        for (int q = -q_max; q <= q_max; ++q) {
            const WeightLabel w{p, q};
            QuotientLevel level;
            level.weight = w;
            level.verma_dimension = enumerate_basis(w).size();
            level.submodule_dimension = sub.slice(w).dimension();
            const auto reps = sub.quotient_basis(w);
            level.quotient_dimension = reps.size();

            Matrix<Rational> system(0, reps.size());
            for (Generator g : annihilator_generators) {
                const WeightLabel target = shifted(w, g);
                const std::size_t target_dim = sub.quotient_basis(target).size();
                Matrix<Rational> block(target_dim, reps.size());
                for (std::size_t j = 0; j < reps.size(); ++j) {
                    auto image = sub.quotient_coordinates(act(g, RationalElement(reps[j]), at), target);
                    for (std::size_t i = 0; i < target_dim; ++i) block(i, j) = image[i];
                }
                system.append_rows(block);
            }
            for (const auto& x : nullspace(system)) level.offending.push_back(from_coordinates(x, reps));
            level.nullspace_dimension = level.offending.size();
            report.levels.push_back(std::move(level));
        }
    }
    return report;
}

bool slice_closed_under_action(SingularSubmodule& sub, const WeightLabel& w) {
    const auto spanning = sub.slice(w).spanning_vectors;
    for (Generator g : all_generators) {
        if (part_of(g) == TriangularPart::cartan) continue;
        const WeightLabel target = shifted(w, g);
        const SubmoduleSlice& t = sub.slice(target);
        for (const auto& s : spanning) {
            if (!t.span.contains(coordinates(act(g, s, sub.point()), t.basis))) return false;
        }
    }
    return true;
}

ClassificationVerdict classify(const Rational& d, const Rational& r, const Rational& theta) {
    if (theta.is_zero()) throw invalid_point("theta = 0 is not allowed");
    ClassificationVerdict v{d, r, theta, Branch::verma_irreducible, singular_level(d), ""};
    if (v.p0) {
        v.branch = Branch::quotient_irreducible;
        v.convention = "p0 = 2d+3 >= 1; the quotient by U(g-)(2θC - K-F+)^p0 |d,r> is irreducible";
    } else if (Rational(2) * d + Rational(3) == Rational(0)) {
        v.convention = "2d+3 = 0 is excluded from N: the zeroth power is the identity, so no proper submodule arises";
    } else {
        v.convention = "2d+3 is not a positive integer: no singular vectors";
    }
    return v;
}

std::string_view name(Branch b) {
    return b == Branch::verma_irreducible ? "verma_irreducible" : "quotient_irreducible";
}

nlohmann::ordered_json to_json(const ClassificationVerdict& v) {
    nlohmann::ordered_json out;
    out["d"] = v.d.to_string();
    out["r"] = v.r.to_string();
    out["theta"] = v.theta.to_string();
    out["branch"] = name(v.branch);
    out["p0"] = v.p0 ? nlohmann::ordered_json(*v.p0) : nlohmann::ordered_json(nullptr);
    out["convention"] = v.convention;
    return out;
}

nlohmann::ordered_json to_json(const QuotientCheckReport& report) {
    nlohmann::ordered_json out;
    out["d"] = report.point.d.to_string();
    out["r"] = report.point.r.to_string();
    out["theta"] = report.point.theta.to_string();
    out["p0"] = report.p0;
    out["p_max"] = report.p_max;
    out["q_max"] = report.q_max;
    auto& levels = out["levels"] = nlohmann::ordered_json::array();
    for (const auto& level : report.levels) {
        nlohmann::ordered_json l;
        l["p"] = level.weight.p;
        l["q"] = level.weight.q;
        l["verma_dimension"] = level.verma_dimension;
        l["submodule_dimension"] = level.submodule_dimension;
        l["quotient_dimension"] = level.quotient_dimension;
        l["nullspace_dimension"] = level.nullspace_dimension;
        if (!level.offending.empty()) {
            auto& off = l["offending"] = nlohmann::ordered_json::array();
            for (const auto& v : level.offending) off.push_back(to_json(v));
        }
        levels.push_back(std::move(l));
    }
    out["ok"] = report.ok();
    return out;
}

}  // namespace cga
