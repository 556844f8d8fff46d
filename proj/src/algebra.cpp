#include "cgaverma/algebra.hpp"

#include <stdexcept>

namespace cga {

namespace {

constexpr std::array<std::string_view, 11> generator_names{"H",      "D",     "C",      "J",     "Theta", "Pplus",
                                                           "Pminus", "Kplus", "Kminus", "Fplus", "Fminus"};

using Table = std::array<std::array<LieElement, 11>, 11>;

Table build_table() {
    using G = Generator;
    Table t;
    auto set = [&t](G x, G y, const LieElement& value) {
        t[static_cast<int>(x)][static_cast<int>(y)] = value;
        t[static_cast<int>(y)][static_cast<int>(x)] = -value;
    };
    // [J, X±] = ±X±
    set(G::J, G::Pplus, LieElement(G::Pplus));
    set(G::J, G::Kplus, LieElement(G::Kplus));
    set(G::J, G::Fplus, LieElement(G::Fplus));
    set(G::J, G::Pminus, LieElement(G::Pminus, -1));
    set(G::J, G::Kminus, LieElement(G::Kminus, -1));
    set(G::J, G::Fminus, LieElement(G::Fminus, -1));

    set(G::H, G::Kplus, LieElement(G::Pplus, -1));
    set(G::H, G::Kminus, LieElement(G::Pminus, -1));
    set(G::D, G::Pplus, LieElement(G::Pplus));
    set(G::D, G::Pminus, LieElement(G::Pminus));
    set(G::C, G::Pplus, LieElement(G::Kplus, 2));
    set(G::C, G::Pminus, LieElement(G::Kminus, 2));

    set(G::H, G::Fplus, LieElement(G::Kplus, -2));
    set(G::H, G::Fminus, LieElement(G::Kminus, -2));
    set(G::D, G::Fplus, LieElement(G::Fplus, -1));
    set(G::D, G::Fminus, LieElement(G::Fminus, -1));
    set(G::C, G::Kplus, LieElement(G::Fplus));
    set(G::C, G::Kminus, LieElement(G::Fminus));

    // sl(2) part
    set(G::D, G::H, LieElement(G::H));
    set(G::C, G::D, LieElement(G::C));
    set(G::C, G::H, LieElement(G::D, 2));

    // exotic central extension
    set(G::Kplus, G::Kminus, LieElement(G::Theta, -2));
    set(G::Pplus, G::Fminus, LieElement(G::Theta, 4));
    set(G::Pminus, G::Fplus, LieElement(G::Theta, -4));
    return t;
}

const Table& table() {
    static const Table t = build_table();
    return t;
}

}  // namespace

std::string_view name(Generator g) {
    return generator_names[static_cast<int>(g)];
}

std::optional<Generator> generator_from_name(std::string_view s) {
    for (std::size_t i = 0; i < generator_names.size(); ++i)
        if (generator_names[i] == s) return static_cast<Generator>(i);
    return std::nullopt;
}

TriangularPart part_of(Generator g) {
    switch (g) {
        case Generator::H:
        case Generator::Pplus:
        case Generator::Pminus:
        case Generator::Kplus: return TriangularPart::raising;
        case Generator::D:
        case Generator::J:
        case Generator::Theta: return TriangularPart::cartan;
        default: return TriangularPart::lowering;
    }
}

std::string_view name(TriangularPart t) {
    switch (t) {
        case TriangularPart::raising: return "raising";
        case TriangularPart::cartan: return "cartan";
        case TriangularPart::lowering: return "lowering";
    }
    return "?";
}

LieElement::LieElement(Generator g, Scalar c) {
    add(g, c);
}

Scalar LieElement::coefficient(Generator g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? Scalar() : it->second;
}

void LieElement::add(Generator g, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(g, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LieElement& LieElement::operator+=(const LieElement& o) {
    for (const auto& [g, c] : o.terms_) add(g, c);
    return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
    for (const auto& [g, c] : o.terms_) add(g, -c);
    return *this;
}

LieElement& LieElement::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [g, coef] : terms_) coef *= c;
    return *this;
}

std::string LieElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [g, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += c.to_string() + "*" + std::string(name(g));
    }
    return out;
}

const LieElement& bracket(Generator x, Generator y) {
    return table()[static_cast<int>(x)][static_cast<int>(y)];
}

LieElement bracket(const LieElement& x, const LieElement& y) {
    LieElement out;
    for (const auto& [gx, cx] : x.terms())
        for (const auto& [gy, cy] : y.terms()) out += bracket(gx, gy) * (cx * cy);
    return out;
}

Generator omega(Generator g) {
    using G = Generator;
    switch (g) {
        case G::C: return G::H;
        case G::H: return G::C;
        case G::Kplus: return G::Kminus;
        case G::Kminus: return G::Kplus;
        case G::Pplus: return G::Fminus;
        case G::Fminus: return G::Pplus;
        case G::Pminus: return G::Fplus;
        case G::Fplus: return G::Pminus;
        default: return g;
    }
}

LieElement omega(const LieElement& x) {
    LieElement out;
    for (const auto& [g, c] : x.terms()) out.add(omega(g), c);
    return out;
}

StructureReport check_jacobi() {
    StructureReport report;
    for (Generator x : all_generators) {
        for (Generator y : all_generators) {
            ++report.pairs_checked;
            if (bracket(x, y) != -bracket(y, x)) report.antisymmetry_violations.push_back({x, y});
            LieElement lhs = omega(bracket(x, y));
            LieElement rhs = bracket(LieElement(omega(y)), LieElement(omega(x)));
            if (lhs != rhs) report.omega_violations.push_back({{x, y}, lhs, rhs});
            for (Generator z : all_generators) {
                ++report.triples_checked;
                LieElement residual = bracket(bracket(x, y), LieElement(z)) +
                                      bracket(bracket(y, z), LieElement(x)) +
                                      bracket(bracket(z, x), LieElement(y));
                if (!residual.is_zero()) report.jacobi_violations.push_back({{x, y, z}, residual});
            }
        }
    }
    return report;
}

nlohmann::ordered_json to_json(const LieElement& x) {
    nlohmann::ordered_json out = nlohmann::ordered_json::object();
    for (const auto& [g, c] : x.terms()) out[std::string(name(g))] = c.to_string();
    return out;
}

nlohmann::ordered_json to_json(const StructureReport& report) {
    nlohmann::ordered_json out;
    out["triples_checked"] = report.triples_checked;
    out["pairs_checked"] = report.pairs_checked;
    auto& jac = out["jacobi_violations"] = nlohmann::ordered_json::array();
    for (const auto& v : report.jacobi_violations)
        jac.push_back({{"triple", {name(v.triple[0]), name(v.triple[1]), name(v.triple[2])}},
                       {"residual", to_json(v.residual)}});
    auto& anti = out["antisymmetry_violations"] = nlohmann::ordered_json::array();
    for (const auto& p : report.antisymmetry_violations) anti.push_back({name(p[0]), name(p[1])});
    auto& om = out["omega_violations"] = nlohmann::ordered_json::array();
    for (const auto& v : report.omega_violations)
        om.push_back({{"pair", {name(v.pair[0]), name(v.pair[1])}}, {"lhs", to_json(v.lhs)}, {"rhs", to_json(v.rhs)}});
    out["ok"] = report.ok();
    return out;
}

nlohmann::ordered_json bracket_table_json() {
    nlohmann::ordered_json out = nlohmann::ordered_json::object();
    for (Generator x : all_generators)
        for (Generator y : all_generators) {
            const LieElement& value = bracket(x, y);
            if (!value.is_zero()) out[std::string(name(x)) + "," + std::string(name(y))] = to_json(value);
        }
    return out;
}

}  // namespace cga
