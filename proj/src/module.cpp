#include "cgaverma/module.hpp"

namespace cga {

std::string Monomial::to_string() const {
    return "|" + std::to_string(h) + "," + std::to_string(k) + "," + std::to_string(l) + "," + std::to_string(m) + ">";
}

ModuleElement to_scalar(const PolyElement& v) {
    ModuleElement out;
    for (const auto& [mono, c] : v.terms()) out.add(mono, Scalar(c));
    return out;
}

ModuleElement to_scalar(const RationalElement& v) {
    ModuleElement out;
    for (const auto& [mono, c] : v.terms()) out.add(mono, Scalar(c));
    return out;
}

RationalElement specialize(const ModuleElement& v, const Point& at) {
    require_nonzero_theta(at);
    RationalElement out;
    for (const auto& [mono, c] : v.terms()) out.add(mono, c.specialize(at));
    return out;
}

RationalElement specialize(const PolyElement& v, const Point& at) {
    require_nonzero_theta(at);
    RationalElement out;
    for (const auto& [mono, c] : v.terms()) out.add(mono, c.evaluate(at));
    return out;
}

namespace {

template <class Coef>
nlohmann::ordered_json element_json(const BasicModuleElement<Coef>& v) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& [mono, c] : v.terms())
        out.push_back({{"h", mono.h}, {"k", mono.k}, {"l", mono.l}, {"m", mono.m}, {"coef", c.to_string()}});
    return out;
}

}  // namespace

nlohmann::ordered_json to_json(const ModuleElement& v) {
    return element_json(v);
}

nlohmann::ordered_json to_json(const RationalElement& v) {
    return element_json(v);
}

ModuleElement module_element_from_json(const nlohmann::ordered_json& j) {
    ModuleElement out;
    for (const auto& term : j) {
        Monomial mono{term.at("h").get<unsigned>(), term.at("k").get<unsigned>(), term.at("l").get<unsigned>(),
                      term.at("m").get<unsigned>()};
        out.add(mono, Scalar::parse(term.at("coef").get<std::string>()));
    }
    return out;
}

}  // namespace cga
