#include "cgaverma/weights.hpp"

#include <algorithm>

namespace cga {

std::string WeightLabel::to_string() const {
    return "(p=" + std::to_string(p) + ",q=" + std::to_string(q) + ")";
}

WeightLabel weight_of(const Monomial& mono) {
    const int h = static_cast<int>(mono.h), k = static_cast<int>(mono.k);
    const int l = static_cast<int>(mono.l), m = static_cast<int>(mono.m);
    return {h + l + m, k + l - m};
}

WeightLabel weight_shift(Generator g) {
    using G = Generator;
    switch (g) {
        case G::C: return {1, 0};
        case G::Kminus: return {0, 1};
        case G::Fminus: return {1, 1};
        case G::Fplus: return {1, -1};
        case G::H: return {-1, 0};
        case G::Kplus: return {0, -1};
        case G::Pplus: return {-1, -1};
        case G::Pminus: return {-1, 1};
        default: return {0, 0};
    }
}

WeightLabel shifted(const WeightLabel& w, Generator g) {
    WeightLabel s = weight_shift(g);
    return {w.p + s.p, w.q + s.q};
}

std::vector<Monomial> enumerate_basis(const WeightLabel& w) {
    std::vector<Monomial> out;
    if (w.p < 0) return out;
    for (int l = 0; l <= w.p; ++l) {
        for (int m = 0; l + m <= w.p; ++m) {
            const int h = w.p - l - m;
            const int k = w.q - l + m;
            if (k < 0) continue;
            out.push_back({static_cast<unsigned>(h), static_cast<unsigned>(k), static_cast<unsigned>(l),
                           static_cast<unsigned>(m)});
        }
    }
    return out;
}

int basis_index(const std::vector<Monomial>& basis, const Monomial& mono) {
    auto it = std::find(basis.begin(), basis.end(), mono);
    return it == basis.end() ? -1 : static_cast<int>(it - basis.begin());
}

nlohmann::ordered_json to_json(const WeightLabel& w) {
    return {{"p", w.p}, {"q", w.q}};
}

nlohmann::ordered_json to_json(const Monomial& mono) {
    return {{"h", mono.h}, {"k", mono.k}, {"l", mono.l}, {"m", mono.m}};
}

}  // namespace cga
