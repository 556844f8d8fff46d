#pragma once

#include "cgaverma/scalar.hpp"

#include <compare>
#include <json.hpp>
#include <map>
#include <string>

namespace cga {

// Exponents of C^h K-^k F-^l F+^m applied to the highest-weight vector.
struct Monomial {
    unsigned h = 0;
    unsigned k = 0;
    unsigned l = 0;
    unsigned m = 0;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
    [[nodiscard]] bool is_highest_weight() const { return h == 0 && k == 0 && l == 0 && m == 0; }
    [[nodiscard]] std::string to_string() const;
};

// Finite sparse vector over the Verma basis with coefficients in Coef.
template <class Coef>
class BasicModuleElement {
public:
    using TermMap = std::map<Monomial, Coef>;

    BasicModuleElement() = default;
    explicit BasicModuleElement(const Monomial& mono, Coef c = Coef(1)) { add(mono, c); }

    [[nodiscard]] const TermMap& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }

    [[nodiscard]] Coef coefficient(const Monomial& mono) const {
        auto it = terms_.find(mono);
        return it == terms_.end() ? Coef() : it->second;
    }

    void add(const Monomial& mono, const Coef& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(mono, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    BasicModuleElement& operator+=(const BasicModuleElement& o) {
        for (const auto& [mono, c] : o.terms_) add(mono, c);
        return *this;
    }
    BasicModuleElement& operator-=(const BasicModuleElement& o) {
        for (const auto& [mono, c] : o.terms_) add(mono, -c);
        return *this;
    }
    BasicModuleElement& operator*=(const Coef& c) {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [mono, coef] : terms_) coef *= c;
        return *this;
    }

    friend BasicModuleElement operator+(BasicModuleElement a, const BasicModuleElement& b) { return a += b; }
    friend BasicModuleElement operator-(BasicModuleElement a, const BasicModuleElement& b) { return a -= b; }
    friend BasicModuleElement operator*(BasicModuleElement a, const Coef& c) { return a *= c; }
    friend bool operator==(const BasicModuleElement& a, const BasicModuleElement& b) = default;

    // "c1 |h,k,l,m> + c2 |...>", or "0".
    [[nodiscard]] std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [mono, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += c.to_string() + " " + mono.to_string();
        }
        return s;
    }

private:
    TermMap terms_;
};

using ModuleElement = BasicModuleElement<Scalar>;
using PolyElement = BasicModuleElement<Polynomial>;
using RationalElement = BasicModuleElement<Rational>;

ModuleElement to_scalar(const PolyElement& v);
ModuleElement to_scalar(const RationalElement& v);
RationalElement specialize(const ModuleElement& v, const Point& at);
RationalElement specialize(const PolyElement& v, const Point& at);

// JSON array of {"h","k","l","m","coef"} sorted by (h,k,l,m).
nlohmann::ordered_json to_json(const ModuleElement& v);
nlohmann::ordered_json to_json(const RationalElement& v);
ModuleElement module_element_from_json(const nlohmann::ordered_json& j);

}  // namespace cga
