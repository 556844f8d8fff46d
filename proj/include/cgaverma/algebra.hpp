#pragma once

#include "cgaverma/scalar.hpp"

#include <array>
#include <map>
#include <json.hpp>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cga {

// Basis of the exotic conformal Galilei algebra (l = 1, 2+1 dimensions) in the
// X± = X1 ± i X2 basis.
enum class Generator : int { H, D, C, J, Theta, Pplus, Pminus, Kplus, Kminus, Fplus, Fminus };

inline constexpr std::array<Generator, 11> all_generators{
    Generator::H,      Generator::D,     Generator::C,      Generator::J,     Generator::Theta, Generator::Pplus,
    Generator::Pminus, Generator::Kplus, Generator::Kminus, Generator::Fplus, Generator::Fminus};

enum class TriangularPart { raising, cartan, lowering };

std::string_view name(Generator g);
std::optional<Generator> generator_from_name(std::string_view s);
TriangularPart part_of(Generator g);
std::string_view name(TriangularPart t);

// Sparse linear combination of generators; zero coefficients are never stored.
class LieElement {
public:
    LieElement() = default;
    LieElement(Generator g, Scalar c = Scalar(1));

    [[nodiscard]] const std::map<Generator, Scalar>& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] Scalar coefficient(Generator g) const;

    void add(Generator g, const Scalar& c);

    LieElement& operator+=(const LieElement& o);
    LieElement& operator-=(const LieElement& o);
    LieElement& operator*=(const Scalar& c);

    friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
    friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
    friend LieElement operator*(LieElement a, const Scalar& c) { return a *= c; }
    friend LieElement operator-(LieElement a) { return a *= Scalar(-1); }
    friend bool operator==(const LieElement& a, const LieElement& b) = default;

    [[nodiscard]] std::string to_string() const;

private:
    std::map<Generator, Scalar> terms_;
};

const LieElement& bracket(Generator x, Generator y);
LieElement bracket(const LieElement& x, const LieElement& y);

// The involutive anti-automorphism fixing D, J, Theta and exchanging
// C<->H, K+<->K-, P+<->F-, P-<->F+.
Generator omega(Generator g);
LieElement omega(const LieElement& x);

struct JacobiViolation {
    std::array<Generator, 3> triple;
    LieElement residual;
};

struct OmegaViolation {
    std::array<Generator, 2> pair;
    LieElement lhs;  // omega([x,y])
    LieElement rhs;  // [omega(y), omega(x)]
};

struct StructureReport {
    std::size_t triples_checked = 0;
    std::size_t pairs_checked = 0;
    std::vector<JacobiViolation> jacobi_violations;
    std::vector<std::array<Generator, 2>> antisymmetry_violations;
    std::vector<OmegaViolation> omega_violations;

    [[nodiscard]] bool ok() const {
        return jacobi_violations.empty() && antisymmetry_violations.empty() && omega_violations.empty();
    }
};

// Exhaustive scan: Jacobi over all ordered triples, antisymmetry and omega
// compatibility over all ordered pairs.
StructureReport check_jacobi();

nlohmann::ordered_json to_json(const LieElement& x);
nlohmann::ordered_json to_json(const StructureReport& report);
// Nonzero brackets keyed "X,Y".
nlohmann::ordered_json bracket_table_json();

}  // namespace cga
