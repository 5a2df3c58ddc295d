#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "liesym/lie_algebra.hpp"
#include "liesym/param_scalar.hpp"

namespace liesym {

/// Coordinates of the (t, S, u) space; the spelling x is accepted for S.
enum class Coord : int { t = 0, S = 1, u = 2 };

/// First-order differential operator sum_i c_i * t^a S^b u^c * d/dX_i with
/// coefficients rational in k.
class VectorField {
public:
    struct Key {
        std::array<int, 3> exponents{0, 0, 0};
        Coord direction = Coord::t;
        auto operator<=>(const Key&) const = default;
    };

    VectorField() = default;

    static VectorField partial(Coord direction);
    /// c * t^a S^b u^c * d/d(direction)
    static VectorField term(const ParamScalar& c, std::array<int, 3> exponents, Coord direction);
    /// Parses e.g. "S*d/dS + (1-k)*u*d/du" or "x*d/du".
    static VectorField parse(std::string_view text);

    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] const std::map<Key, ParamScalar>& terms() const { return terms_; }
    [[nodiscard]] std::string str() const;

    /// Coefficients evaluated at a fixed k.
    [[nodiscard]] VectorField at(const Rational& k) const;

    VectorField& operator+=(const VectorField& o);
    VectorField& operator-=(const VectorField& o);
    friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
    friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
    friend VectorField operator*(const ParamScalar& c, const VectorField& v);
    friend bool operator==(const VectorField& a, const VectorField& b) = default;

private:
    void add_term(const Key& key, const ParamScalar& c);
    std::map<Key, ParamScalar> terms_;
};

/// [X, Y] = X(Y) - Y(X) by formal differentiation of monomials.
VectorField vf_bracket(const VectorField& x, const VectorField& y);

struct RealizationMismatch {
    std::size_t i;
    std::size_t j;
    std::string bracket;   ///< [X_i, X_j] computed from the fields
    std::string expected;  ///< sum_m C^m_ij X_m
};

struct RealizationReport {
    bool ok = true;
    std::size_t pairs_checked = 0;
    std::vector<RealizationMismatch> mismatches;
};

/// Checks that e_i -> fields[i] is a Lie algebra homomorphism.
RealizationReport verify_realization(const std::vector<VectorField>& fields, const LieAlgebra& l);

/// v1 = d/dt, v2 = S d/du, v3 = d/du, v4 = S d/dS + (1-k) u d/du.
std::vector<VectorField> symmetry_generators();

}  // namespace liesym
