#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "liesym/poly.hpp"
#include "liesym/rational.hpp"

namespace liesym {

/// Exact rational function of the parameter k.
///
/// Stored as numerator/denominator polynomials with integer coefficients,
/// coprime, jointly primitive and with a positive leading denominator
/// coefficient. Equal functions therefore have identical representations.
class ParamScalar {
public:
    ParamScalar() = default;
    ParamScalar(const Rational& c);  // NOLINT(google-explicit-constructor)
    ParamScalar(long c) : ParamScalar(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    ParamScalar(int c) : ParamScalar(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    ParamScalar(Poly num, Poly den);

    static ParamScalar k();
    /// Accepts expressions over k with + - * / ^ and parentheses, e.g. "(k-1)/k".
    static ParamScalar parse(std::string_view text);

    [[nodiscard]] const Poly& num() const { return num_; }
    [[nodiscard]] const Poly& den() const { return den_; }

    [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
    [[nodiscard]] bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
    /// Value of a constant function; throws if the function depends on k.
    [[nodiscard]] Rational constant() const;
    [[nodiscard]] bool has_pole_at(const Rational& k) const { return den_.eval(k).is_zero(); }
    [[nodiscard]] Rational eval(const Rational& k) const;
    [[nodiscard]] std::string str() const;

    [[nodiscard]] ParamScalar inverse() const;

    ParamScalar& operator+=(const ParamScalar& o);
    ParamScalar& operator-=(const ParamScalar& o);
    ParamScalar& operator*=(const ParamScalar& o);
    ParamScalar& operator/=(const ParamScalar& o);
    friend ParamScalar operator+(ParamScalar a, const ParamScalar& b) { return a += b; }
    friend ParamScalar operator-(ParamScalar a, const ParamScalar& b) { return a -= b; }
    friend ParamScalar operator*(ParamScalar a, const ParamScalar& b) { return a *= b; }
    friend ParamScalar operator/(ParamScalar a, const ParamScalar& b) { return a /= b; }
    friend ParamScalar operator-(const ParamScalar& a) { return ParamScalar(-a.num_, a.den_); }
    friend bool operator==(const ParamScalar& a, const ParamScalar& b) = default;

    friend std::ostream& operator<<(std::ostream& os, const ParamScalar& s);

private:
    void canonicalize();
    Poly num_;
    Poly den_{Rational(1)};
};

/// Canonical form of an arbitrary numerator/denominator pair.
ParamScalar param_simplify(const Poly& num, const Poly& den);

/// Value at k; throws PoleAtK when the denominator vanishes.
Rational param_eval(const ParamScalar& s, const Rational& k);

}  // namespace liesym
