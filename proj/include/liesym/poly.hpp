#pragma once

#include <string>
#include <utility>
#include <vector>

#include "liesym/rational.hpp"

namespace liesym {

/// Dense univariate polynomial with rational coefficients, lowest degree first.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    Poly(const Rational& constant);  // NOLINT(google-explicit-constructor)

    static Poly variable();

    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] const Rational& leading() const { return coeffs_.back(); }
    [[nodiscard]] const std::vector<Rational>& coeffs() const { return coeffs_; }
    [[nodiscard]] Rational coeff(int i) const;

    [[nodiscard]] Rational eval(const Rational& x) const;
    [[nodiscard]] Poly monic() const;
    [[nodiscard]] Poly scaled(const Rational& c) const;
    /// Least common multiple of the coefficient denominators.
    [[nodiscard]] Integer denominator_lcm() const;
    /// Gcd of the numerators after clearing denominators.
    [[nodiscard]] Integer numerator_gcd() const;

    [[nodiscard]] std::string str(const std::string& var = "k") const;
    [[nodiscard]] bool is_monomial() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a) { return a.scaled(Rational(-1)); }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) = default;

    /// Euclidean division: returns (quotient, remainder).
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
    /// Monic greatest common divisor; gcd(0, 0) = 0.
    static Poly gcd(Poly a, Poly b);

private:
    void trim();
    std::vector<Rational> coeffs_;
};

}  // namespace liesym
