#pragma once

#include <iosfwd>
#include <string>

#include "liesym/rational.hpp"

namespace liesym {

/// Real number of the form c * r^(1/n) with c rational, r > 0 rational, n >= 1.
///
/// Products and quotients are always representable. Sums are only defined
/// between commensurable terms (rational ratio); anything else raises
/// IncommensurableSurds. This is enough to carry positive group scalings
/// t = |x|^(p/q) through echelon forms whose entries are monomials in t.
class Surd {
public:
    Surd() = default;
    Surd(const Rational& c);  // NOLINT(google-explicit-constructor)
    Surd(long c) : Surd(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    Surd(int c) : Surd(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    Surd(Rational coef, Rational radicand, unsigned long index);

    static Surd sqrt(const Rational& r);
    /// Positive real power r^e of a positive rational.
    static Surd power(const Rational& r, const Rational& e);

    [[nodiscard]] const Rational& coef() const { return coef_; }
    [[nodiscard]] const Rational& radicand() const { return radicand_; }
    [[nodiscard]] unsigned long index() const { return index_; }

    [[nodiscard]] bool is_zero() const { return coef_.is_zero(); }
    [[nodiscard]] bool is_rational() const { return index_ == 1; }
    [[nodiscard]] Rational to_rational() const;
    [[nodiscard]] int sign() const { return coef_.sign(); }
    [[nodiscard]] double to_double() const;
    [[nodiscard]] std::string str() const;

    [[nodiscard]] Surd abs() const;
    [[nodiscard]] Surd inverse() const;
    /// this^e for this > 0.
    [[nodiscard]] Surd pow(const Rational& e) const;

    Surd& operator+=(const Surd& o);
    Surd& operator-=(const Surd& o) { return *this += -o; }
    Surd& operator*=(const Surd& o);
    Surd& operator/=(const Surd& o) { return *this *= o.inverse(); }
    friend Surd operator+(Surd a, const Surd& b) { return a += b; }
    friend Surd operator-(Surd a, const Surd& b) { return a -= b; }
    friend Surd operator*(Surd a, const Surd& b) { return a *= b; }
    friend Surd operator/(Surd a, const Surd& b) { return a /= b; }
    friend Surd operator-(const Surd& a) {
        Surd out = a;
        out.coef_ = -out.coef_;
        return out;
    }
    friend bool operator==(const Surd& a, const Surd& b);

    friend std::ostream& operator<<(std::ostream& os, const Surd& s);

private:
    void canonicalize();
    Rational coef_{0};
    Rational radicand_{1};
    unsigned long index_ = 1;
};

}  // namespace liesym
