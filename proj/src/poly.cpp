#include "liesym/poly.hpp"

#include <sstream>

#include "liesym/error.hpp"

namespace liesym {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(const Rational& constant) {
    if (!constant.is_zero()) coeffs_.push_back(constant);
}

Poly Poly::variable() { return Poly({Rational(0), Rational(1)}); }

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<std::size_t>(i)];
}

Rational Poly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(leading().inverse());
}

Poly Poly::scaled(const Rational& c) const {
    if (c.is_zero()) return {};
    Poly out = *this;
    for (auto& v : out.coeffs_) v *= c;
    return out;
}

Integer Poly::denominator_lcm() const {
    Integer l = 1;
    for (const auto& c : coeffs_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.raw().get_den_mpz_t());
    return l;
}

Integer Poly::numerator_gcd() const {
    Integer g = 0;
    for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.raw().get_num_mpz_t());
    return g;
}

bool Poly::is_monomial() const {
    int nonzero = 0;
    for (const auto& c : coeffs_) nonzero += c.is_zero() ? 0 : 1;
    return nonzero <= 1;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Rational c = coeffs_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        if (c.sign() < 0) {
            os << "-";
            c = -c;
        } else if (!first) {
            os << "+";
        }
        first = false;
        if (i == 0) {
            os << c;
            continue;
        }
        if (!c.is_one()) os << c << "*";
        os << var;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(out));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    Poly rem = a;
    std::vector<Rational> quot(a.degree() >= b.degree() ? a.degree() - b.degree() + 1 : 0, Rational(0));
    const Rational lead_inv = b.leading().inverse();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int shift = rem.degree() - b.degree();
        Rational factor = rem.leading() * lead_inv;
        quot[static_cast<std::size_t>(shift)] = factor;
        std::vector<Rational> sub(static_cast<std::size_t>(shift), Rational(0));
        sub.insert(sub.end(), b.coeffs_.begin(), b.coeffs_.end());
        rem -= Poly(std::move(sub)).scaled(factor);
    }
    return {Poly(std::move(quot)), rem};
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

}  // namespace liesym
