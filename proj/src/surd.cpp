#include "liesym/surd.hpp"

#include <cmath>
#include <numeric>
#include <ostream>
#include <sstream>

#include "liesym/error.hpp"

namespace liesym {

namespace {

double log_abs(const Integer& z) {
    long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());
    return std::log(std::fabs(mant)) + static_cast<double>(exp2) * std::log(2.0);
}

}  // namespace

Surd::Surd(const Rational& c) : coef_(c) {}

Surd::Surd(Rational coef, Rational radicand, unsigned long index)
    : coef_(std::move(coef)), radicand_(std::move(radicand)), index_(index) {
    if (index_ == 0) throw Error("surd index must be positive");
    if (radicand_.sign() <= 0) throw Error("surd radicand must be positive");
    canonicalize();
}

Surd Surd::sqrt(const Rational& r) {
    if (r.sign() < 0) throw Error("square root of a negative rational");
    if (r.is_zero()) return {};
    return {Rational(1), r, 2};
}

Surd Surd::power(const Rational& r, const Rational& e) {
    if (r.sign() <= 0) throw Error("power of a non-positive rational");
    Integer p = e.num();
    Integer q = e.den();
    Rational base = p.get_si() < 0 ? r.inverse() : r;
    base = base.pow(std::abs(p.get_si()));
    return {Rational(1), base, q.get_ui()};
}

void Surd::canonicalize() {
    if (coef_.is_zero()) {
        radicand_ = Rational(1);
        index_ = 1;
        return;
    }
    bool reduced = true;
    while (reduced && index_ > 1) {
        reduced = false;
        for (unsigned long d = index_; d >= 2; --d) {
            if (index_ % d != 0) continue;
            Rational root;
            if (exact_root(radicand_, d, root)) {
                radicand_ = root;
                index_ /= d;
                reduced = true;
                break;
            }
        }
    }
    if (index_ == 1) {
        coef_ *= radicand_;
        radicand_ = Rational(1);
    }
}

Rational Surd::to_rational() const {
    if (!is_rational()) throw NonRationalPower("value " + str() + " is irrational");
    return coef_;
}

double Surd::to_double() const {
    if (is_zero()) return 0.0;
    double log_r = log_abs(radicand_.num()) - log_abs(radicand_.den());
    return coef_.to_double() * std::exp(log_r / static_cast<double>(index_));
}

std::string Surd::str() const {
    if (is_rational()) return coef_.str();
    std::ostringstream os;
    if (!coef_.is_one()) os << coef_ << "*";
    os << radicand_ << "^(1/" << index_ << ")";
    return os.str();
}

Surd Surd::abs() const {
    Surd out = *this;
    out.coef_ = coef_.abs();
    return out;
}

Surd Surd::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero surd");
    return {coef_.inverse(), radicand_.inverse(), index_};
}

Surd Surd::pow(const Rational& e) const {
    if (sign() <= 0) throw Error("power of a non-positive surd");
    Rational inner = coef_.pow(static_cast<long>(index_)) * radicand_;
    Integer p = e.num();
    Integer q = e.den();
    Rational base = p.get_si() < 0 ? inner.inverse() : inner;
    base = base.pow(std::abs(p.get_si()));
    return {Rational(1), base, index_ * q.get_ui()};
}

Surd& Surd::operator*=(const Surd& o) {
    if (is_zero() || o.is_zero()) {
        *this = Surd();
        return *this;
    }
    unsigned long n = std::lcm(index_, o.index_);
    Rational r = radicand_.pow(static_cast<long>(n / index_)) * o.radicand_.pow(static_cast<long>(n / o.index_));
    *this = Surd(coef_ * o.coef_, r, n);
    return *this;
}

Surd& Surd::operator+=(const Surd& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
        *this = o;
        return *this;
    }
    Surd ratio = *this / o;
    if (!ratio.is_rational())
        throw IncommensurableSurds("cannot add " + str() + " and " + o.str());
    Surd out = o;
    out.coef_ *= (ratio.coef_ + Rational(1));
    out.canonicalize();
    *this = out;
    return *this;
}

bool operator==(const Surd& a, const Surd& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    Surd ratio = a / b;
    return ratio.is_rational() && ratio.coef_.is_one();
}

std::ostream& operator<<(std::ostream& os, const Surd& s) { return os << s.str(); }

}  // namespace liesym
