#include "liesym/rational.hpp"

#include <cctype>
#include <ostream>

#include "liesym/error.hpp"

namespace liesym {

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    std::size_t start = 0;
    while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
    s = s.substr(start);
    if (s.empty()) throw ParseError("empty rational");

    auto parse_int = [&](const std::string& part) -> Integer {
        if (part.empty() || part == "-" || part == "+") throw ParseError("malformed rational '" + s + "'");
        std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i])))
                throw ParseError("malformed rational '" + s + "'");
        Integer z;
        z.set_str(part[0] == '+' ? part.substr(1) : part, 10);
        return z;
    };

    if (auto slash = s.find('/'); slash != std::string::npos) {
        Integer n = parse_int(s.substr(0, slash));
        Integer d = parse_int(s.substr(slash + 1));
        if (d == 0) throw ParseError("zero denominator in '" + s + "'");
        return {n, d};
    }
    if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string whole = s.substr(0, dot);
        std::string frac = s.substr(dot + 1);
        bool negative = !whole.empty() && whole[0] == '-';
        if (whole.empty() || whole == "-" || whole == "+") whole += "0";
        if (frac.empty()) throw ParseError("malformed rational '" + s + "'");
        Integer w = parse_int(whole);
        Integer f = parse_int(frac);
        if (frac[0] == '-' || frac[0] == '+') throw ParseError("malformed rational '" + s + "'");
        Integer scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        Integer magnitude = Integer(::abs(w)) * scale + f;
        return {negative ? Integer(-magnitude) : magnitude, scale};
    }
    return Rational(parse_int(s));
}

std::string Rational::str() const { return value_.get_str(10); }

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return Rational(mpq_class(1 / value_));
}

Rational Rational::pow(long exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return {n, d};
}

Rational& Rational::operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
}
Rational& Rational::operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
}
Rational& Rational::operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
}
Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero("division by zero rational");
    value_ /= o.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

bool exact_root(const Integer& value, unsigned long n, Integer& root) {
    if (value < 0) return false;
    return mpz_root(root.get_mpz_t(), value.get_mpz_t(), n) != 0;
}

bool exact_root(const Rational& value, unsigned long n, Rational& root) {
    if (value.sign() < 0) return false;
    Integer rn, rd;
    if (!exact_root(value.num(), n, rn) || !exact_root(value.den(), n, rd)) return false;
    root = Rational(rn, rd);
    return true;
}

}  // namespace liesym
