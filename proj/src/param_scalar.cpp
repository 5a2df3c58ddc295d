#include "liesym/param_scalar.hpp"

#include <cctype>
#include <ostream>

#include "liesym/error.hpp"

namespace liesym {

ParamScalar::ParamScalar(const Rational& c) : num_(Rational(c.num())), den_(Rational(c.den())) {}

ParamScalar::ParamScalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    canonicalize();
}

ParamScalar ParamScalar::k() { return {Poly::variable(), Poly(Rational(1))}; }

void ParamScalar::canonicalize() {
    if (num_.is_zero()) {
        den_ = Poly(Rational(1));
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = Poly::divmod(num_, g).first;
        den_ = Poly::divmod(den_, g).first;
    }
    // Clear denominators jointly, then remove the joint integer content.
    Integer l;
    mpz_lcm(l.get_mpz_t(), num_.denominator_lcm().get_mpz_t(), den_.denominator_lcm().get_mpz_t());
    num_ = num_.scaled(Rational(l));
    den_ = den_.scaled(Rational(l));
    Integer content;
    mpz_gcd(content.get_mpz_t(), num_.numerator_gcd().get_mpz_t(), den_.numerator_gcd().get_mpz_t());
    Rational factor(Integer(1), content);
    if (den_.leading().sign() < 0) factor = -factor;
    num_ = num_.scaled(factor);
    den_ = den_.scaled(factor);
}

ParamScalar param_simplify(const Poly& num, const Poly& den) { return {num, den}; }

Rational ParamScalar::constant() const {
    if (!is_constant()) throw Error("rational function '" + str() + "' is not constant");
    return num_.coeff(0) / den_.coeff(0);
}

Rational ParamScalar::eval(const Rational& k) const {
    Rational d = den_.eval(k);
    if (d.is_zero()) throw PoleAtK("'" + str() + "' has a pole at k = " + k.str());
    return num_.eval(k) / d;
}

Rational param_eval(const ParamScalar& s, const Rational& k) { return s.eval(k); }

std::string ParamScalar::str() const {
    if (den_.degree() == 0 && den_.coeff(0).is_one()) return num_.str();
    std::string n = num_.str();
    std::string d = den_.str();
    bool wrap_num = !num_.is_monomial();
    bool wrap_den = !den_.is_monomial() || den_.leading().sign() < 0 ||
                    (den_.degree() > 0 && !den_.leading().is_one());
    return (wrap_num ? "(" + n + ")" : n) + "/" + (wrap_den ? "(" + d + ")" : d);
}

ParamScalar ParamScalar::inverse() const {
    if (is_zero()) throw DivisionByZero("division by the zero function");
    return {den_, num_};
}

ParamScalar& ParamScalar::operator+=(const ParamScalar& o) {
    if (den_ == o.den_) {
        *this = ParamScalar(num_ + o.num_, den_);
    } else {
        *this = ParamScalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    return *this;
}

ParamScalar& ParamScalar::operator-=(const ParamScalar& o) { return *this += -o; }

ParamScalar& ParamScalar::operator*=(const ParamScalar& o) {
    *this = ParamScalar(num_ * o.num_, den_ * o.den_);
    return *this;
}

ParamScalar& ParamScalar::operator/=(const ParamScalar& o) {
    if (o.is_zero()) throw DivisionByZero("division by the zero function");
    *this = ParamScalar(num_ * o.den_, den_ * o.num_);
    return *this;
}

std::ostream& operator<<(std::ostream& os, const ParamScalar& s) { return os << s.str(); }

namespace {

class ExprParser {
public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    ParamScalar parse() {
        ParamScalar v = expr();
        skip();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("cannot parse '" + std::string(text_) + "': " + what);
    }
    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    ParamScalar expr() {
        ParamScalar v = term();
        for (;;) {
            if (accept('+')) {
                v += term();
            } else if (accept('-')) {
                v -= term();
            } else {
                return v;
            }
        }
    }

    ParamScalar term() {
        ParamScalar v = unary();
        for (;;) {
            if (accept('*')) {
                v *= unary();
            } else if (accept('/')) {
                ParamScalar d = unary();
                if (d.is_zero()) fail("division by zero");
                v /= d;
            } else {
                return v;
            }
        }
    }

    ParamScalar unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    ParamScalar power() {
        ParamScalar base = atom();
        if (!accept('^')) return base;
        skip();
        bool negative = accept('-');
        skip();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer exponent");
        long e = std::stol(std::string(text_.substr(start, pos_ - start)));
        ParamScalar out(1);
        for (long i = 0; i < e; ++i) out *= base;
        return negative ? out.inverse() : out;
    }

    ParamScalar atom() {
        skip();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            ParamScalar v = expr();
            if (!accept(')')) fail("missing ')'");
            return v;
        }
        if (c == 'k') {
            ++pos_;
            return ParamScalar::k();
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
                ++pos_;
            return Rational::parse(text_.substr(start, pos_ - start));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

ParamScalar ParamScalar::parse(std::string_view text) { return ExprParser(text).parse(); }

}  // namespace liesym
