#include "liesym/vector_field.hpp"

#include <cctype>
#include <sstream>

#include "liesym/error.hpp"

namespace liesym {

namespace {

constexpr std::array<const char*, 3> kCoordNames{"t", "S", "u"};

std::string trim(std::string_view s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

bool coord_from_name(std::string_view name, Coord& out) {
    if (name == "t") {
        out = Coord::t;
    } else if (name == "S" || name == "x") {
        out = Coord::S;
    } else if (name == "u") {
        out = Coord::u;
    } else {
        return false;
    }
    return true;
}

std::vector<std::string> split_top(std::string_view text, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '(') ++depth;
        if (text[i] == ')') --depth;
        if (text[i] == sep && depth == 0) {
            out.push_back(trim(text.substr(start, i - start)));
            start = i + 1;
        }
    }
    out.push_back(trim(text.substr(start)));
    return out;
}

std::vector<std::string> split_sum(std::string_view text) {
    std::vector<std::string> out;
    int depth = 0;
    std::size_t start = 0;
    char prev = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if ((c == '+' || c == '-') && depth == 0 && i > start && prev != '*' && prev != '^') {
            std::string t = trim(text.substr(start, i - start));
            if (!t.empty()) out.push_back(t);
            start = i;
        }
        if (!std::isspace(static_cast<unsigned char>(c))) prev = c;
    }
    std::string t = trim(text.substr(start));
    if (!t.empty()) out.push_back(t);
    return out;
}

}  // namespace

VectorField VectorField::partial(Coord direction) { return term(ParamScalar(1), {0, 0, 0}, direction); }

VectorField VectorField::term(const ParamScalar& c, std::array<int, 3> exponents, Coord direction) {
    for (int e : exponents)
        if (e < 0) throw Error("negative exponent in vector field coefficient");
    VectorField v;
    v.add_term(Key{exponents, direction}, c);
    return v;
}

void VectorField::add_term(const Key& key, const ParamScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

VectorField& VectorField::operator+=(const VectorField& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

VectorField& VectorField::operator-=(const VectorField& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

VectorField operator*(const ParamScalar& c, const VectorField& v) {
    VectorField out;
    for (const auto& [k, x] : v.terms_) out.add_term(k, c * x);
    return out;
}

VectorField VectorField::at(const Rational& k) const {
    VectorField out;
    for (const auto& [key, c] : terms_) out.add_term(key, ParamScalar(c.eval(k)));
    return out;
}

std::string VectorField::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Print d/dt, d/dS, d/du groups in order.
    for (int d = 0; d < 3; ++d)
        for (const auto& [key, c] : terms_) {
            if (static_cast<int>(key.direction) != d) continue;
            std::string coef = c.str();
            bool negative = !coef.empty() && coef[0] == '-' && (c.den().degree() == 0 && c.num().is_monomial());
            if (negative) coef = coef.substr(1);
            bool wrap = !(c.den().degree() == 0 && c.num().is_monomial());
            if (!first) os << (negative ? " - " : " + ");
            else if (negative) os << "-";
            first = false;
            std::vector<std::string> factors;
            if (coef != "1") factors.push_back(wrap ? "(" + coef + ")" : coef);
            for (int v = 0; v < 3; ++v) {
                int e = key.exponents[static_cast<std::size_t>(v)];
                if (e == 0) continue;
                factors.push_back(std::string(kCoordNames[static_cast<std::size_t>(v)]) +
                                  (e > 1 ? "^" + std::to_string(e) : ""));
            }
            factors.push_back(std::string("d/d") + kCoordNames[static_cast<std::size_t>(d)]);
            for (std::size_t f = 0; f < factors.size(); ++f) os << (f ? "*" : "") << factors[f];
        }
    return os.str();
}

VectorField VectorField::parse(std::string_view text) {
    VectorField out;
    auto terms = split_sum(text);
    if (terms.empty()) throw ParseError("empty vector field");
    for (auto term : terms) {
        bool negative = false;
        while (!term.empty() && (term[0] == '+' || term[0] == '-')) {
            negative ^= term[0] == '-';
            term = trim(term.substr(1));
        }
        ParamScalar coef(negative ? -1 : 1);
        std::array<int, 3> exps{0, 0, 0};
        bool have_direction = false;
        Coord direction = Coord::t;
        // "d/dS" contains '/', so split on '*' only and recognise the derivative token.
        for (const auto& factor : split_top(term, '*')) {
            if (factor.empty()) throw ParseError("empty factor in '" + term + "'");
            if (factor.rfind("d/d", 0) == 0) {
                if (have_direction) throw ParseError("two derivatives in '" + term + "'");
                if (!coord_from_name(factor.substr(3), direction))
                    throw ParseError("unknown derivative '" + factor + "'");
                have_direction = true;
                continue;
            }
            std::string name = factor;
            int power = 1;
            if (auto caret = factor.find('^'); caret != std::string::npos && factor[0] != '(') {
                name = trim(factor.substr(0, caret));
                power = std::stoi(factor.substr(caret + 1));
            }
            Coord c;
            if (coord_from_name(name, c)) {
                exps[static_cast<std::size_t>(c)] += power;
                continue;
            }
            coef *= ParamScalar::parse(factor);
        }
        if (!have_direction) throw ParseError("term '" + term + "' has no d/dX factor");
        out.add_term(Key{exps, direction}, coef);
    }
    return out;
}

VectorField vf_bracket(const VectorField& x, const VectorField& y) {
    // X(f d/dj) contribution: sum over X terms (c, m, i) of c * m * d_i(f) d/dj.
    auto apply = [](const VectorField& a, const VectorField& b) {
        VectorField out;
        for (const auto& [kb, cb] : b.terms())
            for (const auto& [ka, ca] : a.terms()) {
                auto i = static_cast<std::size_t>(ka.direction);
                int e = kb.exponents[i];
                if (e == 0) continue;
                std::array<int, 3> exps{};
                for (std::size_t v = 0; v < 3; ++v) exps[v] = kb.exponents[v] + ka.exponents[v];
                exps[i] -= 1;
                out += VectorField::term(ca * cb * ParamScalar(e), exps, kb.direction);
            }
        return out;
    };
    return apply(x, y) - apply(y, x);
}

RealizationReport verify_realization(const std::vector<VectorField>& fields, const LieAlgebra& l) {
    if (fields.size() != l.dim()) throw DimensionMismatch("number of fields differs from algebra dimension");
    RealizationReport report;
    for (std::size_t i = 0; i < fields.size(); ++i)
        for (std::size_t j = i + 1; j < fields.size(); ++j) {
            ++report.pairs_checked;
            VectorField lhs = vf_bracket(fields[i], fields[j]);
            VectorField rhs;
            for (std::size_t m = 0; m < l.dim(); ++m) rhs += l.constant(i, j, m) * fields[m];
            if (!(lhs == rhs)) {
                report.ok = false;
                report.mismatches.push_back({i, j, lhs.str(), rhs.str()});
            }
        }
    return report;
}

std::vector<VectorField> symmetry_generators() {
    return {
        VectorField::parse("d/dt"),
        VectorField::parse("S*d/du"),
        VectorField::parse("d/du"),
        VectorField::parse("S*d/dS + (1-k)*u*d/du"),
    };
}

}  // namespace liesym
