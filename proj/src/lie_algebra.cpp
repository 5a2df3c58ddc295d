#include "liesym/lie_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <json.hpp>

namespace liesym {

using nlohmann::json;

LieAlgebraQ evaluate(const LieAlgebra& l, const Rational& k) {
    std::vector<BracketEntry<Rational>> entries;
    for (const auto& e : l.entries()) {
        Vec<Rational> c;
        c.reserve(e.coeffs.size());
        for (const auto& x : e.coeffs) c.push_back(x.eval(k));
        entries.push_back({e.i, e.j, std::move(c)});
    }
    return {l.labels(), entries};
}

LieAlgebra promote(const LieAlgebraQ& l) {
    std::vector<BracketEntry<ParamScalar>> entries;
    for (const auto& e : l.entries()) {
        Vec<ParamScalar> c(e.coeffs.begin(), e.coeffs.end());
        entries.push_back({e.i, e.j, std::move(c)});
    }
    return {l.labels(), entries};
}

LieAlgebra symmetry_algebra() {
    const ParamScalar k = ParamScalar::k();
    std::vector<BracketEntry<ParamScalar>> entries{
        {1, 3, {0, -k, 0, 0}},
        {2, 3, {0, 0, ParamScalar(1) - k, 0}},
    };
    return {{"v1", "v2", "v3", "v4"}, entries};
}

LieAlgebra abelian_algebra(std::vector<std::string> labels) { return {std::move(labels), {}}; }

LieAlgebra algebra_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("algebra JSON: ") + e.what());
    }
    try {
        const auto n = j.at("dimension").get<std::size_t>();
        auto labels = j.at("basis").get<std::vector<std::string>>();
        if (labels.size() != n) throw ParseError("algebra JSON: basis has wrong length");
        std::vector<Vec<ParamScalar>> acc(n * n, Vec<ParamScalar>(n, ParamScalar(0)));
        for (const auto& b : j.at("brackets")) {
            const int i = b.at("i").get<int>() - 1;
            const int jj = b.at("j").get<int>() - 1;
            const int m = b.at("m").get<int>() - 1;
            if (i < 0 || jj < 0 || m < 0 || i >= static_cast<int>(n) || jj >= static_cast<int>(n) ||
                m >= static_cast<int>(n))
                throw ParseError("algebra JSON: bracket index out of range");
            if (i == jj) throw ParseError("algebra JSON: [x, x] entry");
            ParamScalar c = ParamScalar::parse(b.at("coeff").get<std::string>());
            if (i < jj) {
                acc[static_cast<std::size_t>(i) * n + static_cast<std::size_t>(jj)][static_cast<std::size_t>(m)] += c;
            } else {
                acc[static_cast<std::size_t>(jj) * n + static_cast<std::size_t>(i)][static_cast<std::size_t>(m)] -= c;
            }
        }
        std::vector<BracketEntry<ParamScalar>> entries;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t jj = i + 1; jj < n; ++jj)
                if (!is_zero_vec(acc[i * n + jj]))
                    entries.push_back({static_cast<int>(i), static_cast<int>(jj), acc[i * n + jj]});
        return {std::move(labels), entries};
    } catch (const json::exception& e) {
        throw ParseError(std::string("algebra JSON: ") + e.what());
    }
}

std::string algebra_to_json(const LieAlgebra& l) {
    json j;
    j["dimension"] = l.dim();
    j["basis"] = l.labels();
    json brackets = json::array();
    for (const auto& e : l.entries())
        for (std::size_t m = 0; m < l.dim(); ++m)
            if (!e.coeffs[m].is_zero())
                brackets.push_back({{"i", e.i + 1}, {"j", e.j + 1}, {"m", m + 1}, {"coeff", e.coeffs[m].str()}});
    j["brackets"] = brackets;
    return j.dump(2);
}

namespace {

std::string trim(std::string_view s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

std::vector<std::string> split_terms(std::string_view text) {
    std::vector<std::string> terms;
    int depth = 0;
    std::size_t start = 0;
    char prev = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if ((c == '+' || c == '-') && depth == 0 && i > start && prev != '*' && prev != '/' && prev != '^') {
            std::string t = trim(text.substr(start, i - start));
            if (!t.empty()) terms.push_back(t);
            start = i;
        }
        if (!std::isspace(static_cast<unsigned char>(c))) prev = c;
    }
    std::string t = trim(text.substr(start));
    if (!t.empty()) terms.push_back(t);
    return terms;
}

template <class T>
Element<T> parse_element_impl(const std::vector<std::string>& labels, std::string_view text,
                              T (*coef_parser)(std::string_view)) {
    Element<T> out(labels.size(), T(0));
    auto terms = split_terms(text);
    if (terms.empty()) throw ParseError("empty element expression");
    for (const auto& term : terms) {
        std::size_t end = term.size();
        std::size_t pos = end;
        while (pos > 0 && (std::isalnum(static_cast<unsigned char>(term[pos - 1])) || term[pos - 1] == '_')) --pos;
        std::string label = term.substr(pos);
        auto it = std::find(labels.begin(), labels.end(), label);
        if (label.empty() || it == labels.end()) throw ParseError("unknown basis label in term '" + term + "'");
        std::string coef = trim(term.substr(0, pos));
        if (!coef.empty() && coef.back() == '*') coef = trim(coef.substr(0, coef.size() - 1));
        T c(1);
        if (coef.empty() || coef == "+") {
            c = T(1);
        } else if (coef == "-") {
            c = T(-1);
        } else {
            c = coef_parser(coef);
        }
        auto idx = static_cast<std::size_t>(it - labels.begin());
        out[idx] = out[idx] + c;
    }
    return out;
}

ParamScalar parse_param(std::string_view s) { return ParamScalar::parse(s); }
Rational parse_rational_expr(std::string_view s) {
    ParamScalar p = ParamScalar::parse(s);
    if (!p.is_constant()) throw ParseError("coefficient '" + std::string(s) + "' depends on k");
    return p.constant();
}

}  // namespace

Element<ParamScalar> parse_element(const LieAlgebra& l, std::string_view text) {
    return parse_element_impl<ParamScalar>(l.labels(), text, &parse_param);
}

Element<Rational> parse_element(const LieAlgebraQ& l, std::string_view text) {
    return parse_element_impl<Rational>(l.labels(), text, &parse_rational_expr);
}

Element<Rational> parse_vector(std::string_view text, std::size_t dim) {
    Element<Rational> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == ',') {
            out.push_back(Rational::parse(trim(text.substr(start, i - start))));
            start = i + 1;
        }
    }
    if (out.size() != dim)
        throw DimensionMismatch("vector has " + std::to_string(out.size()) + " entries, expected " + std::to_string(dim));
    return out;
}

namespace {

std::string coef_string(const Rational& c) { return c.str(); }
std::string coef_string(const ParamScalar& c) {
    std::string s = c.str();
    bool simple = c.is_constant() || (c.den().degree() == 0 && c.num().is_monomial());
    return simple ? s : "(" + s + ")";
}

template <class T>
std::string format_impl(const Element<T>& x, const std::vector<std::string>& labels) {
    std::string out;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        std::string c = coef_string(x[i]);
        std::string term;
        if (c == "1") {
            term = labels[i];
        } else if (c == "-1") {
            term = "-" + labels[i];
        } else {
            term = c + " * " + labels[i];
        }
        if (out.empty()) {
            out = term;
        } else if (term[0] == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace

template <>
std::string format_element<Rational>(const Element<Rational>& x, const std::vector<std::string>& labels) {
    return format_impl(x, labels);
}

template <>
std::string format_element<ParamScalar>(const Element<ParamScalar>& x, const std::vector<std::string>& labels) {
    return format_impl(x, labels);
}

}  // namespace liesym
