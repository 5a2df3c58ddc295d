#include "liesym/subalgebra.hpp"

namespace liesym {

Subspace Subspace::span(const Matrix<Rational>& rows, std::size_t ambient_dim) {
    for (const auto& r : rows)
        if (r.size() != ambient_dim) throw DimensionMismatch("spanning vector has wrong length");
    Subspace s;
    s.ambient_ = ambient_dim;
    s.echelon_ = rref(rows, ambient_dim);
    return s;
}

Subspace Subspace::zero(std::size_t ambient_dim) { return span({}, ambient_dim); }

Subspace Subspace::whole(std::size_t ambient_dim) { return span(identity<Rational>(ambient_dim), ambient_dim); }

Subspace Subspace::kernel(const Matrix<Rational>& forms, std::size_t ambient_dim) {
    if (forms.empty()) return whole(ambient_dim);
    return span(nullspace(forms, ambient_dim), ambient_dim);
}

bool Subspace::contains(const Subspace& other) const {
    for (const auto& r : other.rows())
        if (!contains(r)) return false;
    return true;
}

Matrix<Rational> Subspace::annihilator() const {
    if (dim() == 0) return identity<Rational>(ambient_);
    return nullspace(rows(), ambient_);
}

Subspace Subspace::intersect(const Subspace& other) const {
    Matrix<Rational> forms = annihilator();
    for (auto& f : other.annihilator()) forms.push_back(f);
    return kernel(forms, ambient_);
}

Subspace Subspace::sum(const Subspace& other) const {
    Matrix<Rational> all = rows();
    all.insert(all.end(), other.rows().begin(), other.rows().end());
    return span(all, ambient_);
}

Subalgebra Subalgebra::make(const LieAlgebraQ& l, const Subspace& s) {
    if (s.ambient_dim() != l.dim()) throw DimensionMismatch("subspace does not live in this algebra");
    Subalgebra out;
    out.space_ = s;
    const auto& rows = s.rows();
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
            auto b = l.bracket(rows[i], rows[j]);
            auto coords = coordinates_in(s.echelon(), b);
            if (!coords) throw NotClosed("bracket of " + format_element(rows[i], l.labels()) + " and " +
                                         format_element(rows[j], l.labels()) + " leaves the span");
            out.certificate_.push_back({i, j, std::move(*coords)});
        }
    return out;
}

Subalgebra Subalgebra::trivial(std::size_t ambient_dim) {
    Subalgebra out;
    out.space_ = Subspace::zero(ambient_dim);
    return out;
}

bool Subalgebra::verify_certificate(const LieAlgebraQ& l) const {
    const auto& rows = space_.rows();
    if (certificate_.size() != rows.size() * (rows.size() - (rows.empty() ? 0 : 1)) / 2) return false;
    for (const auto& c : certificate_) {
        Vec<Rational> rhs(l.dim(), Rational(0));
        for (std::size_t m = 0; m < rows.size(); ++m)
            for (std::size_t q = 0; q < l.dim(); ++q) rhs[q] += c.coords[m] * rows[m][q];
        if (rhs != l.bracket(rows[c.i], rows[c.j])) return false;
    }
    return true;
}

bool is_closed(const LieAlgebraQ& l, const Subspace& s) {
    const auto& rows = s.rows();
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i + 1; j < rows.size(); ++j)
            if (!s.contains(l.bracket(rows[i], rows[j]))) return false;
    return true;
}

Subspace bracket_span(const LieAlgebraQ& l, const Subspace& a, const Subspace& b) {
    Matrix<Rational> out;
    for (const auto& x : a.rows())
        for (const auto& y : b.rows()) out.push_back(l.bracket(x, y));
    return Subspace::span(out, l.dim());
}

Subalgebra center(const LieAlgebraQ& l) {
    const std::size_t n = l.dim();
    Matrix<Rational> eqs;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t m = 0; m < n; ++m) {
            Vec<Rational> row(n, Rational(0));
            for (std::size_t i = 0; i < n; ++i) row[i] = l.constant(i, j, m);
            if (!is_zero_vec(row)) eqs.push_back(std::move(row));
        }
    return Subalgebra::make(l, Subspace::kernel(eqs, n));
}

Subalgebra center(const LieAlgebra& l, const Rational& k) { return center(evaluate(l, k)); }

Subalgebra derived_subalgebra(const LieAlgebraQ& l) {
    auto whole = Subspace::whole(l.dim());
    return Subalgebra::make(l, bracket_span(l, whole, whole));
}

Subalgebra derived_subalgebra(const LieAlgebra& l, const Rational& k) { return derived_subalgebra(evaluate(l, k)); }

Subalgebra normalizer(const LieAlgebraQ& l, const Subspace& n) {
    const std::size_t d = l.dim();
    Matrix<Rational> q = n.annihilator();
    if (n.dim() == d) return Subalgebra::make(l, n);
    Matrix<Rational> eqs;
    for (const auto& x : n.rows()) {
        std::vector<Vec<Rational>> images;
        for (std::size_t i = 0; i < d; ++i) images.push_back(l.bracket(l.basis(i), x));
        for (const auto& form : q) {
            Vec<Rational> row(d, Rational(0));
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t m = 0; m < d; ++m) row[i] += form[m] * images[i][m];
            if (!is_zero_vec(row)) eqs.push_back(std::move(row));
        }
    }
    return Subalgebra::make(l, Subspace::kernel(eqs, d));
}

Subalgebra normalizer(const LieAlgebra& l, const Subspace& n, const Rational& k) {
    return normalizer(evaluate(l, k), n);
}

Subalgebra close_subspace(const LieAlgebraQ& l, const Matrix<Rational>& gens) {
    Matrix<Rational> nonzero;
    for (const auto& g : gens) {
        if (g.size() != l.dim()) throw DimensionMismatch("generator has wrong length");
        if (!is_zero_vec(g)) nonzero.push_back(g);
    }
    if (nonzero.empty()) throw ZeroVector("close_subspace needs a nonzero generator");
    Subspace s = Subspace::span(nonzero, l.dim());
    for (std::size_t iter = 0; iter <= l.dim(); ++iter) {
        Subspace next = s.sum(bracket_span(l, s, s));
        if (next == s) return Subalgebra::make(l, s);
        s = next;
    }
    throw Error("closure did not reach a fixpoint");
}

Subalgebra close_subspace(const LieAlgebra& l, const Matrix<Rational>& gens, const Rational& k) {
    return close_subspace(evaluate(l, k), gens);
}

std::string format_subspace(const Subspace& s, const std::vector<std::string>& labels) {
    if (s.dim() == 0) return "{0}";
    std::string out = "{";
    for (std::size_t i = 0; i < s.dim(); ++i) {
        if (i) out += ", ";
        out += format_element(s.rows()[i], labels);
    }
    return out + "}";
}

}  // namespace liesym
