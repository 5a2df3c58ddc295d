#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "liesym/linalg.hpp"
#include "liesym/param_scalar.hpp"
#include "liesym/rational.hpp"

namespace liesym {

template <class T>
using Element = Vec<T>;

/// Structure constant entry [e_i, e_j] = sum_m coeffs[m] e_m (0-based indices).
template <class T>
struct BracketEntry {
    int i;
    int j;
    Vec<T> coeffs;
};

/// Finite-dimensional Lie algebra given by structure constants over T.
///
/// Only the upper triangle i < j is stored; antisymmetry supplies the rest.
template <class T>
class BasicLieAlgebra {
public:
    BasicLieAlgebra() = default;
    BasicLieAlgebra(std::vector<std::string> labels, const std::vector<BracketEntry<T>>& entries)
        : labels_(std::move(labels)) {
        const std::size_t n = labels_.size();
        table_.assign(n, std::vector<Vec<T>>(n, Vec<T>(n, T(0))));
        for (const auto& e : entries) {
            if (e.i < 0 || e.j < 0 || static_cast<std::size_t>(e.i) >= n || static_cast<std::size_t>(e.j) >= n ||
                e.coeffs.size() != n)
                throw DimensionMismatch("structure constant entry out of range");
            if (e.i == e.j) {
                if (!is_zero_vec(e.coeffs)) throw Error("[x, x] must vanish");
                continue;
            }
            table_[static_cast<std::size_t>(e.i)][static_cast<std::size_t>(e.j)] = e.coeffs;
            Vec<T> neg = e.coeffs;
            for (auto& x : neg) x = -x;
            table_[static_cast<std::size_t>(e.j)][static_cast<std::size_t>(e.i)] = std::move(neg);
        }
    }

    [[nodiscard]] std::size_t dim() const { return labels_.size(); }
    [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
    [[nodiscard]] const Vec<T>& bracket_basis(std::size_t i, std::size_t j) const { return table_[i][j]; }
    [[nodiscard]] const T& constant(std::size_t i, std::size_t j, std::size_t m) const { return table_[i][j][m]; }

    [[nodiscard]] Element<T> basis(std::size_t i) const {
        Element<T> e(dim(), T(0));
        e[i] = T(1);
        return e;
    }

    [[nodiscard]] Element<T> zero() const { return Element<T>(dim(), T(0)); }

    /// Bilinear extension of the structure constants.
    [[nodiscard]] Element<T> bracket(const Element<T>& x, const Element<T>& y) const {
        if (x.size() != dim() || y.size() != dim()) throw DimensionMismatch("element length differs from algebra dimension");
        Element<T> out = zero();
        for (std::size_t i = 0; i < dim(); ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim(); ++j) {
                if (i == j || y[j].is_zero()) continue;
                T f = x[i] * y[j];
                const auto& c = table_[i][j];
                for (std::size_t m = 0; m < dim(); ++m)
                    if (!c[m].is_zero()) out[m] = out[m] + f * c[m];
            }
        }
        return out;
    }

    [[nodiscard]] std::vector<BracketEntry<T>> entries() const {
        std::vector<BracketEntry<T>> out;
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = i + 1; j < dim(); ++j)
                if (!is_zero_vec(table_[i][j])) out.push_back({static_cast<int>(i), static_cast<int>(j), table_[i][j]});
        return out;
    }

    /// Index of a basis label, or -1.
    [[nodiscard]] int index_of(std::string_view label) const {
        for (std::size_t i = 0; i < labels_.size(); ++i)
            if (labels_[i] == label) return static_cast<int>(i);
        return -1;
    }

    friend bool operator==(const BasicLieAlgebra& a, const BasicLieAlgebra& b) = default;

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<Vec<T>>> table_;
};

using LieAlgebra = BasicLieAlgebra<ParamScalar>;
using LieAlgebraQ = BasicLieAlgebra<Rational>;

/// Structure constants at a fixed rational k.
LieAlgebraQ evaluate(const LieAlgebra& l, const Rational& k);
LieAlgebra promote(const LieAlgebraQ& l);

/// New basis f_i = sum_j change[i][j] e_j; change must be invertible.
template <class T>
BasicLieAlgebra<T> change_basis(const BasicLieAlgebra<T>& l, const Matrix<T>& change,
                                std::vector<std::string> new_labels) {
    auto inv = inverse(change);
    if (!inv) throw Error("basis change is singular");
    const std::size_t n = l.dim();
    std::vector<BracketEntry<T>> entries;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vec<T> in_old = l.bracket(change[i], change[j]);
            // Row vector coordinates: in_old = c * change, so c = in_old * change^{-1}.
            Vec<T> c(n, T(0));
            for (std::size_t m = 0; m < n; ++m)
                for (std::size_t r = 0; r < n; ++r)
                    if (!in_old[r].is_zero() && !(*inv)[r][m].is_zero()) c[m] = c[m] + in_old[r] * (*inv)[r][m];
            if (!is_zero_vec(c)) entries.push_back({static_cast<int>(i), static_cast<int>(j), std::move(c)});
        }
    return BasicLieAlgebra<T>(std::move(new_labels), entries);
}

/// Witness of a Jacobi failure: indices (i, j, k) and the nonzero output component p.
struct JacobiViolation {
    int i, j, k, p;
    std::string value;
};

struct JacobiReport {
    bool ok = true;
    std::size_t triples_checked = 0;
    std::optional<JacobiViolation> violation;
};

template <class T>
JacobiReport check_jacobi(const BasicLieAlgebra<T>& l) {
    JacobiReport report;
    const std::size_t n = l.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                ++report.triples_checked;
                auto ei = l.basis(i), ej = l.basis(j), ek = l.basis(k);
                Element<T> a = l.bracket(ei, l.bracket(ej, ek));
                Element<T> b = l.bracket(ej, l.bracket(ek, ei));
                Element<T> c = l.bracket(ek, l.bracket(ei, ej));
                for (std::size_t p = 0; p < n; ++p) {
                    T s = a[p] + b[p] + c[p];
                    if (!s.is_zero()) {
                        report.ok = false;
                        std::ostringstream os;
                        os << s;
                        report.violation = JacobiViolation{static_cast<int>(i), static_cast<int>(j), static_cast<int>(k),
                                                           static_cast<int>(p), os.str()};
                        return report;
                    }
                }
            }
    return report;
}

/// The four-dimensional algebra [v2,v4] = -k v2, [v3,v4] = (1-k) v3, all else zero.
LieAlgebra symmetry_algebra();

/// Abelian algebra with the given labels.
LieAlgebra abelian_algebra(std::vector<std::string> labels);

/// JSON schema: {"dimension": n, "basis": [...], "brackets": [{"i":1,"j":2,"m":3,"coeff":"-k"}, ...]}
/// with 1-based indices.
LieAlgebra algebra_from_json(const std::string& text);
std::string algebra_to_json(const LieAlgebra& l);

/// Parses a linear combination of basis labels such as "v2 + 3/2*v4" or "-(k-1)/k*e2".
Element<ParamScalar> parse_element(const LieAlgebra& l, std::string_view text);
Element<Rational> parse_element(const LieAlgebraQ& l, std::string_view text);

/// Comma separated coefficients such as "2,3,5,0".
Element<Rational> parse_vector(std::string_view text, std::size_t dim);

template <class T>
std::string format_element(const Element<T>& x, const std::vector<std::string>& labels);

}  // namespace liesym
