#pragma once

#include <string>
#include <vector>

#include "liesym/lie_algebra.hpp"

namespace liesym {

/// Linear subspace of Q^n stored as a reduced row-echelon basis.
///
/// The echelon form is canonical, so equality of subspaces is equality of
/// the stored bases.
class Subspace {
public:
    Subspace() = default;
    static Subspace span(const Matrix<Rational>& rows, std::size_t ambient_dim);
    static Subspace zero(std::size_t ambient_dim);
    static Subspace whole(std::size_t ambient_dim);
    /// Common zero set of the given linear forms.
    static Subspace kernel(const Matrix<Rational>& forms, std::size_t ambient_dim);

    [[nodiscard]] std::size_t dim() const { return echelon_.rows.size(); }
    [[nodiscard]] std::size_t ambient_dim() const { return ambient_; }
    [[nodiscard]] const Matrix<Rational>& rows() const { return echelon_.rows; }
    [[nodiscard]] const std::vector<int>& pivots() const { return echelon_.pivots; }
    [[nodiscard]] const Echelon<Rational>& echelon() const { return echelon_; }

    [[nodiscard]] bool contains(const Vec<Rational>& v) const { return coordinates_in(echelon_, v).has_value(); }
    [[nodiscard]] bool contains(const Subspace& other) const;
    /// Linear forms whose common kernel is this subspace.
    [[nodiscard]] Matrix<Rational> annihilator() const;

    [[nodiscard]] Subspace intersect(const Subspace& other) const;
    [[nodiscard]] Subspace sum(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b) = default;

private:
    Echelon<Rational> echelon_;
    std::size_t ambient_ = 0;
};

/// [b_i, b_j] = sum_m coords[m] b_m for the stored basis rows.
struct ClosureEntry {
    std::size_t i;
    std::size_t j;
    Vec<Rational> coords;
};

/// Subspace closed under the bracket, with the closure certificate kept.
class Subalgebra {
public:
    Subalgebra() = default;
    /// Throws NotClosed if some bracket leaves the span.
    static Subalgebra make(const LieAlgebraQ& l, const Subspace& s);
    static Subalgebra make(const LieAlgebraQ& l, const Matrix<Rational>& rows) {
        return make(l, Subspace::span(rows, l.dim()));
    }
    static Subalgebra trivial(std::size_t ambient_dim);

    [[nodiscard]] const Subspace& space() const { return space_; }
    [[nodiscard]] std::size_t dim() const { return space_.dim(); }
    [[nodiscard]] const Matrix<Rational>& rows() const { return space_.rows(); }
    [[nodiscard]] const std::vector<ClosureEntry>& certificate() const { return certificate_; }
    /// Re-checks the stored certificate against the algebra.
    [[nodiscard]] bool verify_certificate(const LieAlgebraQ& l) const;

    friend bool operator==(const Subalgebra& a, const Subalgebra& b) { return a.space_ == b.space_; }

private:
    Subspace space_;
    std::vector<ClosureEntry> certificate_;
};

bool is_closed(const LieAlgebraQ& l, const Subspace& s);

/// Span of [x, y] for x in a, y in b.
Subspace bracket_span(const LieAlgebraQ& l, const Subspace& a, const Subspace& b);

Subalgebra center(const LieAlgebraQ& l);
Subalgebra center(const LieAlgebra& l, const Rational& k);

Subalgebra derived_subalgebra(const LieAlgebraQ& l);
Subalgebra derived_subalgebra(const LieAlgebra& l, const Rational& k);

/// {y : [y, x] in N for all x in N}.
Subalgebra normalizer(const LieAlgebraQ& l, const Subspace& n);
Subalgebra normalizer(const LieAlgebra& l, const Subspace& n, const Rational& k);

/// Smallest subalgebra containing the generators. Zero generators are ignored;
/// an all-zero list is an error.
Subalgebra close_subspace(const LieAlgebraQ& l, const Matrix<Rational>& gens);
Subalgebra close_subspace(const LieAlgebra& l, const Matrix<Rational>& gens, const Rational& k);

std::string format_subspace(const Subspace& s, const std::vector<std::string>& labels);

}  // namespace liesym
