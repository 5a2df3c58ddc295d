#pragma once

#include <Eigen/Dense>
#include <variant>
#include <vector>

#include "liesym/lie_algebra.hpp"
#include "liesym/subalgebra.hpp"
#include "liesym/surd.hpp"

namespace liesym {

/// Image t = e^eps > 0 of the parameter of a scaling one-parameter subgroup.
class PosScale {
public:
    PosScale(const Rational& t) : PosScale(Surd(t)) {}  // NOLINT(google-explicit-constructor)
    explicit PosScale(Surd t) : value_(std::move(t)) {
        if (value_.sign() <= 0) throw Error("PosScale must be positive, got " + value_.str());
    }
    [[nodiscard]] const Surd& value() const { return value_; }
    [[nodiscard]] PosScale inverse() const { return PosScale(value_.inverse()); }

private:
    Surd value_;
};

/// Rational eps for nilpotent directions, PosScale t = e^eps for diagonal ones.
using GroupParam = std::variant<Rational, PosScale>;

struct WordFactor {
    std::size_t generator;
    GroupParam param;
};

/// Ordered product Ad(exp(p_n e_{i_n})) ... Ad(exp(p_1 e_{i_1})); factors[0] acts first.
class GroupWord {
public:
    GroupWord() = default;
    explicit GroupWord(std::vector<WordFactor> factors) : factors_(std::move(factors)) {}

    [[nodiscard]] const std::vector<WordFactor>& factors() const { return factors_; }
    [[nodiscard]] bool empty() const { return factors_.empty(); }
    void push_back(WordFactor f) { factors_.push_back(std::move(f)); }
    /// Composite word acting as this one followed by `after`.
    [[nodiscard]] GroupWord then(const GroupWord& after) const;
    [[nodiscard]] GroupWord inverse() const;
    [[nodiscard]] std::string str(const std::vector<std::string>& labels) const;

    [[nodiscard]] Matrix<Surd> surd_matrix(const LieAlgebraQ& l) const;
    /// Throws NonRationalPower when some entry is irrational.
    [[nodiscard]] Matrix<Rational> matrix(const LieAlgebraQ& l) const;

private:
    std::vector<WordFactor> factors_;
};

/// Matrix of y -> [x, y]; column j is [x, e_j].
template <class T>
Matrix<T> ad_matrix(const BasicLieAlgebra<T>& l, const Element<T>& x) {
    const std::size_t n = l.dim();
    Matrix<T> m(n, Vec<T>(n, T(0)));
    for (std::size_t j = 0; j < n; ++j) {
        auto col = l.bracket(x, l.basis(j));
        for (std::size_t i = 0; i < n; ++i) m[i][j] = col[i];
    }
    return m;
}

/// Coefficients u_m of Ad(exp(eps x)) w = sum_m eps^m u_m, u_m = (-1)^m ad(x)^m w / m!.
/// Throws SeriesDoesNotTerminate when ad(x)^(dim+1) w != 0.
template <class T>
std::vector<Element<T>> lie_series_terms(const BasicLieAlgebra<T>& l, const Element<T>& x, const Element<T>& w) {
    std::vector<Element<T>> terms;
    Element<T> cur = w;
    T factorial(1);
    for (std::size_t m = 0; m <= l.dim() + 1; ++m) {
        if (is_zero_vec(cur)) return terms;
        Element<T> term = cur;
        T scale = T(m % 2 == 0 ? 1 : -1) / factorial;
        for (auto& c : term) c = c * scale;
        terms.push_back(std::move(term));
        cur = l.bracket(x, cur);
        factorial = factorial * T(static_cast<long>(m + 1));
    }
    if (is_zero_vec(cur)) return terms;
    throw SeriesDoesNotTerminate("ad(x)^m w does not vanish for m <= dim + 1");
}

/// Finite Lie series w - eps [x, w] + eps^2/2! [x, [x, w]] - ...
template <class T>
Element<T> lie_series_exp(const BasicLieAlgebra<T>& l, const Element<T>& x, const T& eps, const Element<T>& w) {
    if (eps.is_zero()) return w;
    auto terms = lie_series_terms(l, x, w);
    Element<T> out = l.zero();
    T power(1);
    for (const auto& t : terms) {
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = out[i] + power * t[i];
        power = power * eps;
    }
    return out;
}

/// Ad(exp(eps e_i)) as an exact matrix. Nilpotent ad(e_i) takes a Rational eps;
/// diagonal ad(e_i) = diag(lambda) takes t = e^eps and yields diag(t^-lambda).
Matrix<Surd> adjoint_exp_surd(const LieAlgebraQ& l, std::size_t generator, const GroupParam& param);
Matrix<Rational> adjoint_exp(const LieAlgebraQ& l, std::size_t generator, const GroupParam& param);

/// Whether ad(e_i) is nilpotent, diagonal in the basis, or neither.
enum class GeneratorKind { nilpotent, diagonal, other };
GeneratorKind generator_kind(const LieAlgebraQ& l, std::size_t generator);

Subalgebra apply_word(const LieAlgebraQ& l, const GroupWord& word, const Subalgebra& s);
Subspace apply_word(const LieAlgebraQ& l, const GroupWord& word, const Subspace& s);
/// Image as an echelon basis over Surd, for words whose scalings are irrational.
Echelon<Surd> apply_word_surd(const LieAlgebraQ& l, const GroupWord& word, const Subspace& s);

Matrix<Surd> to_surd(const Matrix<Rational>& m);

Eigen::MatrixXd to_eigen(const Matrix<Rational>& m);
/// ad(e_i) for each basis element, in double precision.
std::vector<Eigen::MatrixXd> ad_basis_numeric(const LieAlgebraQ& l);
/// exp(-eps ad(x)) = Ad(exp(eps x)) by scaling and squaring with a Taylor core.
Eigen::MatrixXd numeric_exp(const LieAlgebraQ& l, const Eigen::VectorXd& x, double eps);
Eigen::MatrixXd numeric_exp(const std::vector<Eigen::MatrixXd>& ad_basis, const Eigen::VectorXd& x, double eps);
Eigen::MatrixXd expm(const Eigen::MatrixXd& a);

}  // namespace liesym
