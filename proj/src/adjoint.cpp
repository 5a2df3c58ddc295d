#include "liesym/adjoint.hpp"

#include <cmath>
#include <sstream>

namespace liesym {

namespace {

bool is_nilpotent(const Matrix<Rational>& a) {
    Matrix<Rational> p = a;
    for (std::size_t i = 0; i < a.size(); ++i) {
        bool zero = true;
        for (const auto& r : p) zero = zero && is_zero_vec(r);
        if (zero) return true;
        p = mat_mul(p, a);
    }
    for (const auto& r : p)
        if (!is_zero_vec(r)) return false;
    return true;
}

bool is_diagonal(const Matrix<Rational>& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (i != j && !a[i][j].is_zero()) return false;
    return true;
}

}  // namespace

Matrix<Surd> to_surd(const Matrix<Rational>& m) {
    Matrix<Surd> out;
    out.reserve(m.size());
    for (const auto& r : m) out.emplace_back(r.begin(), r.end());
    return out;
}

GeneratorKind generator_kind(const LieAlgebraQ& l, std::size_t generator) {
    auto ad = ad_matrix(l, l.basis(generator));
    if (is_nilpotent(ad)) return GeneratorKind::nilpotent;
    if (is_diagonal(ad)) return GeneratorKind::diagonal;
    return GeneratorKind::other;
}

Matrix<Surd> adjoint_exp_surd(const LieAlgebraQ& l, std::size_t generator, const GroupParam& param) {
    if (generator >= l.dim()) throw DimensionMismatch("generator index out of range");
    const std::size_t n = l.dim();
    auto ad = ad_matrix(l, l.basis(generator));
    if (is_nilpotent(ad)) {
        Rational eps;
        if (const auto* r = std::get_if<Rational>(&param)) {
            eps = *r;
        } else if (is_diagonal(ad)) {
            return to_surd(identity<Rational>(n));  // ad = 0: any parameter acts trivially
        } else {
            throw Error("generator " + l.labels()[generator] + " is nilpotent; expected a rational parameter");
        }
        // exp(-eps ad) as a terminating series.
        Matrix<Rational> out = identity<Rational>(n);
        Matrix<Rational> power = identity<Rational>(n);
        Rational coef(1);
        for (std::size_t m = 1; m <= n; ++m) {
            power = mat_mul(power, ad);
            coef = coef * (-eps) / Rational(static_cast<long>(m));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) out[i][j] += coef * power[i][j];
        }
        return to_surd(out);
    }
    if (!is_diagonal(ad))
        throw UnsupportedGenerator("ad(" + l.labels()[generator] +
                                   ") is neither nilpotent nor diagonal; use the numeric path");
    const auto* scale = std::get_if<PosScale>(&param);
    if (!scale) throw Error("generator " + l.labels()[generator] + " acts by scaling; expected a PosScale parameter");
    Matrix<Surd> out(n, Vec<Surd>(n, Surd(0)));
    for (std::size_t j = 0; j < n; ++j) out[j][j] = scale->value().pow(-ad[j][j]);
    return out;
}

Matrix<Rational> adjoint_exp(const LieAlgebraQ& l, std::size_t generator, const GroupParam& param) {
    auto m = adjoint_exp_surd(l, generator, param);
    Matrix<Rational> out(m.size(), Vec<Rational>(m.size(), Rational(0)));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (!m[i][j].is_rational())
                throw NonRationalPower("Ad(exp(" + l.labels()[generator] + ")) has irrational entry " + m[i][j].str());
            out[i][j] = m[i][j].to_rational();
        }
    return out;
}

GroupWord GroupWord::then(const GroupWord& after) const {
    GroupWord out = *this;
    for (const auto& f : after.factors_) out.factors_.push_back(f);
    return out;
}

GroupWord GroupWord::inverse() const {
    GroupWord out;
    for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) {
        if (const auto* r = std::get_if<Rational>(&it->param)) {
            out.factors_.push_back({it->generator, -*r});
        } else {
            out.factors_.push_back({it->generator, std::get<PosScale>(it->param).inverse()});
        }
    }
    return out;
}

std::string GroupWord::str(const std::vector<std::string>& labels) const {
    if (factors_.empty()) return "[]";
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) os << ", ";
        os << "(" << labels[factors_[i].generator] << ", ";
        if (const auto* r = std::get_if<Rational>(&factors_[i].param)) {
            os << "eps=" << *r;
        } else {
            os << "t=" << std::get<PosScale>(factors_[i].param).value();
        }
        os << ")";
    }
    os << "]";
    return os.str();
}

Matrix<Surd> GroupWord::surd_matrix(const LieAlgebraQ& l) const {
    Matrix<Surd> m = to_surd(identity<Rational>(l.dim()));
    for (const auto& f : factors_) m = mat_mul(adjoint_exp_surd(l, f.generator, f.param), m);
    return m;
}

Matrix<Rational> GroupWord::matrix(const LieAlgebraQ& l) const {
    Matrix<Rational> m = identity<Rational>(l.dim());
    for (const auto& f : factors_) m = mat_mul(adjoint_exp(l, f.generator, f.param), m);
    return m;
}

Subspace apply_word(const LieAlgebraQ& l, const GroupWord& word, const Subspace& s) {
    auto m = word.matrix(l);
    Matrix<Rational> rows;
    for (const auto& r : s.rows()) rows.push_back(mat_vec(m, r));
    return Subspace::span(rows, l.dim());
}

Subalgebra apply_word(const LieAlgebraQ& l, const GroupWord& word, const Subalgebra& s) {
    return Subalgebra::make(l, apply_word(l, word, s.space()));
}

Echelon<Surd> apply_word_surd(const LieAlgebraQ& l, const GroupWord& word, const Subspace& s) {
    auto m = word.surd_matrix(l);
    Matrix<Surd> rows;
    for (const auto& r : s.rows()) rows.push_back(mat_vec(m, Vec<Surd>(r.begin(), r.end())));
    return rref(rows, l.dim());
}

Eigen::MatrixXd to_eigen(const Matrix<Rational>& m) {
    Eigen::MatrixXd out(static_cast<Eigen::Index>(m.size()), static_cast<Eigen::Index>(m.empty() ? 0 : m[0].size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j)
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m[i][j].to_double();
    return out;
}

std::vector<Eigen::MatrixXd> ad_basis_numeric(const LieAlgebraQ& l) {
    std::vector<Eigen::MatrixXd> out;
    for (std::size_t i = 0; i < l.dim(); ++i) out.push_back(to_eigen(ad_matrix(l, l.basis(i))));
    return out;
}

Eigen::MatrixXd expm(const Eigen::MatrixXd& a) {
    const double norm = a.lpNorm<Eigen::Infinity>();
    int squarings = 0;
    if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
    Eigen::MatrixXd b = a / std::ldexp(1.0, squarings);
    Eigen::MatrixXd result = Eigen::MatrixXd::Identity(a.rows(), a.cols());
    Eigen::MatrixXd term = result;
    for (int m = 1; m <= 30; ++m) {
        term = term * b / static_cast<double>(m);
        result += term;
        if (term.lpNorm<Eigen::Infinity>() < 1e-18 * result.lpNorm<Eigen::Infinity>()) break;
    }
    for (int s = 0; s < squarings; ++s) result = result * result;
    return result;
}

Eigen::MatrixXd numeric_exp(const std::vector<Eigen::MatrixXd>& ad_basis, const Eigen::VectorXd& x, double eps) {
    const auto n = static_cast<Eigen::Index>(ad_basis.size());
    if (x.size() != n) throw DimensionMismatch("element length differs from algebra dimension");
    Eigen::MatrixXd ad = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        if (x(i) != 0.0) ad += x(i) * ad_basis[static_cast<std::size_t>(i)];
    return expm(-eps * ad);
}

Eigen::MatrixXd numeric_exp(const LieAlgebraQ& l, const Eigen::VectorXd& x, double eps) {
    return numeric_exp(ad_basis_numeric(l), x, eps);
}

}  // namespace liesym
