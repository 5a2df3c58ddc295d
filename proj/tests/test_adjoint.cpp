#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "liesym/adjoint.hpp"
#include "liesym/classify.hpp"

using namespace liesym;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

Vec<Rational> v(std::initializer_list<long> xs) {
    Vec<Rational> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

Vec<Rational> column(const Matrix<Rational>& m, std::size_t j) {
    Vec<Rational> out;
    for (const auto& r : m) out.push_back(r[j]);
    return out;
}

Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<long> den(1, 10);
    std::uniform_int_distribution<long> num(-20, 20);
    return {Integer(num(rng)), Integer(den(rng))};
}

// Plain Taylor series of exp(A) with many terms; independent of the scaling-and-squaring path.
Eigen::MatrixXd series_oracle(const Eigen::MatrixXd& a) {
    Eigen::MatrixXd result = Eigen::MatrixXd::Identity(a.rows(), a.cols());
    Eigen::MatrixXd term = result;
    for (int m = 1; m < 80; ++m) {
        term = term * a / static_cast<double>(m);
        result += term;
    }
    return result;
}

}  // namespace

TEST_CASE("ad_matrix examples") {
    const Rational alpha = q("-1/3");
    LieAlgebraQ e = standard_algebra(StandardForm::A35_A1, alpha);
    auto ad3 = ad_matrix(e, e.basis(2));
    Matrix<Rational> expected(4, Vec<Rational>(4, Rational(0)));
    expected[0][0] = Rational(-1);
    expected[1][1] = -alpha;
    CHECK(ad3 == expected);
    auto ad4 = ad_matrix(e, e.basis(3));
    for (const auto& r : ad4) CHECK(is_zero_vec(r));
    auto ad12 = ad_matrix(e, v({1, 1, 0, 0}));
    auto ad1 = ad_matrix(e, e.basis(0)), ad2 = ad_matrix(e, e.basis(1));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) CHECK(ad12[i][j] == ad1[i][j] + ad2[i][j]);
}

TEST_CASE("adjoint_exp examples") {
    LieAlgebraQ e = standard_algebra(StandardForm::A35_A1, q("-1/3"));
    const Rational eps = q("5/7");
    auto m1 = adjoint_exp(e, 0, eps);
    CHECK(column(m1, 2) == Vec<Rational>{-eps, 0, 1, 0});
    auto m3 = adjoint_exp(e, 2, PosScale(Rational(8)));
    CHECK(column(m3, 0) == v({8, 0, 0, 0}));
    // e2 -> t^alpha e2 = 8^(-1/3) e2.
    CHECK(column(m3, 1) == Vec<Rational>{0, q("1/2"), 0, 0});
    auto m4 = adjoint_exp(e, 3, eps);
    CHECK(m4 == identity<Rational>(4));
    CHECK_THROWS_AS(adjoint_exp(e, 2, PosScale(Rational(2))), NonRationalPower);
    CHECK_THROWS(adjoint_exp(e, 2, eps));
    CHECK_THROWS(adjoint_exp(e, 0, PosScale(Rational(2))));
}

TEST_CASE("lie_series_exp examples") {
    const Rational alpha = q("-1/3");
    LieAlgebraQ e = standard_algebra(StandardForm::A35_A1, alpha);
    const Rational eps = q("3/2");
    CHECK(lie_series_exp(e, e.basis(1), eps, e.basis(2)) == Vec<Rational>{0, -alpha * eps, 1, 0});
    auto w = v({2, -1, 3, 4});
    CHECK(lie_series_exp(e, v({1, 1, 1, 1}), Rational(0), w) == w);
    CHECK_THROWS_AS(lie_series_exp(e, e.basis(2), eps, e.basis(0)), SeriesDoesNotTerminate);
}

TEST_CASE("lie_series_exp agrees with adjoint_exp on nilpotent rows") {
    std::mt19937 rng(17);
    for (const char* a : {"-1/3", "1/2", "-1", "2/5"}) {
        LieAlgebraQ e = standard_algebra(StandardForm::A35_A1, q(a));
        for (std::size_t gen : {0u, 1u, 3u}) {
            Rational eps = random_rational(rng);
            auto m = adjoint_exp(e, gen, eps);
            for (std::size_t j = 0; j < 4; ++j) CHECK(lie_series_exp(e, e.basis(gen), eps, e.basis(j)) == column(m, j));
        }
    }
}

TEST_CASE("adjoint maps are automorphisms with inverses") {
    std::mt19937 rng(23);
    const Rational alpha = q("-1/3");  // t must be a cube for t^alpha to be rational
    LieAlgebraQ e = standard_algebra(StandardForm::A35_A1, alpha);
    for (int trial = 0; trial < 20; ++trial) {
        Rational s = random_rational(rng).abs() + Rational(1);
        std::vector<std::pair<std::size_t, GroupParam>> params{
            {0, random_rational(rng)}, {1, random_rational(rng)}, {3, random_rational(rng)}, {2, PosScale(s.pow(3))}};
        for (const auto& [gen, p] : params) {
            auto m = adjoint_exp(e, gen, p);
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j) {
                    auto lhs = mat_vec(m, e.bracket(e.basis(i), e.basis(j)));
                    auto rhs = e.bracket(column(m, i), column(m, j));
                    CHECK(lhs == rhs);
                }
            GroupWord w({WordFactor{gen, p}});
            CHECK(mat_mul(w.inverse().matrix(e), w.matrix(e)) == identity<Rational>(4));
        }
    }
}

TEST_CASE("apply_word examples") {
    const Rational alpha = q("-1/3");
    LieAlgebraQ e = standard_algebra(StandardForm::A35_A1, alpha);
    auto s = Subalgebra::make(e, {v({2, 3, 5, 0})});
    CHECK(apply_word(e, GroupWord(), s) == s);
    GroupWord w({{0, q("2/5")}, {1, q("3/5") / alpha}});
    CHECK(apply_word(e, w, s).space() == Subspace::span({v({0, 0, 1, 0})}, 4));

    LieAlgebraQ half = standard_algebra(StandardForm::A35_A1, q("1/2"));
    auto line = Subalgebra::make(half, {v({1, 1, 0, 0})});
    auto image = apply_word(half, GroupWord({{2, PosScale(Rational(4))}}), line);
    CHECK(image.space() == Subspace::span({v({2, 1, 0, 0})}, 4));
}

TEST_CASE("apply_word preserves dimension and closure") {
    std::mt19937 rng(31);
    LieAlgebraQ e = standard_algebra(StandardForm::A35_A1, q("2/5"));
    std::vector<Subalgebra> samples{
        Subalgebra::make(e, {v({1, 0, 0, 0}), v({0, 0, 1, 3})}),
        Subalgebra::make(e, {v({1, 0, 0, 0}), v({0, 1, 0, 0}), v({0, 0, 1, 0})}),
        Subalgebra::make(e, {v({1, 2, 0, 1})}),
    };
    for (const auto& s : samples)
        for (int trial = 0; trial < 10; ++trial) {
            Rational t = (random_rational(rng).abs() + Rational(1)).pow(5);
            GroupWord w({{0, random_rational(rng)}, {2, PosScale(t)}, {1, random_rational(rng)}});
            auto image = apply_word(e, w, s);
            CHECK(image.dim() == s.dim());
            CHECK(image.verify_certificate(e));
        }
}

TEST_CASE("irrational scalings stay exact as surds") {
    LieAlgebraQ e = standard_algebra(StandardForm::A35_A1, q("-1/3"));
    auto s = Subspace::span({v({1, 1, 0, 0})}, 4);
    auto image = apply_word_surd(e, GroupWord({{2, PosScale(Rational(2))}}), s);
    REQUIRE(image.rows.size() == 1);
    // t e1 + t^alpha e2 normalised: e1 + t^(alpha-1) e2 = e1 + 2^(-4/3) e2.
    CHECK(image.rows[0][1] == Surd::power(Rational(2), q("-4/3")));
    CHECK_THROWS_AS(apply_word(e, GroupWord({{2, PosScale(Rational(2))}}), s), NonRationalPower);
}

TEST_CASE("numeric_exp") {
    LieAlgebraQ e = standard_algebra(StandardForm::A35_A1, q("1/2"));
    Eigen::VectorXd e4 = Eigen::VectorXd::Unit(4, 3);
    CHECK((numeric_exp(e, e4, 3.7) - Eigen::MatrixXd::Identity(4, 4)).norm() == doctest::Approx(0.0));
    Eigen::VectorXd e3 = Eigen::VectorXd::Unit(4, 2);
    Eigen::MatrixXd d = numeric_exp(e, e3, std::log(2.0));
    Eigen::Vector4d expected(2.0, std::sqrt(2.0), 1.0, 1.0);
    CHECK((d - Eigen::MatrixXd(expected.asDiagonal())).norm() < 1e-12);

    Eigen::VectorXd x(4);
    x << 1, 0, 1, 0;
    auto ad = ad_basis_numeric(e);
    Eigen::MatrixXd adx = ad[0] + ad[2];
    std::mt19937 rng(41);
    std::normal_distribution<double> g;
    for (double eps : {0.3, -1.2, 2.5}) {
        Eigen::MatrixXd m = numeric_exp(e, x, eps);
        Eigen::MatrixXd oracle = series_oracle(-eps * adx);
        Eigen::VectorXd w(4);
        w << g(rng), g(rng), g(rng), g(rng);
        CHECK((m * w - oracle * w).norm() < 1e-9);
    }
}

TEST_CASE("numeric_exp matches the exact path at rational-compatible parameters") {
    LieAlgebraQ e = standard_algebra(StandardForm::A35_A1, q("-1/3"));
    for (std::size_t gen : {0u, 1u}) {
        Rational eps = q("7/3");
        Eigen::MatrixXd exact = to_eigen(adjoint_exp(e, gen, eps));
        CHECK((numeric_exp(e, Eigen::VectorXd::Unit(4, static_cast<Eigen::Index>(gen)), eps.to_double()) - exact)
                  .norm() < 1e-12);
    }
    Eigen::MatrixXd exact = to_eigen(adjoint_exp(e, 2, PosScale(Rational(27))));
    CHECK((numeric_exp(e, Eigen::VectorXd::Unit(4, 2), std::log(27.0)) - exact).norm() < 1e-12 * 27);
}
