#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "liesym/subalgebra.hpp"

using namespace liesym;

namespace {

const Rational kThreeQuarters = Rational::parse("3/4");

Vec<Rational> v(std::initializer_list<long> xs) {
    Vec<Rational> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<long> den(1, 10);
    std::uniform_int_distribution<long> num(-20, 20);
    return {Integer(num(rng)), Integer(den(rng))};
}

Vec<Rational> random_vec(std::mt19937& rng, std::size_t n) {
    Vec<Rational> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(random_rational(rng));
    return out;
}

LieAlgebra a35_symbolic_free() {
    // [e1,e3] = e1, [e2,e3] = alpha e2 with alpha = (k-1)/k, e4 central.
    const ParamScalar z(0), o(1);
    return {{"e1", "e2", "e3", "e4"}, {{0, 2, {o, z, z, z}}, {1, 2, {z, ParamScalar::parse("(k-1)/k"), z, z}}}};
}

}  // namespace

TEST_CASE("bracket examples") {
    LieAlgebra l = symmetry_algebra();
    const ParamScalar k = ParamScalar::k();
    auto v2 = l.basis(1), v3 = l.basis(2), v4 = l.basis(3);
    CHECK(l.bracket(v2, v4) == Element<ParamScalar>{0, -k, 0, 0});
    auto x = parse_element(l, "v1 - 2*v3 + (k-1)/k*v4");
    CHECK(is_zero_vec(l.bracket(x, x)));
    Element<ParamScalar> v2v3 = {0, 1, 1, 0};
    CHECK(l.bracket(v2v3, v4) == Element<ParamScalar>{0, -k, ParamScalar(1) - k, 0});
    CHECK_THROWS_AS(l.bracket(Element<ParamScalar>{1, 0}, v4), DimensionMismatch);
}

TEST_CASE("bracket is bilinear and antisymmetric, Jacobi holds at random k") {
    std::mt19937 rng(5);
    LieAlgebra l = symmetry_algebra();
    for (int trial = 0; trial < 20; ++trial) {
        Rational k = random_rational(rng);
        LieAlgebraQ lk = evaluate(l, k);
        auto x = random_vec(rng, 4), y = random_vec(rng, 4), z = random_vec(rng, 4);
        Rational a = random_rational(rng);
        auto xy = lk.bracket(x, y), yx = lk.bracket(y, x);
        for (std::size_t i = 0; i < 4; ++i) CHECK(xy[i] == -yx[i]);
        Vec<Rational> ax_z(4);
        for (std::size_t i = 0; i < 4; ++i) ax_z[i] = a * x[i] + z[i];
        auto lhs = lk.bracket(ax_z, y);
        auto zy = lk.bracket(z, y);
        for (std::size_t i = 0; i < 4; ++i) CHECK(lhs[i] == a * xy[i] + zy[i]);
        auto j1 = lk.bracket(x, lk.bracket(y, z));
        auto j2 = lk.bracket(y, lk.bracket(z, x));
        auto j3 = lk.bracket(z, lk.bracket(x, y));
        for (std::size_t i = 0; i < 4; ++i) CHECK((j1[i] + j2[i] + j3[i]).is_zero());
        CHECK(check_jacobi(lk).ok);
    }
}

TEST_CASE("check_jacobi") {
    auto report = check_jacobi(symmetry_algebra());
    CHECK(report.ok);
    CHECK(report.triples_checked == 4);
    CHECK(check_jacobi(abelian_algebra({"a", "b", "c", "d"})).ok);

    const ParamScalar k = ParamScalar::k(), z(0), o(1);
    // A central term added to [v2,v4] still gives a Lie algebra.
    LieAlgebra central_extension({"v1", "v2", "v3", "v4"}, {{1, 3, {o, -k, z, z}}, {2, 3, {z, z, o - k, z}}});
    CHECK(check_jacobi(central_extension).ok);

    // [v2,v3] = v4: the (v2,v3,v4) Jacobi sum is (1-2k) v4.
    LieAlgebra broken({"v1", "v2", "v3", "v4"},
                      {{1, 3, {z, -k, z, z}}, {2, 3, {z, z, o - k, z}}, {1, 2, {z, z, z, o}}});
    auto bad = check_jacobi(broken);
    REQUIRE_FALSE(bad.ok);
    REQUIRE(bad.violation.has_value());
    CHECK(bad.violation->i == 1);
    CHECK(bad.violation->j == 2);
    CHECK(bad.violation->k == 3);
    CHECK(bad.violation->p == 3);
    CHECK(bad.violation->value == "-2*k+1");
}

TEST_CASE("center") {
    LieAlgebra l = symmetry_algebra();
    CHECK(center(l, Rational(0)).space() == Subspace::span({v({1, 0, 0, 0}), v({0, 1, 0, 0})}, 4));
    CHECK(center(l, kThreeQuarters).space() == Subspace::span({v({1, 0, 0, 0})}, 4));
    CHECK(center(abelian_algebra({"a", "b", "c"}), Rational(5)).dim() == 3);
    CHECK_THROWS_AS(center(a35_symbolic_free(), Rational(0)), PoleAtK);
}

TEST_CASE("derived subalgebra") {
    LieAlgebra l = symmetry_algebra();
    CHECK(derived_subalgebra(l, kThreeQuarters).space() == Subspace::span({v({0, 1, 0, 0}), v({0, 0, 1, 0})}, 4));
    CHECK(derived_subalgebra(l, Rational(0)).space() == Subspace::span({v({0, 0, 1, 0})}, 4));
    CHECK(derived_subalgebra(abelian_algebra({"a", "b"}), Rational(1)).dim() == 0);
}

TEST_CASE("normalizer") {
    LieAlgebra l = symmetry_algebra();
    CHECK(normalizer(l, Subspace::span({v({1, 0, 0, 0})}, 4), kThreeQuarters).dim() == 4);
    CHECK(normalizer(l, Subspace::span({v({0, 1, 0, 0})}, 4), kThreeQuarters).dim() == 4);
    CHECK(normalizer(l, Subspace::span({v({0, 1, 1, 0})}, 4), kThreeQuarters).space() ==
          Subspace::span({v({1, 0, 0, 0}), v({0, 1, 0, 0}), v({0, 0, 1, 0})}, 4));
}

TEST_CASE("normalizer contains N as an ideal on random subalgebras") {
    std::mt19937 rng(11);
    LieAlgebraQ lk = evaluate(symmetry_algebra(), kThreeQuarters);
    for (int trial = 0; trial < 50; ++trial) {
        std::uniform_int_distribution<int> dims(1, 3);
        Matrix<Rational> gens;
        int d = dims(rng);
        for (int i = 0; i < d; ++i) gens.push_back(random_vec(rng, 4));
        Subspace n = close_subspace(lk, gens).space();
        Subalgebra nor = normalizer(lk, n);
        CHECK(nor.space().contains(n));
        CHECK(bracket_span(lk, nor.space(), n).dim() <= n.dim());
        CHECK(n.contains(bracket_span(lk, nor.space(), n)));
        CHECK(nor.verify_certificate(lk));
    }
}

TEST_CASE("close_subspace") {
    const Rational alpha = Rational::parse("-1/3");
    const Rational z(0), o(1);
    LieAlgebraQ e({"e1", "e2", "e3", "e4"}, {{0, 2, {o, z, z, z}}, {1, 2, {z, alpha, z, z}}});
    CHECK(close_subspace(e, {v({1, 0, 0, 0}), v({0, 0, 1, 0})}).dim() == 2);
    CHECK(close_subspace(e, {v({1, 1, 0, 0}), v({0, 0, 1, 0})}).space() ==
          Subspace::span({v({1, 0, 0, 0}), v({0, 1, 0, 0}), v({0, 0, 1, 0})}, 4));
    CHECK(close_subspace(e, {v({1, -1, 0, 0}), v({0, 0, 1, 0})}).dim() == 3);
    CHECK(close_subspace(e, {v({2, 3, 5, 7})}).dim() == 1);
    CHECK(close_subspace(e, {v({0, 0, 0, 0}), v({1, 0, 0, 0})}).dim() == 1);
    CHECK_THROWS_AS(close_subspace(e, {v({0, 0, 0, 0})}), ZeroVector);
    CHECK_THROWS_AS(Subalgebra::make(e, {v({1, 1, 0, 0}), v({0, 0, 1, 0})}), NotClosed);
}

TEST_CASE("closure is idempotent and monotone; outputs carry valid certificates") {
    std::mt19937 rng(21);
    LieAlgebraQ lk = evaluate(symmetry_algebra(), Rational::parse("1/4"));
    for (int trial = 0; trial < 50; ++trial) {
        auto a = random_vec(rng, 4);
        auto b = random_vec(rng, 4);
        std::bernoulli_distribution zero(0.5);
        for (auto& x : a)
            if (zero(rng)) x = Rational(0);
        for (auto& x : b)
            if (zero(rng)) x = Rational(0);
        if (is_zero_vec(a)) a[0] = Rational(1);
        Subalgebra s1 = close_subspace(lk, {a});
        Subalgebra s2 = close_subspace(lk, {a, b});
        CHECK(s2.space().contains(s1.space()));
        CHECK(close_subspace(lk, s2.rows()) == s2);
        CHECK(s2.verify_certificate(lk));
        CHECK(is_closed(lk, s2.space()));
    }
    CHECK(center(lk).verify_certificate(lk));
    CHECK(derived_subalgebra(lk).verify_certificate(lk));
}

TEST_CASE("echelon form is canonical") {
    auto a = Subspace::span({v({1, 2, 0, 0}), v({0, 0, 1, 1})}, 4);
    auto b = Subspace::span({v({2, 4, 3, 3}), v({-1, -2, 1, 1})}, 4);
    CHECK(a == b);
    CHECK(a.rows() == b.rows());
}

TEST_CASE("algebra JSON round trip") {
    LieAlgebra l = symmetry_algebra();
    CHECK(algebra_from_json(algebra_to_json(l)) == l);
    const std::string text = R"({"dimension": 4, "basis": ["v1","v2","v3","v4"],
        "brackets": [{"i": 2, "j": 4, "m": 2, "coeff": "-k"}, {"i": 4, "j": 3, "m": 3, "coeff": "k-1"}]})";
    CHECK(algebra_from_json(text) == l);
    CHECK_THROWS_AS(algebra_from_json(R"({"dimension": 2, "basis": ["a"], "brackets": []})"), ParseError);
}

TEST_CASE("element parsing and formatting") {
    LieAlgebraQ lk = evaluate(symmetry_algebra(), Rational::parse("1/2"));
    auto x = parse_element(lk, "v2 + 3/2*v4 - v1");
    CHECK(x[0] == Rational(-1));
    CHECK(x[1] == Rational(1));
    CHECK(x[2].is_zero());
    CHECK(x[3] == Rational::parse("3/2"));
    CHECK(format_element(lk.bracket(lk.basis(1), lk.basis(3)), lk.labels()) == "-1/2 * v2");
    CHECK_THROWS_AS(parse_element(lk, "v5"), ParseError);
    CHECK(parse_vector("2,3,5,0", 4) == v({2, 3, 5, 0}));
    CHECK_THROWS_AS(parse_vector("2,3", 4), DimensionMismatch);
}
