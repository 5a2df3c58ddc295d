#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "liesym/vector_field.hpp"

using namespace liesym;

namespace {

VectorField random_field(std::mt19937& rng) {
    std::uniform_int_distribution<int> exp(0, 3);
    std::uniform_int_distribution<int> dir(0, 2);
    std::uniform_int_distribution<long> coef(-5, 5);
    std::uniform_int_distribution<int> nterms(1, 3);
    VectorField out;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        std::array<int, 3> e{exp(rng), exp(rng), exp(rng)};
        // Keep total degree at most 3.
        while (e[0] + e[1] + e[2] > 3) e[static_cast<std::size_t>(dir(rng))] = 0;
        out += VectorField::term(ParamScalar(coef(rng)) + ParamScalar(coef(rng)) * ParamScalar::k(), e,
                                 static_cast<Coord>(dir(rng)));
    }
    return out;
}

}  // namespace

TEST_CASE("vf_bracket examples") {
    auto gens = symmetry_generators();
    const ParamScalar k = ParamScalar::k();
    CHECK(vf_bracket(gens[1], gens[3]) == (-k) * gens[1]);
    CHECK(vf_bracket(gens[0], gens[0]).is_zero());
    CHECK(vf_bracket(gens[2], gens[3]) == (ParamScalar(1) - k) * gens[2]);
    CHECK(vf_bracket(gens[2], gens[3]).str() == "(-k+1)*d/du");
}

TEST_CASE("vector field parsing") {
    auto v4 = VectorField::parse("S*d/dS + (1-k)*u*d/du");
    CHECK(v4 == symmetry_generators()[3]);
    CHECK(VectorField::parse("x*d/du") == VectorField::parse("S*d/du"));
    CHECK(VectorField::parse("x*d/dx + 1/2*u*d/du") == symmetry_generators()[3].at(Rational::parse("1/2")));
    CHECK(VectorField::parse("-2*t^2*S*d/dt").str() == "-2*t^2*S*d/dt");
    CHECK(VectorField::parse(v4.str()) == v4);
    CHECK_THROWS_AS(VectorField::parse("S*u"), ParseError);
    CHECK_THROWS_AS(VectorField::parse("S*d/dz"), ParseError);
}

TEST_CASE("vf_bracket is antisymmetric and satisfies Jacobi on random fields") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        auto x = random_field(rng), y = random_field(rng), z = random_field(rng);
        CHECK(vf_bracket(x, y) == ParamScalar(-1) * vf_bracket(y, x));
        auto j = vf_bracket(x, vf_bracket(y, z)) + vf_bracket(y, vf_bracket(z, x)) + vf_bracket(z, vf_bracket(x, y));
        CHECK(j.is_zero());
    }
}

TEST_CASE("verify_realization") {
    auto report = verify_realization(symmetry_generators(), symmetry_algebra());
    CHECK(report.ok);
    CHECK(report.pairs_checked == 6);

    // k = 0 generators against the k = 0 table.
    std::vector<VectorField> k0{VectorField::parse("d/dt"), VectorField::parse("x*d/du"), VectorField::parse("d/du"),
                                VectorField::parse("x*d/dx + u*d/du")};
    CHECK(verify_realization(k0, promote(evaluate(symmetry_algebra(), Rational(0)))).ok);

    auto wrong = symmetry_generators();
    wrong[3] = VectorField::parse("S*d/dS + k*u*d/du");
    auto bad = verify_realization(wrong, symmetry_algebra());
    CHECK_FALSE(bad.ok);
    bool found = false;
    for (const auto& m : bad.mismatches) found = found || (m.i == 2 && m.j == 3);
    CHECK(found);
    CHECK_THROWS_AS(verify_realization({VectorField::parse("d/dt")}, symmetry_algebra()), DimensionMismatch);
}
