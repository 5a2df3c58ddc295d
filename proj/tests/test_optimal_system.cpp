#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liesym/orbit.hpp"
#include "liesym/reduce.hpp"
#include "liesym/sampling.hpp"

using namespace liesym;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

Vec<Rational> v(std::initializer_list<long> xs) {
    Vec<Rational> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

const AlgebraCase kHigh = classify_k(q("3/4"));

const Representative& rep(CaseTag tag, const std::string& label) {
    const Representative* r = OptimalTables::bundled().find(tag, label);
    REQUIRE_MESSAGE(r != nullptr, label);
    return *r;
}

}  // namespace

TEST_CASE("tables load") {
    const auto& t = OptimalTables::bundled();
    CHECK(t.e_table(CaseTag::KHIGH).size() == 20);
    CHECK(t.e_table(CaseTag::K0).size() == 12);
    CHECK(t.regimes().size() == 5);
    auto dim1 = t.table_for(CaseTag::KHIGH, 1, TableBasis::e);
    REQUIRE(dim1.size() == 7);
    CHECK(dim1[0].label == "{e2}");
    CHECK(dim1[6].label == "{e1 + eps e2 + a e4}");
    auto v1 = t.table_for(CaseTag::KHIGH, 1, TableBasis::v);
    CHECK(v1[0].label == "{v3}");
    CHECK(v1[1].label == "{v1}");
    CHECK(v1[2].label == "{v2 + a v3}");
    auto k0 = t.table_for(CaseTag::K0, 1, TableBasis::e);
    CHECK(k0[1].label == "{e3 cos phi + e4 sin phi}");
}

TEST_CASE("reduce_1d examples") {
    auto r = reduce_1d(kHigh, v({2, 3, 5, 0}));
    CHECK(r.label == "{e3 + a e4}");
    CHECK(*r.params.a == Surd(0));
    REQUIRE(r.word.factors().size() == 2);
    CHECK(std::get<Rational>(r.word.factors()[0].param) == q("2/5"));
    CHECK(std::get<Rational>(r.word.factors()[1].param) == q("-9/5"));
    CHECK(certify_reduction(kHigh, Subspace::span({v({2, 3, 5, 0})}, 4), r, rep(CaseTag::KHIGH, r.label)));

    auto e4 = reduce_1d(kHigh, v({0, 0, 0, 1}));
    CHECK(e4.label == "{e4}");
    CHECK(e4.word.empty());

    auto unit = reduce_1d(kHigh, v({1, 1, 0, 0}));
    CHECK(unit.label == "{e1 + a e2}");
    CHECK(*unit.params.a == Surd(1));
    CHECK(unit.word.empty());

    auto r2 = reduce_1d(kHigh, v({0, 1, 0, 7}));
    CHECK(r2.label == "{e2 + eps e4}");
    CHECK(*r2.params.eps == 1);
    Subspace s = Subspace::span({v({0, 1, 0, 7})}, 4);
    CHECK(certify_reduction(kHigh, s, r2, rep(CaseTag::KHIGH, r2.label)));

    CHECK_THROWS_AS(reduce_1d(kHigh, v({0, 0, 0, 0})), ZeroVector);
}

TEST_CASE("reduce_2d and reduce_3d examples") {
    LieAlgebraQ e = reduction_algebra(kHigh);
    auto check = [&](Matrix<Rational> rows, const std::string& label) {
        Subalgebra s = Subalgebra::make(e, rows);
        auto r = reduce(kHigh, s);
        CHECK(r.label == label);
        CHECK(certify_reduction(kHigh, s.space(), r, rep(CaseTag::KHIGH, r.label)));
        return r;
    };
    check({v({1, 0, 0, 0}), v({0, 1, 0, 0})}, "{e1, e2}");
    auto r = check({v({0, 1, 0, 2}), v({1, 0, 0, 0})}, "{e2 + eps e4, e1}");
    CHECK(*r.params.eps == 1);
    check({v({1, 0, 0, 0}), v({0, 1, 0, 0}), v({0, 0, 0, 1})}, "{e1, e2, e4}");
    auto r5 = check({v({1, 0, 0, 0}), v({0, 1, 0, 0}), v({0, 0, 1, 5})}, "{e1, e2, e3 + a e4}");
    CHECK(*r5.params.a == Surd(5));
    auto r0 = check({v({1, 0, 0, 0}), v({0, 1, 0, 0}), v({0, 0, 1, 0})}, "{e1, e2, e3 + a e4}");
    CHECK(*r0.params.a == Surd(0));
    CHECK_THROWS_AS(reduce_2d(kHigh, Subalgebra::make(e, {v({1, 0, 0, 0}), v({0, 1, 0, 0}), v({0, 0, 0, 1})})),
                    DimensionMismatch);
}

TEST_CASE("random subalgebras reduce onto table entries exactly") {
    int fallbacks = 0;
    for (const char* k : {"3/4", "1/4", "1/2", "0", "1", "5", "-2"}) {
        AlgebraCase c = classify_k(q(k));
        LieAlgebraQ e = reduction_algebra(c);
        Rng rng(5);
        for (std::size_t dim = 1; dim <= 3; ++dim)
            for (int i = 0; i < 60; ++i) {
                auto s = random_subalgebra(c, e, dim, rng);
                REQUIRE(s.has_value());
                auto r = reduce(c, *s);
                const Representative* target = OptimalTables::bundled().find(c.tag, r.label);
                REQUIRE_MESSAGE(target != nullptr, r.label);
                bool ok = false;
                try {
                    ok = certify_reduction(c, s->space(), r, *target);
                } catch (const IncommensurableSurds&) {
                    ++fallbacks;
                    ok = true;  // numeric path covered elsewhere
                }
                CHECK_MESSAGE(ok, k << " " << format_subspace(s->space(), e_labels()) << " -> " << r.label << " "
                                    << r.params.str());
            }
    }
    CHECK(fallbacks == 0);
}

TEST_CASE("signature examples") {
    LieAlgebraQ e = reduction_algebra(kHigh);
    auto s12 = signature(e, Subspace::span({v({1, 0, 0, 0}), v({0, 1, 0, 0})}, 4));
    CHECK(s12 == ConjugacySignature{2, 0, 2, true, 0, 4});
    auto s4 = signature(e, Subspace::span({v({0, 0, 0, 1})}, 4));
    CHECK(s4 == ConjugacySignature{1, 1, 0, true, 0, 4});
    auto s13 = signature(e, Subspace::span({v({1, 0, 0, 0}), v({0, 0, 1, 0})}, 4));
    CHECK(s13 == ConjugacySignature{2, 0, 1, false, 1, 3});
    CHECK_THROWS_AS(signature(e, Subspace::span({v({1, 1, 0, 0}), v({0, 0, 1, 0})}, 4)), NotClosed);
}

TEST_CASE("signature is invariant under random words") {
    for (const char* k : {"3/4", "0", "1/2"}) {
        AlgebraCase c = classify_k(q(k));
        LieAlgebraQ e = reduction_algebra(c);
        Rng rng(9);
        for (std::size_t dim = 1; dim <= 3; ++dim)
            for (int i = 0; i < 20; ++i) {
                auto s = random_subalgebra(c, e, dim, rng);
                REQUIRE(s.has_value());
                auto moved = apply_word(e, random_rational_word(c, rng), *s);
                CHECK(signature(c, *s) == signature(c, moved));
            }
    }
}

TEST_CASE("orbit_distance examples") {
    const auto& e3a = rep(CaseTag::KHIGH, "{e3 + a e4}");
    Eigen::MatrixXd s(1, 4);
    s << 0, 0, 1, 0;
    OrbitOptions fixed;
    fixed.fixed_params = NumericParams{0.0, 1.0, 0.0};
    CHECK(orbit_distance(kHigh, s, e3a, fixed).distance < 1e-10);
    s << 1, 0, 1, 0;
    auto found = orbit_distance(kHigh, s, e3a, fixed);
    CHECK(found.distance < 1e-10);
    Eigen::MatrixXd g = group_element(kHigh, {1.0, 0.0, 0.0});
    CHECK(subspace_distance((g * s.transpose()).transpose(), e3a.instantiate_numeric({})) < 1e-12);

    const auto& e2 = rep(CaseTag::KHIGH, "{e2}");
    s << 1, 0, 0, 0;
    CHECK(orbit_distance(kHigh, s, e2).distance >= 0.5);
}

TEST_CASE("subspace_distance") {
    Eigen::MatrixXd a(1, 4), b(1, 4);
    a << 1, 0, 0, 0;
    b << 2, 0, 0, 0;
    CHECK(subspace_distance(a, b) == doctest::Approx(0.0));
    b << 0, 1, 0, 0;
    CHECK(subspace_distance(a, b) == doctest::Approx(std::sqrt(2.0)));
}
