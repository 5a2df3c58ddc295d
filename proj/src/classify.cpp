#include "liesym/classify.hpp"

namespace liesym {

std::string to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::K0: return "K0";
        case CaseTag::K1: return "K1";
        case CaseTag::KHALF: return "KHALF";
        case CaseTag::KLOW: return "KLOW";
        case CaseTag::KHIGH: return "KHIGH";
    }
    return "?";
}

CaseTag case_tag_from_string(std::string_view s) {
    for (CaseTag t : {CaseTag::K0, CaseTag::K1, CaseTag::KHALF, CaseTag::KLOW, CaseTag::KHIGH})
        if (to_string(t) == s) return t;
    throw ParseError("unknown case tag '" + std::string(s) + "'");
}

std::vector<std::string> e_labels() { return {"e1", "e2", "e3", "e4"}; }

ParamScalar symbolic_alpha(CaseTag tag) {
    const ParamScalar k = ParamScalar::k();
    switch (tag) {
        case CaseTag::KHIGH: return (k - ParamScalar(1)) / k;
        case CaseTag::KLOW: return k / (k - ParamScalar(1));
        case CaseTag::KHALF: return ParamScalar(-1);
        default: throw Error("regime " + to_string(tag) + " has no alpha");
    }
}

Matrix<ParamScalar> symbolic_basis_change(CaseTag tag) {
    const ParamScalar k = ParamScalar::k();
    const ParamScalar z(0), o(1);
    switch (tag) {
        case CaseTag::K0: return {{z, z, z, -o}, {z, z, o, z}, {o, z, z, z}, {z, o, z, z}};
        case CaseTag::K1: return {{z, z, z, o}, {z, o, z, z}, {o, z, z, z}, {z, z, o, z}};
        case CaseTag::KHIGH: return {{z, o, z, z}, {z, z, o, z}, {z, z, z, -(o / k)}, {o, z, z, z}};
        case CaseTag::KLOW: return {{z, z, o, z}, {z, o, z, z}, {z, z, z, o / (o - k)}, {o, z, z, z}};
        case CaseTag::KHALF: return {{z, z, o, z}, {z, o, z, z}, {z, z, z, ParamScalar(2)}, {o, z, z, z}};
    }
    throw Error("unknown regime");
}

AlgebraCase classify_k(const Rational& k) {
    const Rational half(Integer(1), Integer(2));
    AlgebraCase c{CaseTag::KHIGH, k, std::nullopt, {}, StandardForm::A35_A1, "A_{3.5}^alpha + A_1"};
    if (k.is_zero()) {
        c.tag = CaseTag::K0;
        c.form = StandardForm::A2_2A1;
        c.standard_name = "A_2 + 2A_1";
    } else if (k.is_one()) {
        c.tag = CaseTag::K1;
        c.form = StandardForm::A2_2A1;
        c.standard_name = "A_2 + 2A_1";
    } else if (k == half) {
        c.tag = CaseTag::KHALF;
        c.form = StandardForm::A34_A1;
        c.standard_name = "A_{3.4} + A_1";
        c.alpha = Rational(-1);
    } else if (k < half) {
        c.tag = CaseTag::KLOW;
        c.alpha = k / (k - Rational(1));
    } else {
        c.tag = CaseTag::KHIGH;
        c.alpha = (k - Rational(1)) / k;
    }
    for (const auto& row : symbolic_basis_change(c.tag)) {
        Vec<Rational> r;
        for (const auto& x : row) r.push_back(x.eval(k));
        c.basis_change.push_back(std::move(r));
    }
    return c;
}

LieAlgebraQ standard_algebra(StandardForm form, const Rational& alpha) {
    const Rational z(0), o(1);
    switch (form) {
        case StandardForm::A2_2A1: return {e_labels(), {{0, 1, {z, o, z, z}}}};
        case StandardForm::A34_A1: return {e_labels(), {{0, 2, {o, z, z, z}}, {1, 2, {z, Rational(-1), z, z}}}};
        case StandardForm::A35_A1: return {e_labels(), {{0, 2, {o, z, z, z}}, {1, 2, {z, alpha, z, z}}}};
    }
    throw Error("unknown standard form");
}

LieAlgebra standard_algebra_symbolic(CaseTag tag) {
    const ParamScalar z(0), o(1);
    return {e_labels(), {{0, 2, {o, z, z, z}}, {1, 2, {z, symbolic_alpha(tag), z, z}}}};
}

namespace {

template <class T>
void compare_tables(const BasicLieAlgebra<T>& got, const BasicLieAlgebra<T>& want) {
    for (std::size_t i = 0; i < got.dim(); ++i)
        for (std::size_t j = i + 1; j < got.dim(); ++j)
            if (got.bracket_basis(i, j) != want.bracket_basis(i, j))
                throw RelationMismatch("[" + got.labels()[i] + ", " + got.labels()[j] +
                                       "] = " + format_element(got.bracket_basis(i, j), got.labels()) + ", expected " +
                                       format_element(want.bracket_basis(i, j), want.labels()));
}

}  // namespace

ClassifiedAlgebra to_standard_basis(const LieAlgebra& l, const AlgebraCase& c) {
    LieAlgebraQ lk = evaluate(l, c.k);
    LieAlgebraQ e = change_basis(lk, c.basis_change, e_labels());
    compare_tables(e, standard_algebra(c.form, c.alpha.value_or(Rational(0))));
    return {c, std::move(e), c.k};
}

LieAlgebra to_standard_basis_symbolic(const LieAlgebra& l, CaseTag tag) {
    if (tag != CaseTag::KLOW && tag != CaseTag::KHIGH) throw Error("symbolic transport is defined for KLOW and KHIGH");
    LieAlgebra e = change_basis(l, symbolic_basis_change(tag), e_labels());
    compare_tables(e, standard_algebra_symbolic(tag));
    return e;
}

namespace {

bool is_nilpotent_algebra(const LieAlgebraQ& l, const Subspace& d) {
    Subspace cur = d;
    for (std::size_t i = 0; i <= d.dim(); ++i) {
        if (cur.dim() == 0) return true;
        cur = bracket_span(l, d, cur);
    }
    return cur.dim() == 0;
}

std::optional<std::pair<Rational, Rational>> ratio_invariant(const LieAlgebraQ& l, const Subspace& d) {
    if (d.dim() != 2) return std::nullopt;
    std::optional<Matrix<Rational>> first;
    for (std::size_t i = 0; i < l.dim(); ++i) {
        Matrix<Rational> r(2, Vec<Rational>(2, Rational(0)));
        for (std::size_t b = 0; b < 2; ++b) {
            auto coords = coordinates_in(d.echelon(), l.bracket(l.basis(i), d.rows()[b]));
            if (!coords) return std::nullopt;
            r[0][b] = (*coords)[0];
            r[1][b] = (*coords)[1];
        }
        bool zero = is_zero_vec(r[0]) && is_zero_vec(r[1]);
        if (zero) continue;
        if (!first) {
            first = r;
            continue;
        }
        // Restrictions must be proportional for the ratio to be well defined.
        std::optional<Rational> factor;
        for (std::size_t a = 0; a < 2; ++a)
            for (std::size_t b = 0; b < 2; ++b) {
                const auto& x = (*first)[a][b];
                const auto& y = r[a][b];
                if (x.is_zero() != y.is_zero()) return std::nullopt;
                if (x.is_zero()) continue;
                if (!factor) factor = y / x;
                else if (*factor != y / x) return std::nullopt;
            }
    }
    if (!first) return std::nullopt;
    const auto& m = *first;
    Rational tr = m[0][0] + m[1][1];
    Rational det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    Rational disc = tr * tr - Rational(4) * det;
    Rational root;
    if (!exact_root(disc, 2, root)) return std::nullopt;
    Rational l1 = (tr + root) / Rational(2);
    Rational l2 = (tr - root) / Rational(2);
    if (l1.is_zero() || l2.is_zero()) return std::nullopt;
    Rational r1 = l1 / l2, r2 = l2 / l1;
    if (r2 < r1) std::swap(r1, r2);
    return std::make_pair(r1, r2);
}

}  // namespace

StructuralInvariants structural_invariants(const LieAlgebraQ& l) {
    StructuralInvariants s{};
    s.center_dim = center(l).dim();
    Subalgebra d = derived_subalgebra(l);
    s.derived_dim = d.dim();
    Subspace dd = bracket_span(l, d.space(), d.space());
    s.second_derived_dim = dd.dim();
    s.derived_abelian = dd.dim() == 0;
    s.derived_nilpotent = is_nilpotent_algebra(l, d.space());
    s.eigenvalue_ratio = ratio_invariant(l, d.space());
    return s;
}

StructuralInvariants structural_invariants(const LieAlgebra& l, const Rational& k) {
    return structural_invariants(evaluate(l, k));
}

}  // namespace liesym
