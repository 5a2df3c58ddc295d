#pragma once

#include <optional>
#include <string>
#include <utility>

#include "liesym/lie_algebra.hpp"
#include "liesym/subalgebra.hpp"

namespace liesym {

/// Isomorphism regime of L(k).
enum class CaseTag { K0, K1, KHALF, KLOW, KHIGH };

std::string to_string(CaseTag tag);
CaseTag case_tag_from_string(std::string_view s);

/// Which standard form and optimal-system table a regime uses.
enum class StandardForm { A2_2A1, A35_A1, A34_A1 };

struct AlgebraCase {
    CaseTag tag;
    Rational k;
    /// Present for KHALF (alpha = -1), KLOW and KHIGH.
    std::optional<Rational> alpha;
    /// Row i holds e_i in v-coordinates.
    Matrix<Rational> basis_change;
    StandardForm form;
    std::string standard_name;

    [[nodiscard]] bool uses_generic_table() const { return form != StandardForm::A2_2A1; }
};

struct ClassifiedAlgebra {
    AlgebraCase algebra_case;
    LieAlgebraQ e_algebra;
    Rational k;
};

/// Five-way split: k = 0, k = 1, k = 1/2, k < 1/2 (k != 0), k > 1/2 (k != 1).
AlgebraCase classify_k(const Rational& k);

/// Symbolic alpha for the open regimes: (k-1)/k for KHIGH, k/(k-1) for KLOW.
ParamScalar symbolic_alpha(CaseTag tag);
/// Basis change with entries rational in k (valid on the whole open regime).
Matrix<ParamScalar> symbolic_basis_change(CaseTag tag);

/// The standard e-basis table of a regime at the given alpha.
LieAlgebraQ standard_algebra(StandardForm form, const Rational& alpha = Rational(0));
/// Standard table with alpha kept as the symbolic function of k (KLOW, KHIGH).
LieAlgebra standard_algebra_symbolic(CaseTag tag);

/// Transports L through the basis change and checks the standard relations.
/// Throws RelationMismatch naming the first offending bracket.
ClassifiedAlgebra to_standard_basis(const LieAlgebra& l, const AlgebraCase& c);
/// Same for the open regimes with k kept symbolic.
LieAlgebra to_standard_basis_symbolic(const LieAlgebra& l, CaseTag tag);

std::vector<std::string> e_labels();

/// Isomorphism-invariant data of an algebra at fixed k.
struct StructuralInvariants {
    std::size_t center_dim;
    std::size_t derived_dim;
    std::size_t second_derived_dim;
    bool derived_abelian;
    bool derived_nilpotent;
    /// Unordered eigenvalue ratio {r, 1/r} of the ad-action on a 2-dim derived
    /// algebra, stored sorted; empty when undefined.
    std::optional<std::pair<Rational, Rational>> eigenvalue_ratio;

    friend bool operator==(const StructuralInvariants&, const StructuralInvariants&) = default;
};

StructuralInvariants structural_invariants(const LieAlgebraQ& l);
StructuralInvariants structural_invariants(const LieAlgebra& l, const Rational& k);

}  // namespace liesym
