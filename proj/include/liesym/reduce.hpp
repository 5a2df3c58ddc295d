#pragma once

#include <string>

#include "liesym/adjoint.hpp"
#include "liesym/classify.hpp"
#include "liesym/tables.hpp"

namespace liesym {

/// Canonical form of a subalgebra: a table label, parameter values and the
/// group word taking the input onto the representative.
struct ReductionResult {
    CaseTag tag;
    std::string label;
    std::size_t dim_sub = 0;
    ParamValues params;
    GroupWord word;
    /// Representative generators = span_change * echelon rows of the image; filled by certify_reduction.
    Matrix<Surd> span_change;
};

/// E-basis algebra the reducers act on (alpha from the case).
LieAlgebraQ reduction_algebra(const AlgebraCase& c);

/// Input vectors and subalgebras are in e-coordinates.
ReductionResult reduce_1d(const AlgebraCase& c, const Vec<Rational>& v);
ReductionResult reduce_2d(const AlgebraCase& c, const Subalgebra& s);
ReductionResult reduce_3d(const AlgebraCase& c, const Subalgebra& s);
ReductionResult reduce(const AlgebraCase& c, const Subalgebra& s);

/// Exact check that word(S) equals the representative at the reported parameters.
/// Fills span_change. May throw IncommensurableSurds when the exact path is not available.
bool certify_reduction(const AlgebraCase& c, const Subspace& s, ReductionResult& r, const Representative& rep);

}  // namespace liesym
