#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "liesym/classify.hpp"
#include "liesym/tables.hpp"

namespace liesym {

/// Conjugacy invariants of a subalgebra of the e-basis algebra.
struct ConjugacySignature {
    std::size_t dim_sub = 0;
    std::size_t center_meet = 0;
    std::size_t derived_meet = 0;
    bool abelian = true;
    std::size_t derived_dim = 0;
    std::size_t normalizer_dim = 0;

    [[nodiscard]] std::string str() const;
    friend auto operator<=>(const ConjugacySignature&, const ConjugacySignature&) = default;
};

ConjugacySignature signature(const LieAlgebraQ& e, const Subspace& s);
ConjugacySignature signature(const AlgebraCase& c, const Subalgebra& s);

/// Finer exact invariant: for every sum W of weight spaces of the scaling generator
/// inside the ideal [L, L] + Z(L), the dimensions of S meet W and S + W. Shears act
/// trivially on that ideal, so these are preserved by the whole adjoint group.
struct WeightProfile {
    std::vector<std::size_t> meet;
    std::vector<std::size_t> join;

    [[nodiscard]] std::string str() const;
    friend auto operator<=>(const WeightProfile&, const WeightProfile&) = default;
};

WeightProfile weight_profile(const AlgebraCase& c, const Subspace& s);

/// Frobenius norm of the difference of the orthogonal projectors onto the row spaces.
double subspace_distance(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

struct OrbitSearch {
    double distance = 0.0;
    /// Shear and log-scale parameters of the best group element.
    std::vector<double> group_params;
    NumericParams rep_params;
    int starts = 0;
};

struct OrbitOptions {
    /// When set, R is compared at exactly these parameters.
    std::optional<NumericParams> fixed_params;
    int max_iterations = 600;
};

/// Minimises the distance between g.S and R(params) over the adjoint group and,
/// unless fixed, over R's free parameters, with Nelder-Mead from a coarse grid of starts.
OrbitSearch orbit_distance(const AlgebraCase& c, const Eigen::MatrixXd& s, const Representative& r,
                           const OrbitOptions& options = {});

/// Numeric adjoint element for the given group parameters (generator order of the case).
Eigen::MatrixXd group_element(const AlgebraCase& c, const std::vector<double>& group_params);
std::size_t group_dim(const AlgebraCase& c);

}  // namespace liesym
