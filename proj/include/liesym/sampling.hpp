#pragma once

#include <optional>
#include <random>

#include "liesym/adjoint.hpp"
#include "liesym/classify.hpp"

namespace liesym {

using Rng = std::mt19937_64;

/// Rational with numerator in [-10 den, 10 den] and denominator in [1, 10].
Rational random_rational(Rng& rng);
/// Vector whose entries are zero with probability 1/2, otherwise random_rational.
Vec<Rational> random_sparse_vector(Rng& rng, std::size_t n);

/// Word with rational shears and a scaling t = s^q chosen so that the matrix stays rational.
GroupWord random_rational_word(const AlgebraCase& c, Rng& rng);

/// Closed subalgebra of the requested dimension: sparse seeds, closure, then a random word.
/// Seeds are mapped through seed_map (e.g. v- to e-coordinates) when given.
/// Draws that close to another dimension are discarded; empty after max_tries failures.
std::optional<Subalgebra> random_subalgebra(const AlgebraCase& c, const LieAlgebraQ& l, std::size_t dim, Rng& rng,
                                            const Matrix<Rational>* seed_map = nullptr, int max_tries = 1000);

}  // namespace liesym
