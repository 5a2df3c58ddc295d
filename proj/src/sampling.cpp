#include "liesym/sampling.hpp"

namespace liesym {

Rational random_rational(Rng& rng) {
    std::uniform_int_distribution<long> den(1, 10);
    long d = den(rng);
    std::uniform_int_distribution<long> num(-10 * d, 10 * d);
    return {Integer(num(rng)), Integer(d)};
}

Vec<Rational> random_sparse_vector(Rng& rng, std::size_t n) {
    std::bernoulli_distribution zero(0.5);
    Vec<Rational> v(n, Rational(0));
    for (auto& x : v)
        if (!zero(rng)) x = random_rational(rng);
    return v;
}

GroupWord random_rational_word(const AlgebraCase& c, Rng& rng) {
    GroupWord w;
    std::uniform_int_distribution<long> small(1, 4);
    const Integer q = c.alpha ? c.alpha->den() : Integer(1);
    Rational s(Integer(small(rng)), Integer(small(rng)));
    Rational t = s.pow(q.get_si());
    if (c.form == StandardForm::A2_2A1) {
        w.push_back({1, random_rational(rng)});
        w.push_back({0, PosScale(t)});
    } else {
        w.push_back({0, random_rational(rng)});
        w.push_back({1, random_rational(rng)});
        w.push_back({2, PosScale(t)});
    }
    return w;
}

std::optional<Subalgebra> random_subalgebra(const AlgebraCase& c, const LieAlgebraQ& l, std::size_t dim, Rng& rng,
                                            const Matrix<Rational>* seed_map, int max_tries) {
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        Matrix<Rational> seeds;
        for (std::size_t i = 0; i < dim; ++i) {
            Vec<Rational> seed = random_sparse_vector(rng, l.dim());
            seeds.push_back(seed_map ? mat_vec(*seed_map, seed) : seed);
        }
        bool all_zero = true;
        for (const auto& s : seeds) all_zero = all_zero && is_zero_vec(s);
        if (all_zero) continue;
        Subalgebra s = close_subspace(l, seeds);
        if (s.dim() != dim) continue;
        return apply_word(l, random_rational_word(c, rng), s);
    }
    return std::nullopt;
}

}  // namespace liesym
