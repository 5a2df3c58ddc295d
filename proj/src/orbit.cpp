#include "liesym/orbit.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

#include <cmath>
#include <functional>
#include <limits>

#include "liesym/adjoint.hpp"
#include "liesym/reduce.hpp"

namespace liesym {

std::string ConjugacySignature::str() const {
    return "(dim " + std::to_string(dim_sub) + ", center " + std::to_string(center_meet) + ", derived " +
           std::to_string(derived_meet) + ", " + (abelian ? "abelian" : "non-abelian") + ", [S,S] " +
           std::to_string(derived_dim) + ", normalizer " + std::to_string(normalizer_dim) + ")";
}

ConjugacySignature signature(const LieAlgebraQ& e, const Subspace& s) {
    if (!is_closed(e, s)) throw NotClosed("signature needs a subalgebra");
    ConjugacySignature sig;
    sig.dim_sub = s.dim();
    sig.center_meet = s.intersect(center(e).space()).dim();
    sig.derived_meet = s.intersect(derived_subalgebra(e).space()).dim();
    sig.derived_dim = bracket_span(e, s, s).dim();
    sig.abelian = sig.derived_dim == 0;
    sig.normalizer_dim = normalizer(e, s).dim();
    return sig;
}

ConjugacySignature signature(const AlgebraCase& c, const Subalgebra& s) {
    return signature(reduction_algebra(c), s.space());
}

std::string WeightProfile::str() const {
    std::string out = "meet";
    for (auto m : meet) out += " " + std::to_string(m);
    out += " / join";
    for (auto j : join) out += " " + std::to_string(j);
    return out;
}

WeightProfile weight_profile(const AlgebraCase& c, const Subspace& s) {
    // weight spaces of the scaling generator inside [L, L] + Z(L)
    std::vector<std::vector<std::size_t>> spaces =
        c.form == StandardForm::A2_2A1 ? std::vector<std::vector<std::size_t>>{{1}, {2, 3}}
                                       : std::vector<std::vector<std::size_t>>{{0}, {1}, {3}};
    WeightProfile p;
    for (unsigned mask = 1; mask < (1u << spaces.size()); ++mask) {
        Matrix<Rational> rows;
        for (std::size_t i = 0; i < spaces.size(); ++i)
            if (mask & (1u << i))
                for (auto b : spaces[i]) {
                    Vec<Rational> v(4, Rational(0));
                    v[b] = Rational(1);
                    rows.push_back(v);
                }
        Subspace w = Subspace::span(rows, 4);
        p.meet.push_back(s.intersect(w).dim());
        p.join.push_back(s.sum(w).dim());
    }
    return p;
}

namespace {

using Mat4 = Eigen::Matrix4d;

/// Orthogonal projector onto the row space of m, via m^T (m m^T)^-1 m.
Mat4 projector(const Eigen::MatrixXd& m) {
    Eigen::MatrixXd gram = m * m.transpose();
    return m.transpose() * gram.ldlt().solve(m);
}

struct Objective {
    std::function<double(const double*)> f;
};

double call_objective(const gsl_vector* x, void* params) {
    auto* obj = static_cast<Objective*>(params);
    return obj->f(x->data);
}

/// Nelder-Mead from x0; returns the best point and value.
std::pair<std::vector<double>, double> minimise(const Objective& obj, std::vector<double> x0, int max_iterations) {
    const std::size_t n = x0.size();
    if (n == 0) return {x0, obj.f(x0.data())};
    gsl_multimin_function fn{&call_objective, n, const_cast<Objective*>(&obj)};
    gsl_vector* x = gsl_vector_alloc(n);
    gsl_vector* step = gsl_vector_alloc(n);
    for (std::size_t i = 0; i < n; ++i) {
        gsl_vector_set(x, i, x0[i]);
        gsl_vector_set(step, i, 0.5);
    }
    gsl_multimin_fminimizer* s = gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, n);
    gsl_multimin_fminimizer_set(s, &fn, x, step);
    for (int it = 0; it < max_iterations; ++it) {
        if (gsl_multimin_fminimizer_iterate(s) != GSL_SUCCESS) break;
        if (gsl_multimin_test_size(gsl_multimin_fminimizer_size(s), 1e-12) == GSL_SUCCESS) break;
    }
    std::vector<double> best(n);
    for (std::size_t i = 0; i < n; ++i) best[i] = gsl_vector_get(s->x, i);
    double value = s->fval;
    gsl_multimin_fminimizer_free(s);
    gsl_vector_free(x);
    gsl_vector_free(step);
    return {best, value};
}

void grid(std::size_t n, const std::vector<std::vector<double>>& axes, std::vector<double>& cur,
          std::vector<std::vector<double>>& out) {
    if (cur.size() == n) {
        out.push_back(cur);
        return;
    }
    for (double v : axes[cur.size()]) {
        cur.push_back(v);
        grid(n, axes, cur, out);
        cur.pop_back();
    }
}

/// exp(-x ad) for one basis generator, using the closed forms for diagonal ad and ad^2 = 0.
class OneParameter {
public:
    explicit OneParameter(const Eigen::MatrixXd& ad) : ad_(ad) {
        Mat4 off = ad_;
        off.diagonal().setZero();
        if (off.isZero(0.0)) kind_ = Kind::diagonal;
        else if ((ad_ * ad_).isZero(0.0)) kind_ = Kind::square_zero;
    }
    [[nodiscard]] Mat4 operator()(double x) const {
        switch (kind_) {
            case Kind::diagonal: {
                Mat4 out = Mat4::Zero();
                for (int i = 0; i < 4; ++i) out(i, i) = std::exp(-x * ad_(i, i));
                return out;
            }
            case Kind::square_zero: return Mat4::Identity() - x * ad_;
            default: return expm(-x * Eigen::MatrixXd(ad_));
        }
    }

private:
    enum class Kind { diagonal, square_zero, general };
    Mat4 ad_;
    Kind kind_ = Kind::general;
};

/// Shear(s) first, then the scaling: x = (xi, log t) for A_2 + 2A_1, (xi, zeta, log t) otherwise.
struct GroupMap {
    explicit GroupMap(const AlgebraCase& c) : form(c.form) {
        for (const auto& ad : ad_basis_numeric(reduction_algebra(c))) gens.emplace_back(ad);
    }
    [[nodiscard]] Mat4 operator()(const double* x) const {
        if (form == StandardForm::A2_2A1) return gens[0](x[1]) * gens[1](x[0]);
        return gens[2](x[2]) * gens[1](x[1]) * gens[0](x[0]);
    }
    StandardForm form;
    std::vector<OneParameter> gens;
};

}  // namespace

double subspace_distance(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    return (projector(a) - projector(b)).norm();
}

std::size_t group_dim(const AlgebraCase& c) { return c.form == StandardForm::A2_2A1 ? 2 : 3; }

Eigen::MatrixXd group_element(const AlgebraCase& c, const std::vector<double>& p) {
    if (p.size() != group_dim(c)) throw DimensionMismatch("wrong number of group parameters");
    return GroupMap(c)(p.data());
}

OrbitSearch orbit_distance(const AlgebraCase& c, const Eigen::MatrixXd& s, const Representative& r,
                           const OrbitOptions& options) {
    if (s.rows() != static_cast<Eigen::Index>(r.dim_sub))
        throw DimensionMismatch("orbit_distance needs subspaces of equal dimension");
    const GroupMap group(c);
    const std::size_t gdim = group_dim(c);
    const bool free_a = !options.fixed_params && r.has_param("a");
    const bool free_phi = !options.fixed_params && r.has_param("phi");
    std::vector<double> eps_values{1.0};
    if (options.fixed_params) eps_values = {options.fixed_params->eps};
    else if (r.has_param("eps")) eps_values = {1.0, -1.0};
    const Eigen::MatrixXd st = s.transpose();
    std::optional<Mat4> fixed_target;
    if (options.fixed_params) fixed_target = projector(r.instantiate_numeric(*options.fixed_params));

    OrbitSearch best;
    best.distance = std::numeric_limits<double>::infinity();
    for (double eps : eps_values) {
        auto params_at = [&](const double* x) {
            NumericParams p = options.fixed_params.value_or(NumericParams{});
            std::size_t i = gdim;
            if (free_a) p.a = x[i++];
            if (free_phi) p.phi = x[i++];
            p.eps = eps;
            return p;
        };
        Objective obj{[&](const double* x) {
            Eigen::MatrixXd image = (group(x) * st).transpose();
            Mat4 target = fixed_target ? *fixed_target : projector(r.instantiate_numeric(params_at(x)));
            return (projector(image) - target).norm();
        }};
        std::vector<std::vector<double>> axes(gdim, {-1.0, 1.0});
        if (free_a) axes.push_back({-1.0, 1.0});
        if (free_phi) axes.push_back({0.8, 2.3});
        std::vector<std::vector<double>> starts;
        std::vector<double> cur;
        grid(axes.size(), axes, cur, starts);
        starts.emplace_back(axes.size(), 0.0);
        for (const auto& x0 : starts) {
            auto [x, value] = minimise(obj, x0, options.max_iterations);
            ++best.starts;
            if (value < best.distance) {
                best.distance = value;
                best.group_params.assign(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(gdim));
                best.rep_params = params_at(x.data());
            }
        }
    }
    return best;
}

}  // namespace liesym
