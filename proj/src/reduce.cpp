#include "liesym/reduce.hpp"

namespace liesym {

namespace {

constexpr std::size_t kE1 = 0, kE2 = 1, kE3 = 2, kE4 = 3;

Surd sign_surd(int s) { return Surd(Rational(s)); }

int sign_of(const Surd& x) { return x.sign(); }

ReductionResult result(const AlgebraCase& c, std::string label, std::size_t dim) {
    ReductionResult r;
    r.tag = c.tag;
    r.label = std::move(label);
    r.dim_sub = dim;
    return r;
}

void add_scaling(GroupWord& w, std::size_t generator, const Surd& t) {
    if (t == Surd(1)) return;
    w.push_back({generator, PosScale(t)});
}

Vec<Rational> scaled(Vec<Rational> v, const Rational& s) {
    for (auto& x : v) x = x * s;
    return v;
}

bool is_unit(const Vec<Rational>& v, std::size_t i) {
    for (std::size_t j = 0; j < v.size(); ++j)
        if (v[j] != Rational(j == i ? 1 : 0)) return false;
    return true;
}

/// Indices of the unit vectors spanning a coordinate subspace; throws when it is not one.
std::vector<std::size_t> coordinate_support(const Subspace& t) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < t.dim(); ++i) {
        auto p = static_cast<std::size_t>(t.pivots()[i]);
        if (!is_unit(t.rows()[i], p)) throw Error("expected a coordinate subspace, got " + format_subspace(t, e_labels()));
        out.push_back(p);
    }
    return out;
}

Subspace coordinate_span(std::initializer_list<std::size_t> idx) {
    Matrix<Rational> rows;
    for (auto i : idx) {
        Vec<Rational> v(4, Rational(0));
        v[i] = Rational(1);
        rows.push_back(v);
    }
    return Subspace::span(rows, 4);
}

// ---- A_{3.5}^alpha + A_1: e1, e2 nilpotent directions, e3 scales by (t, t^alpha, 1, 1) ----

ReductionResult generic_inside_ideal(const AlgebraCase& c, const Subspace& s) {
    const Rational alpha = *c.alpha;
    const std::size_t dim = s.dim();
    if (dim == 3) return result(c, "{e1, e2, e4}", 3);
    if (dim == 1) {
        const auto& v = s.rows()[0];
        const Rational a = v[kE1], b = v[kE2], d = v[kE4];
        ReductionResult r = result(c, "", 1);
        if (a.is_zero() && b.is_zero()) {
            r.label = "{e4}";
        } else if (a.is_zero() && d.is_zero()) {
            r.label = "{e2}";
        } else if (b.is_zero() && d.is_zero()) {
            r.label = "{e1 + a e2}";
            r.params.a = Surd(0);
        } else if (d.is_zero()) {
            Surd t = Surd::power((a / b).abs(), (alpha - Rational(1)).inverse());
            add_scaling(r.word, kE3, t);
            r.label = "{e1 + a e2}";
            r.params.a = sign_surd((a * b).sign());
        } else if (b.is_zero()) {
            add_scaling(r.word, kE3, Surd((d / a).abs()));
            r.label = "{e1 + eps e4}";
            r.params.eps = (d / a).sign();
        } else if (a.is_zero()) {
            add_scaling(r.word, kE3, Surd::power((d / b).abs(), alpha.inverse()));
            r.label = "{e2 + eps e4}";
            r.params.eps = (d / b).sign();
        } else {
            Surd t = Surd::power((a / b).abs(), (alpha - Rational(1)).inverse());
            add_scaling(r.word, kE3, t);
            r.label = "{e1 + eps e2 + a e4}";
            r.params.eps = (a * b).sign();
            r.params.a = Surd(d / a) / t;
        }
        return r;
    }
    // dim 2: the normal (n1, n2, n4) inside span{e1, e2, e4}.
    Matrix<Rational> coords;
    for (const auto& row : s.rows()) coords.push_back({row[kE1], row[kE2], row[kE4]});
    auto ns = nullspace(coords, 3);
    Vec<Rational> n = ns.at(0);
    ReductionResult r = result(c, "", 2);
    if (n[2].is_zero()) {
        const Rational a = n[1], b = -n[0];
        if (b.is_zero()) {
            r.label = "{e1, e4}";
        } else if (a.is_zero()) {
            r.label = "{e2, e4}";
        } else {
            add_scaling(r.word, kE3, Surd::power((a / b).abs(), (alpha - Rational(1)).inverse()));
            r.label = "{e1 + eps e2, e4}";
            r.params.eps = (a * b).sign();
        }
        return r;
    }
    n = scaled(n, n[2].inverse());
    const Rational n1 = n[0], n2 = n[1];
    if (n1.is_zero() && n2.is_zero()) {
        r.label = "{e1, e2}";
    } else if (n2.is_zero()) {
        add_scaling(r.word, kE3, Surd(n1.abs()));
        r.label = "{e1 + eps e4, a e1 + e2}";
        r.params.eps = -n1.sign();
        r.params.a = Surd(0);
    } else if (n1.is_zero()) {
        add_scaling(r.word, kE3, Surd::power(n2.abs(), alpha.inverse()));
        r.label = "{e2 + eps e4, e1}";
        r.params.eps = -n2.sign();
    } else {
        Surd t(n1.abs());
        add_scaling(r.word, kE3, t);
        const int eps = -n1.sign();
        r.label = "{e1 + eps e4, a e1 + e2}";
        r.params.eps = eps;
        r.params.a = Surd(Rational(eps) * n2) * t.pow(-alpha);
    }
    return r;
}

ReductionResult reduce_generic(const AlgebraCase& c, const Subspace& s) {
    const LieAlgebraQ l = reduction_algebra(c);
    const Rational alpha = *c.alpha;
    const Vec<Rational>* with_e3 = nullptr;
    for (const auto& row : s.rows())
        if (!row[kE3].is_zero()) {
            with_e3 = &row;
            break;
        }
    if (!with_e3) return generic_inside_ideal(c, s);

    const Vec<Rational> x = scaled(*with_e3, (*with_e3)[kE3].inverse());
    ReductionResult r = result(c, "", s.dim());
    if (!x[kE1].is_zero()) r.word.push_back({kE1, x[kE1]});
    if (!x[kE2].is_zero()) r.word.push_back({kE2, x[kE2] / alpha});
    const Subspace image = apply_word(l, r.word, s);
    const Subspace ideal = coordinate_span({kE1, kE2, kE4});
    const auto support = coordinate_support(image.intersect(ideal));
    auto has = [&](std::size_t i) { return std::find(support.begin(), support.end(), i) != support.end(); };
    const Rational d = has(kE4) ? Rational(0) : x[kE4];

    if (s.dim() == 1) {
        r.label = "{e3 + a e4}";
    } else if (s.dim() == 2) {
        if (has(kE4)) r.label = "{e3, e4}";
        else if (has(kE1)) r.label = "{e3 + a e4, e1}";
        else r.label = "{e3 + a e4, e2}";
    } else {
        if (!has(kE4)) r.label = "{e1, e2, e3 + a e4}";
        else if (has(kE1)) r.label = "{e1, e3, e4}";
        else r.label = "{e2, e3, e4}";
    }
    if (!has(kE4)) r.params.a = Surd(d);
    return r;
}

// ---- A_2 + 2A_1: e1 scales e2 by 1/t, e2 shears e1 -> e1 + xi e2, e3 and e4 central ----

/// Unit vector sigma * u / |u| with sigma chosen so the angle lies in [0, pi).
struct Direction {
    Surd cos, sin;
    int sigma;
    Surd norm;
};

Direction half_circle(const Rational& u3, const Rational& u4) {
    Direction d;
    d.sigma = (u4.sign() > 0 || (u4.is_zero() && u3.sign() > 0)) ? 1 : -1;
    d.norm = Surd::sqrt(u3 * u3 + u4 * u4);
    Surd inv = d.norm.inverse();
    d.cos = Surd(Rational(d.sigma) * u3) * inv;
    d.sin = Surd(Rational(d.sigma) * u4) * inv;
    return d;
}

void set_phi(ReductionResult& r, const Surd& cos, const Surd& sin) {
    r.params.cos = cos;
    r.params.sin = sin;
}

void set_phi_zero(ReductionResult& r) { set_phi(r, Surd(1), Surd(0)); }

ReductionResult reduce_k0(const AlgebraCase& c, const Subspace& s) {
    const Subspace centre = coordinate_span({kE3, kE4});
    const Subspace w_space = s.intersect(centre);
    const std::size_t dim = s.dim();
    ReductionResult r = result(c, "", dim);

    if (dim == 1) {
        Vec<Rational> v = s.rows()[0];
        if (!v[kE1].is_zero()) {
            v = scaled(v, v[kE1].inverse());
            if (!v[kE2].is_zero()) r.word.push_back({kE2, -v[kE2]});
            r.label = "{e1 + a(e3 cos phi + e4 sin phi)}";
            if (v[kE3].is_zero() && v[kE4].is_zero()) {
                r.params.a = Surd(0);
                set_phi_zero(r);
            } else {
                Direction d = half_circle(v[kE3], v[kE4]);
                r.params.a = Surd(Rational(d.sigma)) * d.norm;
                set_phi(r, d.cos, d.sin);
            }
        } else if (!v[kE2].is_zero()) {
            v = scaled(v, v[kE2].inverse());
            if (v[kE3].is_zero() && v[kE4].is_zero()) {
                r.label = "{e2}";
            } else {
                Direction d = half_circle(v[kE3], v[kE4]);
                add_scaling(r.word, kE1, d.norm.inverse());
                r.label = "{e2 + eps(e3 cos phi + e4 sin phi)}";
                r.params.eps = d.sigma;
                set_phi(r, d.cos, d.sin);
            }
        } else {
            Direction d = half_circle(v[kE3], v[kE4]);
            r.label = "{e3 cos phi + e4 sin phi}";
            set_phi(r, d.cos, d.sin);
        }
        return r;
    }

    if (w_space.dim() == 2) {
        if (dim == 2) {
            r.label = "{e3, e4}";
            return r;
        }
        const Vec<Rational>& x = s.rows()[0];
        if (!x[kE1].is_zero()) {
            if (!x[kE2].is_zero()) r.word.push_back({kE2, -x[kE2] / x[kE1]});
            r.label = "{e1, e3, e4}";
        } else {
            r.label = "{e2, e3, e4}";
        }
        return r;
    }

    if (w_space.dim() == 0) {
        // dim 2 with S projecting onto span{e1, e2}; closure puts e2 in S.
        const Vec<Rational>& x = s.rows()[0];
        r.label = "{e1 + a(e3 cos phi + e4 sin phi), e2}";
        if (x[kE3].is_zero() && x[kE4].is_zero()) {
            r.params.a = Surd(0);
            set_phi_zero(r);
        } else {
            Direction d = half_circle(x[kE3], x[kE4]);
            r.params.a = Surd(Rational(d.sigma)) * d.norm;
            set_phi(r, d.cos, d.sin);
        }
        return r;
    }

    // S meets the centre in the line w; c is the half-circle unit vector orthogonal to w.
    const Vec<Rational>& w = w_space.rows()[0];
    Direction dw = half_circle(-w[kE4], w[kE3]);
    auto along_c = [&](const Vec<Rational>& x) { return Surd(x[kE3] * (-w[kE4]) + x[kE4] * w[kE3]) * Rational(dw.sigma) / dw.norm; };

    if (dim == 3) {
        // rows: (1, 0, *, *), e2, w.
        r.label = "{e1 + a(e3 cos phi + e4 sin phi), e3 sin phi - e4 cos phi, e2}";
        r.params.a = along_c(s.rows()[0]);
        set_phi(r, dw.cos, dw.sin);
        return r;
    }

    Vec<Rational> x = s.rows()[0];
    set_phi(r, dw.cos, dw.sin);
    if (!x[kE1].is_zero()) {
        x = scaled(x, x[kE1].inverse());
        if (!x[kE2].is_zero()) r.word.push_back({kE2, -x[kE2]});
        r.label = "{e1 + a(e3 cos phi + e4 sin phi), e3 sin phi - e4 cos phi}";
        r.params.a = along_c(x);
        return r;
    }
    x = scaled(x, x[kE2].inverse());
    Surd beta = along_c(x);
    if (beta.is_zero()) {
        r.label = "{e2, e3 sin phi - e4 cos phi}";
        return r;
    }
    add_scaling(r.word, kE1, beta.abs().inverse());
    r.label = "{e2 + eps(e3 cos phi + e4 sin phi), e3 sin phi - e4 cos phi}";
    r.params.eps = sign_of(beta);
    return r;
}

ReductionResult dispatch(const AlgebraCase& c, const Subspace& s) {
    if (s.ambient_dim() != 4) throw DimensionMismatch("reducers act on 4-dimensional algebras");
    if (s.dim() == 0) throw ZeroVector("cannot reduce the zero subalgebra");
    if (s.dim() > 3) throw DimensionMismatch("reducers handle dimensions 1 to 3");
    if (c.form == StandardForm::A2_2A1) return reduce_k0(c, s);
    return reduce_generic(c, s);
}

}  // namespace

LieAlgebraQ reduction_algebra(const AlgebraCase& c) {
    return standard_algebra(c.form, c.alpha.value_or(Rational(0)));
}

ReductionResult reduce_1d(const AlgebraCase& c, const Vec<Rational>& v) {
    if (v.size() != 4) throw DimensionMismatch("expected a vector of length 4");
    if (is_zero_vec(v)) throw ZeroVector("cannot reduce the zero vector");
    return dispatch(c, Subspace::span({v}, 4));
}

ReductionResult reduce_2d(const AlgebraCase& c, const Subalgebra& s) {
    if (s.dim() != 2) throw DimensionMismatch("reduce_2d needs a 2-dimensional subalgebra");
    if (!is_closed(reduction_algebra(c), s.space())) throw NotClosed("input is not a subalgebra");
    return dispatch(c, s.space());
}

ReductionResult reduce_3d(const AlgebraCase& c, const Subalgebra& s) {
    if (s.dim() != 3) throw DimensionMismatch("reduce_3d needs a 3-dimensional subalgebra");
    if (!is_closed(reduction_algebra(c), s.space())) throw NotClosed("input is not a subalgebra");
    return dispatch(c, s.space());
}

ReductionResult reduce(const AlgebraCase& c, const Subalgebra& s) {
    switch (s.dim()) {
        case 1: return reduce_1d(c, s.rows()[0]);
        case 2: return reduce_2d(c, s);
        case 3: return reduce_3d(c, s);
        default: throw DimensionMismatch("reducers handle dimensions 1 to 3");
    }
}

bool certify_reduction(const AlgebraCase& c, const Subspace& s, ReductionResult& r, const Representative& rep) {
    const LieAlgebraQ l = reduction_algebra(c);
    Echelon<Surd> image = apply_word_surd(l, r.word, s);
    Matrix<Surd> target = rep.instantiate(r.params);
    if (rref(target, 4) != image) return false;
    // coordinates of each representative generator in the image basis
    r.span_change.clear();
    for (const auto& g : target) {
        auto coords = coordinates_in(image, g);
        if (!coords) return false;
        r.span_change.push_back(*coords);
    }
    return true;
}

}  // namespace liesym
