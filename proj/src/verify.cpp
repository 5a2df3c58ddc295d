#include "liesym/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "liesym/data.hpp"

namespace liesym {

using json = nlohmann::json;

namespace {

ParamValues with_phi(ParamValues p, const std::pair<Rational, Rational>& cs) {
    p.cos = Surd(cs.first);
    p.sin = Surd(cs.second);
    return p;
}

/// Point on the half circle from the rational parameter m >= 0: ((1-m^2)/(1+m^2), 2m/(1+m^2)).
std::pair<Rational, Rational> rational_phi(const Rational& m) {
    Rational d = Rational(1) + m * m;
    return {(Rational(1) - m * m) / d, Rational(2) * m / d};
}

Rational bounded_rational(Rng& rng, long lo, long hi) {
    std::uniform_int_distribution<long> den(1, 10);
    long d = den(rng);
    std::uniform_int_distribution<long> num(lo * d, hi * d);
    return {Integer(num(rng)), Integer(d)};
}

Subspace rows_span(const Matrix<Rational>& rows) { return Subspace::span(rows, rows.empty() ? 4 : rows[0].size()); }

Eigen::MatrixXd to_eigen_rows(const Matrix<Rational>& rows) {
    Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows[0].size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j].to_double();
    return m;
}

std::string params_text(const ParamValues& p) {
    std::string s = p.str();
    return s.empty() ? "-" : s;
}

/// Whether the reduction reproduced the input parameters for the parameters the entry uses.
bool same_params(const Representative& r, const ParamValues& in, const ParamValues& out) {
    if (r.has_param("a") && !(in.a && out.a && *in.a == *out.a)) return false;
    if (r.has_param("eps") && in.eps != out.eps) return false;
    if (r.has_param("phi") && !(in.cos && out.cos && *in.cos == *out.cos && *in.sin == *out.sin)) return false;
    return true;
}

bool is_generic(const AlgebraCase& c) { return c.form != StandardForm::A2_2A1; }

Rng section_rng(const VerifyOptions& o, const AlgebraCase& c, std::uint64_t salt) {
    std::seed_seq seq{static_cast<std::uint32_t>(o.seed), static_cast<std::uint32_t>(o.seed >> 32),
                      static_cast<std::uint32_t>(c.tag), static_cast<std::uint32_t>(salt)};
    return Rng(seq);
}

double round_to(double x, double scale = 1e12) { return std::round(x * scale) / scale; }

/// Automorphism negating the central directions outside the derived algebra.
Matrix<Rational> sign_automorphism(const AlgebraCase& c) {
    Matrix<Rational> m = identity<Rational>(4);
    m[3][3] = Rational(-1);
    if (!is_generic(c)) m[2][2] = Rational(-1);
    return m;
}

bool is_automorphism(const LieAlgebraQ& l, const Matrix<Rational>& m) {
    for (std::size_t i = 0; i < l.dim(); ++i)
        for (std::size_t j = 0; j < l.dim(); ++j) {
            Vec<Rational> ci(l.dim()), cj(l.dim());
            for (std::size_t r = 0; r < l.dim(); ++r) {
                ci[r] = m[r][i];
                cj[r] = m[r][j];
            }
            if (mat_vec(m, l.bracket(l.basis(i), l.basis(j))) != l.bracket(ci, cj)) return false;
        }
    return true;
}

Subspace map_rows(const Matrix<Rational>& m, const Matrix<Rational>& rows) {
    Matrix<Rational> out;
    for (const auto& r : rows) out.push_back(mat_vec(m, r));
    return rows_span(out);
}

}  // namespace

std::vector<ParamValues> closure_assignments(const Representative& r) {
    static const std::vector<Rational> as{Rational(0), Rational(1), Rational(-2), Rational(1, 3), Rational(5, 2)};
    const auto phis = exact_phi_points();
    std::vector<ParamValues> out;
    for (std::size_t i = 0; i < 5; ++i) {
        ParamValues p;
        if (r.has_param("a")) p.a = Surd(as[i]);
        if (r.has_param("eps")) p.eps = i % 2 == 0 ? 1 : -1;
        if (r.has_param("phi")) p = with_phi(p, phis[i]);
        out.push_back(p);
    }
    return out;
}

std::vector<ParamValues> probe_assignments(const Representative& r) {
    std::vector<ParamValues> out{ParamValues{}};
    auto expand = [&](auto&& setter, std::size_t n) {
        std::vector<ParamValues> next;
        for (const auto& p : out)
            for (std::size_t i = 0; i < n; ++i) next.push_back(setter(p, i));
        out = std::move(next);
    };
    if (r.has_param("a")) {
        static const std::vector<Rational> as{Rational(0), Rational(1), Rational(-1), Rational(2), Rational(-3, 2)};
        expand([&](ParamValues p, std::size_t i) { p.a = Surd(as[i]); return p; }, as.size());
    }
    if (r.has_param("eps")) expand([](ParamValues p, std::size_t i) { p.eps = i == 0 ? 1 : -1; return p; }, 2);
    if (r.has_param("phi")) {
        const auto phis = exact_phi_points();
        expand([&](const ParamValues& p, std::size_t i) { return with_phi(p, phis[i]); }, phis.size());
    }
    return out;
}

ParamValues random_assignment(const Representative& r, Rng& rng) {
    ParamValues p;
    if (r.has_param("a")) {
        std::uniform_int_distribution<int> kind(0, 3);
        switch (kind(rng)) {
            case 0: p.a = Surd(0); break;
            case 1: p.a = Surd(std::bernoulli_distribution(0.5)(rng) ? 1 : -1); break;
            default: p.a = Surd(bounded_rational(rng, -2, 2)); break;
        }
    }
    if (r.has_param("eps")) p.eps = std::bernoulli_distribution(0.5)(rng) ? 1 : -1;
    if (r.has_param("phi")) p = with_phi(p, rational_phi(bounded_rational(rng, 0, 10)));
    return p;
}

LieAlgebraQ original_algebra(const Rational& k, const std::string& data_dir) {
    return evaluate(algebra_from_json(read_data_file(data_dir, "L_paper.json")), k);
}

Vec<Rational> e_to_v(const AlgebraCase& c, const Vec<Rational>& x) {
    Vec<Rational> y(4, Rational(0));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) y[j] += x[i] * c.basis_change[i][j];
    return y;
}

json closure_section(const AlgebraCase& c, const OptimalTables& t, const LieAlgebraQ& lv) {
    const LieAlgebraQ e = reduction_algebra(c);
    bool pass = true;
    json entries = json::array();
    for (const auto& r : t.e_table(c.tag)) {
        int closed = 0;
        json failures = json::array();
        for (const auto& p : closure_assignments(r)) {
            if (is_closed(e, rows_span(r.instantiate_rational(p)))) ++closed;
            else failures.push_back(params_text(p));
        }
        pass = pass && failures.empty();
        entries.push_back({{"label", r.label}, {"dim", r.dim_sub}, {"assignments", 5}, {"closed", closed},
                           {"failures", failures}});
    }
    json original = json::array();
    for (const auto& oe : t.regime(c.tag).entries) {
        for (const Representative* r : {&oe.printed, oe.corrected ? &*oe.corrected : nullptr}) {
            if (!r) continue;
            int closed = 0;
            for (const auto& p : closure_assignments(*r))
                if (is_closed(lv, rows_span(r->instantiate_rational(p)))) ++closed;
            pass = pass && closed == 5;
            original.push_back({{"label", r->label}, {"dim", r->dim_sub}, {"closed", closed},
                                {"form", r == &oe.printed ? "printed" : "corrected"}});
        }
    }
    json out{{"table", t.e_table_name(c.tag)}, {"entries", entries}, {"original_basis", original}};
    if (is_generic(c)) {
        Representative bad = parse_representative("{e1 + eps e2, e3}", 2, {"eps"}, {"e1 + eps*e2", "e3"}, e_labels());
        bool rejected = true;
        for (int eps : {1, -1}) {
            ParamValues p;
            p.eps = eps;
            rejected = rejected && !is_closed(e, rows_span(bad.instantiate_rational(p)));
        }
        out["negative_control"] = {{"label", bad.label}, {"rejected", rejected}};
        pass = pass && rejected;
    }
    out["pass"] = pass;
    return out;
}

json consistency_section(const AlgebraCase& c, const OptimalTables& t) {
    const OriginalRegime& reg = t.regime(c.tag);
    bool pass = true;
    json rows = json::array();
    for (const auto& oe : reg.entries) {
        const Representative* src = t.find(c.tag, oe.source);
        json row{{"label", oe.printed.label}, {"source", oe.source}};
        if (!src) {
            row["status"] = "missing_source";
            pass = false;
            rows.push_back(row);
            continue;
        }
        const Rational scale = oe.a_scale.eval(c.k);
        bool printed_ok = true, corrected_ok = true;
        for (const auto& p : closure_assignments(*src)) {
            Matrix<Rational> image;
            for (const auto& x : src->instantiate_rational(p)) image.push_back(e_to_v(c, x));
            const Subspace target = rows_span(image);
            ParamValues q = p;
            if (q.a) q.a = *q.a * Surd(scale);
            printed_ok = printed_ok && rows_span(oe.printed.instantiate_rational(q)) == target;
            if (oe.corrected) corrected_ok = corrected_ok && rows_span(oe.corrected->instantiate_rational(q)) == target;
        }
        std::string status;
        if (!oe.corrected) status = printed_ok ? "match" : "mismatch";
        else if (!printed_ok && corrected_ok) status = "erratum_confirmed";
        else if (printed_ok) status = "erratum_unneeded";
        else status = "mismatch";
        if (status == "mismatch" || status == "erratum_unneeded") pass = false;
        row["status"] = status;
        row["a_scale"] = oe.a_scale.str();
        if (oe.corrected) {
            row["corrected"] = oe.corrected->label;
            row["note"] = oe.erratum_note;
        }
        rows.push_back(row);
    }
    return {{"regime", to_string(reg.tag)}, {"k", c.k.str()}, {"rows", rows}, {"pass", pass}};
}

json coverage_section(const AlgebraCase& c, const OptimalTables& t, const VerifyOptions& o) {
    const LieAlgebraQ e = reduction_algebra(c);
    Matrix<Rational> v_to_e = *inverse(transpose(c.basis_change));
    bool pass = true;
    json dims = json::array();
    std::set<std::string> reached;
    std::set<std::string> omitted;
    for (std::size_t dim = 1; dim <= 3; ++dim) {
        Rng rng = section_rng(o, c, dim);
        std::size_t exact = 0, numeric = 0, failed = 0, drawn = 0;
        std::map<std::string, std::size_t> labels;
        json irreducible = json::array();
        for (std::size_t i = 0; i < o.samples; ++i) {
            auto s = random_subalgebra(c, e, dim, rng, &v_to_e);
            if (!s) break;
            ++drawn;
            ReductionResult r = reduce(c, *s);
            const Representative* rep = t.find(c.tag, r.label);
            if (!rep) {
                omitted.insert(r.label);
                ++failed;
                if (irreducible.size() < 10)
                    irreducible.push_back({{"subalgebra", format_subspace(s->space(), e_labels())},
                                           {"reduces_to", r.label}, {"reason", "label not in table"}});
                continue;
            }
            ++labels[r.label];
            reached.insert(r.label);
            bool exact_ok = false, exact_tried = true;
            try {
                exact_ok = certify_reduction(c, s->space(), r, *rep);
            } catch (const IncommensurableSurds&) {
                exact_tried = false;
            }
            if (exact_ok) {
                ++exact;
                continue;
            }
            // numeric path: the witness word first, then a free orbit search
            Eigen::MatrixXd rows = to_eigen_rows(s->rows());
            Matrix<Surd> g = r.word.surd_matrix(e);
            Eigen::MatrixXd gm(4, 4);
            for (Eigen::Index a = 0; a < 4; ++a)
                for (Eigen::Index b = 0; b < 4; ++b)
                    gm(a, b) = g[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)].to_double();
            double d = subspace_distance((gm * rows.transpose()).transpose(), rep->instantiate_numeric(to_numeric(r.params)));
            if (d >= o.tol) d = orbit_distance(c, rows, *rep).distance;
            if (d < o.tol) {
                ++numeric;
            } else {
                ++failed;
                if (irreducible.size() < 10)
                    irreducible.push_back({{"subalgebra", format_subspace(s->space(), e_labels())},
                                           {"reduces_to", r.label}, {"params", params_text(r.params)},
                                           {"reason", exact_tried ? "witness mismatch" : "numeric distance " + std::to_string(d)}});
            }
        }
        const double rate = drawn ? static_cast<double>(exact) / static_cast<double>(drawn) : 0.0;
        const bool ok = drawn == o.samples && failed == 0 && rate >= 0.995;
        pass = pass && ok;
        json lab = json::object();
        for (const auto& [k, v] : labels) lab[k] = v;
        dims.push_back({{"dim", dim}, {"samples", drawn}, {"exact", exact}, {"numeric", numeric}, {"failed", failed},
                        {"exact_rate", round_to(rate)}, {"labels", lab}, {"irreducible", irreducible}, {"pass", ok}});
    }
    json unreached = json::array();
    for (const auto& r : t.e_table(c.tag))
        if (!reached.count(r.label)) unreached.push_back(r.label);
    return {{"dims", dims}, {"omitted_labels", omitted}, {"unreached_entries", unreached}, {"pass", pass}};
}

json separation_section(const AlgebraCase& c, const OptimalTables& t, const VerifyOptions& o) {
    const LieAlgebraQ e = reduction_algebra(c);
    Rng rng = section_rng(o, c, 101);
    auto sig_of = [&](const Representative& r, const ParamValues& p) {
        return signature(e, rows_span(r.instantiate_rational(p)));
    };
    auto status_of = [&](int trials, double floor) -> std::string {
        if (trials == 0) return "unresolved";
        if (floor >= o.separation_floor) return "separated";
        if (floor < 1e-6) return "conjugate";
        return "unresolved";
    };
    json dims = json::array();
    std::size_t unresolved = 0, certified = 0, certified_profile = 0, conjugate = 0;
    for (std::size_t dim = 1; dim <= 3; ++dim) {
        auto entries = t.table_for(c.tag, dim, TableBasis::e);
        std::vector<std::set<ConjugacySignature>> sigs(entries.size());
        std::vector<std::set<std::pair<ConjugacySignature, WeightProfile>>> profiles(entries.size());
        json sig_json = json::array();
        for (std::size_t i = 0; i < entries.size(); ++i) {
            for (const auto& p : probe_assignments(entries[i])) {
                Subspace s = rows_span(entries[i].instantiate_rational(p));
                auto sig = signature(e, s);
                sigs[i].insert(sig);
                profiles[i].insert({sig, weight_profile(c, s)});
            }
            json list = json::array();
            for (const auto& s : sigs[i]) list.push_back(s.str());
            sig_json.push_back({{"label", entries[i].label}, {"signatures", list}});
        }
        json collisions = json::array();
        for (std::size_t i = 0; i < entries.size(); ++i)
            for (std::size_t j = 0; j < entries.size(); ++j) {
                if (i == j) continue;
                std::vector<ConjugacySignature> common;
                std::set_intersection(sigs[i].begin(), sigs[i].end(), sigs[j].begin(), sigs[j].end(),
                                      std::back_inserter(common));
                if (common.empty()) {
                    if (i < j) ++certified;
                    continue;
                }
                std::vector<std::pair<ConjugacySignature, WeightProfile>> common_profile;
                std::set_intersection(profiles[i].begin(), profiles[i].end(), profiles[j].begin(),
                                      profiles[j].end(), std::back_inserter(common_profile));
                if (common_profile.empty()) {
                    if (i < j) ++certified_profile;
                    collisions.push_back({{"from", entries[i].label}, {"to", entries[j].label},
                                          {"status", "separated_by_profile"}});
                    continue;
                }
                double floor = std::numeric_limits<double>::infinity();
                int trials = 0;
                for (int attempt = 0; attempt < 50 * o.separation_pairs && trials < o.separation_pairs; ++attempt) {
                    ParamValues p = random_assignment(entries[i], rng);
                    Subspace s = rows_span(entries[i].instantiate_rational(p));
                    if (!profiles[j].count({signature(e, s), weight_profile(c, s)})) continue;
                    ++trials;
                    auto found = orbit_distance(c, to_eigen_rows(entries[i].instantiate_rational(p)), entries[j]);
                    floor = std::min(floor, found.distance);
                }
                const std::string status = status_of(trials, floor);
                if (status == "unresolved") ++unresolved;
                if (status == "conjugate") ++conjugate;
                collisions.push_back({{"from", entries[i].label}, {"to", entries[j].label}, {"trials", trials},
                                      {"floor", trials ? round_to(floor, 1e8) : 0.0}, {"status", status}});
            }
        json families = json::array();
        json sign_pairs = json::array();
        const Matrix<Rational> aut = sign_automorphism(c);
        const bool aut_ok = is_automorphism(e, aut);
        for (const auto& r : entries) {
            if (r.params.empty()) continue;
            double floor = std::numeric_limits<double>::infinity();
            int trials = 0;
            for (int attempt = 0; attempt < 50 * o.separation_pairs && trials < o.separation_pairs; ++attempt) {
                ParamValues p = random_assignment(r, rng), q = random_assignment(r, rng);
                if (r.has_param("a") && (p.a->abs().to_double() < 0.5 || q.a->abs().to_double() < 0.5)) continue;
                Matrix<Rational> sp = r.instantiate_rational(p), sq = r.instantiate_rational(q);
                if (sig_of(r, p) != sig_of(r, q)) continue;
                if (subspace_distance(to_eigen_rows(sp), to_eigen_rows(sq)) < 0.5) continue;
                ++trials;
                OrbitOptions fixed;
                fixed.fixed_params = to_numeric(q);
                floor = std::min(floor, orbit_distance(c, to_eigen_rows(sp), r, fixed).distance);
            }
            const std::string status = status_of(trials, floor);
            if (status == "unresolved") ++unresolved;
            if (status == "conjugate") ++conjugate;
            families.push_back({{"label", r.label}, {"trials", trials}, {"floor", trials ? round_to(floor, 1e8) : 0.0},
                                {"status", status}});

            if (!r.has_param("a")) continue;
            double sign_floor = std::numeric_limits<double>::infinity();
            bool by_automorphism = aut_ok;
            for (int n = 0; n < o.separation_pairs; ++n) {
                ParamValues p = random_assignment(r, rng);
                Rational a = bounded_rational(rng, 1, 4) / Rational(2);
                p.a = Surd(a);
                ParamValues q = p;
                q.a = Surd(-a);
                Matrix<Rational> sp = r.instantiate_rational(p);
                by_automorphism = by_automorphism && map_rows(aut, sp) == rows_span(r.instantiate_rational(q));
                OrbitOptions fixed;
                fixed.fixed_params = to_numeric(q);
                sign_floor = std::min(sign_floor, orbit_distance(c, to_eigen_rows(sp), r, fixed).distance);
            }
            sign_pairs.push_back({{"label", r.label}, {"trials", o.separation_pairs},
                                  {"floor", round_to(sign_floor, 1e8)},
                                  {"related_by_outer_automorphism", by_automorphism}});
        }
        dims.push_back({{"dim", dim}, {"signatures", sig_json}, {"collisions", collisions}, {"families", families},
                        {"sign_pairs", sign_pairs}});
    }
    return {{"dims", dims},
            {"certified_by_signature", certified},
            {"certified_by_profile", certified_profile},
            {"conjugate_found", conjugate},
            {"unresolved", unresolved},
            {"floor_threshold", o.separation_floor},
            {"generated", true}};
}

json discrepancy_section(const AlgebraCase& c, const OptimalTables& t, const json& coverage, const json& consistency,
                         const json& separation) {
    const LieAlgebraQ e = reduction_algebra(c);
    json out = json::array();

    // Table instances that the reducer moves elsewhere.
    struct Finding {
        std::size_t count = 0;
        json examples = json::array();
    };
    std::map<std::tuple<std::string, std::string, std::string>, Finding> findings;
    for (const auto& r : t.e_table(c.tag)) {
        for (const auto& p : probe_assignments(r)) {
            Subspace s = rows_span(r.instantiate_rational(p));
            if (!is_closed(e, s)) continue;
            ReductionResult red = reduce(c, Subalgebra::make(e, s));
            std::string kind;
            if (red.label != r.label) kind = "overlap";
            else if (!same_params(r, p, red.params)) kind = "redundant_parameter";
            else continue;
            auto& f = findings[{kind, r.label, red.label}];
            ++f.count;
            if (f.examples.size() < 3)
                f.examples.push_back({{"params", params_text(p)}, {"reduces_to", params_text(red.params)},
                                      {"word", red.word.str(e_labels())}});
        }
    }
    for (const auto& [key, f] : findings) {
        const auto& [kind, from, to] = key;
        std::string detail = kind == "overlap"
                                 ? "instances of " + from + " are conjugate to instances of " + to
                                 : "distinct parameter values of " + from + " give conjugate subalgebras";
        out.push_back({{"kind", kind}, {"severity", "warning"}, {"entry", from}, {"target", to},
                       {"count", f.count}, {"examples", f.examples}, {"detail", detail}});
    }

    // Coordinate lines that have no entry of their own.
    for (std::size_t i = 0; i < 4; ++i) {
        Vec<Rational> v(4, Rational(0));
        v[i] = Rational(1);
        ReductionResult red = reduce_1d(c, v);
        const Representative* rep = t.find(c.tag, red.label);
        if (rep && !rep->params.empty())
            out.push_back({{"kind", "absorbed"}, {"severity", "info"}, {"entry", red.label},
                           {"subalgebra", "{" + e_labels()[i] + "}"}, {"params", params_text(red.params)},
                           {"detail", "{" + e_labels()[i] + "} appears only as a special value of " + red.label}});
    }

    for (const auto& label : coverage.at("omitted_labels"))
        out.push_back({{"kind", "omission"}, {"severity", "error"}, {"entry", label},
                       {"detail", "random subalgebras reduce to a normal form missing from the table"}});
    for (const auto& label : coverage.at("unreached_entries"))
        out.push_back({{"kind", "unreached"}, {"severity", "info"}, {"entry", label},
                       {"detail", "no random sample reduced to this entry"}});
    if (coverage.at("omitted_labels").empty()) {
        std::size_t total = 0;
        for (const auto& d : coverage.at("dims")) total += d.at("samples").get<std::size_t>();
        out.push_back({{"kind", "completeness"}, {"severity", "info"}, {"entry", t.e_table_name(c.tag)},
                       {"detail", "no normal form outside the table in " + std::to_string(total) + " random subalgebras"}});
    }

    for (const auto& row : consistency.at("rows")) {
        const std::string status = row.at("status");
        if (status == "match") continue;
        json item{{"kind", status == "erratum_confirmed" ? "misprint" : "basis_mismatch"},
                  {"severity", status == "erratum_confirmed" ? "warning" : "error"},
                  {"entry", row.at("label")},
                  {"regime", consistency.at("regime")},
                  {"source", row.at("source")}};
        if (row.contains("corrected")) item["corrected"] = row.at("corrected");
        item["detail"] = row.value("note", "printed row is not the image of its source entry");
        out.push_back(item);
    }

    for (const auto& d : separation.at("dims"))
        for (const auto& sp : d.at("sign_pairs"))
            out.push_back({{"kind", "sign_pair"}, {"severity", "info"}, {"entry", sp.at("label")},
                           {"floor", sp.at("floor")},
                           {"related_by_outer_automorphism", sp.at("related_by_outer_automorphism")},
                           {"detail", "a and -a compared by orbit search; intent of the table is not asserted"}});

    if (c.tag == CaseTag::KHALF)
        out.push_back({{"kind", "shared_table"}, {"severity", "info"}, {"entry", t.e_table_name(c.tag)},
                       {"detail", "table shared with the open regimes, checked independently at alpha = -1"}});
    return out;
}

json verify_optimal_system(const AlgebraCase& c, const VerifyOptions& o) {
    if (o.samples < 1) throw Error("samples must be at least 1");
    const OptimalTables t = o.data_dir.empty() ? OptimalTables::bundled() : OptimalTables::load(o.data_dir);
    const LieAlgebraQ lv = original_algebra(c.k, o.data_dir);
    json closure = closure_section(c, t, lv);
    json consistency = consistency_section(c, t);
    json coverage = coverage_section(c, t, o);
    json separation = separation_section(c, t, o);
    json discrepancies = discrepancy_section(c, t, coverage, consistency, separation);
    bool errors = false;
    for (const auto& d : discrepancies) errors = errors || d.at("severity") == "error";
    const bool pass = closure.at("pass").get<bool>() && consistency.at("pass").get<bool>() &&
                      coverage.at("pass").get<bool>() && !errors;
    json report{{"schema", 1},
                {"command", "verify"},
                {"case", to_string(c.tag)},
                {"k", c.k.str()},
                {"standard", c.standard_name},
                {"table", t.e_table_name(c.tag)},
                {"options", {{"samples", o.samples}, {"tol", o.tol}, {"seed", o.seed}}},
                {"closure", closure},
                {"basis_consistency", consistency},
                {"coverage", coverage},
                {"separation", separation},
                {"discrepancies", discrepancies},
                {"pass", pass}};
    report["alpha"] = c.alpha ? json(c.alpha->str()) : json(nullptr);
    return report;
}

std::string render_report_text(const json& r) {
    std::ostringstream os;
    os << "case " << r.at("case").get<std::string>() << "  k = " << r.at("k").get<std::string>();
    if (!r.at("alpha").is_null()) os << "  alpha = " << r.at("alpha").get<std::string>();
    os << "  table " << r.at("table").get<std::string>() << "\n";
    const auto& cl = r.at("closure");
    std::size_t closed_entries = 0;
    for (const auto& e : cl.at("entries")) closed_entries += e.at("failures").empty() ? 1 : 0;
    os << "closure: " << (cl.at("pass").get<bool>() ? "PASS" : "FAIL") << " (" << closed_entries << "/"
       << cl.at("entries").size() << " entries, " << cl.at("original_basis").size() << " original-basis rows)";
    if (cl.contains("negative_control"))
        os << "; negative control " << cl.at("negative_control").at("label").get<std::string>() << " "
           << (cl.at("negative_control").at("rejected").get<bool>() ? "rejected" : "ACCEPTED");
    os << "\n";
    const auto& bc = r.at("basis_consistency");
    os << "basis consistency: " << (bc.at("pass").get<bool>() ? "PASS" : "FAIL") << " (" << bc.at("rows").size()
       << " rows)\n";
    const auto& cov = r.at("coverage");
    os << "coverage: " << (cov.at("pass").get<bool>() ? "PASS" : "FAIL") << "\n";
    for (const auto& d : cov.at("dims"))
        os << "  dim " << d.at("dim").get<int>() << ": " << d.at("exact").get<std::size_t>() << "/"
           << d.at("samples").get<std::size_t>() << " exact, " << d.at("numeric").get<std::size_t>() << " numeric, "
           << d.at("failed").get<std::size_t>() << " failed\n";
    const auto& sep = r.at("separation");
    os << "separation: " << sep.at("certified_by_signature").get<std::size_t>() << " pairs certified by signature, "
       << sep.at("certified_by_profile").get<std::size_t>() << " by weight profile, "
       << sep.at("conjugate_found").get<std::size_t>() << " conjugate, " << sep.at("unresolved").get<std::size_t>()
       << " unresolved\n";
    for (const auto& d : sep.at("dims")) {
        for (const auto& col : d.at("collisions")) {
            if (!col.contains("floor")) continue;
            os << "  collision " << col.at("from").get<std::string>() << " vs " << col.at("to").get<std::string>()
               << ": floor " << col.at("floor").get<double>() << " over " << col.at("trials").get<int>() << " trials, "
               << col.at("status").get<std::string>() << "\n";
        }
        for (const auto& f : d.at("families"))
            os << "  family " << f.at("label").get<std::string>() << ": floor " << f.at("floor").get<double>()
               << ", " << f.at("status").get<std::string>() << "\n";
    }
    os << "discrepancies:\n";
    for (const auto& d : r.at("discrepancies")) {
        os << "  [" << d.at("severity").get<std::string>() << "] " << d.at("kind").get<std::string>() << " "
           << d.at("entry").get<std::string>();
        if (d.contains("target")) os << " -> " << d.at("target").get<std::string>();
        if (d.contains("count")) os << " (" << d.at("count").get<std::size_t>() << " probes)";
        if (d.contains("floor")) os << " floor " << d.at("floor").get<double>();
        os << ": " << d.at("detail").get<std::string>() << "\n";
    }
    os << "result: " << (r.at("pass").get<bool>() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

}  // namespace liesym
