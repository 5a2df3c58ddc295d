#include "liesym/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <ostream>

#include "liesym/data.hpp"
#include "liesym/verify.hpp"
#include "liesym/vector_field.hpp"

namespace liesym::cli {

using json = nlohmann::json;

namespace {

class UsageError : public Error {
public:
    using Error::Error;
};

std::string pretty_standard(std::string name) {
    auto replace = [&](const std::string& from, const std::string& to) {
        for (auto pos = name.find(from); pos != std::string::npos; pos = name.find(from, pos + to.size()))
            name.replace(pos, from.size(), to);
    };
    replace("alpha", "α");
    replace(" + ", " ⊕ ");
    return name;
}

Rational require_k(const CliConfig& c) {
    if (c.k.empty()) throw UsageError("--k is required for " + std::string(c.command == Command::verify ? "verify" : "this command"));
    return Rational::parse(c.k);
}

LieAlgebra algebra_file(const CliConfig& c) { return algebra_from_json(read_data_file(c.data_dir, "L_paper.json")); }

std::string alpha_text(const AlgebraCase& c) { return c.alpha ? c.alpha->str() : "none"; }

json matrix_json(const Matrix<Rational>& m) {
    json out = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& x : row) r.push_back(x.str());
        out.push_back(r);
    }
    return out;
}

json params_json(const ParamValues& p) {
    json out = json::object();
    if (p.a) out["a"] = p.a->str();
    if (p.eps) out["eps"] = std::to_string(*p.eps);
    if (p.cos) out["cos_phi"] = p.cos->str();
    if (p.sin) out["sin_phi"] = p.sin->str();
    return out;
}

void emit(const CliConfig& c, std::ostream& out, const json& j, const std::string& text) {
    if (c.format == Format::json)
        out << j.dump(2) << "\n";
    else
        out << text;
}

int cmd_classify(const CliConfig& c, std::ostream& out) {
    AlgebraCase ac = classify_k(require_k(c));
    const LieAlgebraQ e = to_standard_basis(algebra_file(c), ac).e_algebra;
    json j{{"schema", 1},
           {"command", "classify"},
           {"k", ac.k.str()},
           {"case", to_string(ac.tag)},
           {"alpha", ac.alpha ? json(ac.alpha->str()) : json(nullptr)},
           {"standard", pretty_standard(ac.standard_name)},
           {"table", OptimalTables::bundled().e_table_name(ac.tag)},
           {"basis_change", matrix_json(ac.basis_change)}};
    std::string text = "k = " + ac.k.str() + "\ncase: " + to_string(ac.tag) + "\nalpha: " + alpha_text(ac) +
                       "\nstandard form: " + pretty_standard(ac.standard_name) + "\n";
    std::vector<std::string> v_labels{"v1", "v2", "v3", "v4"};
    for (std::size_t i = 0; i < 4; ++i)
        text += "  " + e.labels()[i] + " = " + format_element(ac.basis_change[i], v_labels) + "\n";
    emit(c, out, j, text);
    return kExitOk;
}

int cmd_bracket(const CliConfig& c, std::ostream& out) {
    if (c.x.empty() || c.y.empty()) throw UsageError("bracket needs --x and --y");
    std::string result;
    const LieAlgebra l = algebra_file(c);
    if (c.basis == Basis::e) {
        AlgebraCase ac = classify_k(require_k(c));
        const LieAlgebraQ e = to_standard_basis(l, ac).e_algebra;
        result = format_element(e.bracket(parse_element(e, c.x), parse_element(e, c.y)), e.labels());
    } else if (!c.k.empty()) {
        const LieAlgebraQ lk = evaluate(l, Rational::parse(c.k));
        result = format_element(lk.bracket(parse_element(lk, c.x), parse_element(lk, c.y)), lk.labels());
    } else {
        result = format_element(l.bracket(parse_element(l, c.x), parse_element(l, c.y)), l.labels());
    }
    json j{{"schema", 1},      {"command", "bracket"}, {"k", c.k.empty() ? json(nullptr) : json(Rational::parse(c.k).str())},
           {"basis", c.basis == Basis::v ? "v" : "e"}, {"x", c.x}, {"y", c.y}, {"result", result}};
    emit(c, out, j, result + "\n");
    return kExitOk;
}

Vec<Rational> to_e_coordinates(const AlgebraCase& ac, const Vec<Rational>& v) {
    auto inv = inverse(ac.basis_change);
    if (!inv) throw Error("singular basis change");
    Vec<Rational> x(4, Rational(0));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) x[j] += v[i] * (*inv)[i][j];
    return x;
}

int cmd_reduce(const CliConfig& c, std::ostream& out) {
    if (c.vectors.empty()) throw UsageError("reduce needs at least one --vector");
    AlgebraCase ac = classify_k(require_k(c));
    const LieAlgebraQ e = reduction_algebra(ac);
    const OptimalTables tables = OptimalTables::load(c.data_dir);
    Matrix<Rational> rows;
    for (const auto& text : c.vectors) {
        Vec<Rational> v = parse_vector(text, 4);
        rows.push_back(c.basis == Basis::v ? to_e_coordinates(ac, v) : v);
    }
    Subspace span = Subspace::span(rows, 4);
    if (span.dim() != rows.size()) throw UsageError("the vectors are linearly dependent");
    if (span.dim() == 0) throw ZeroVector("cannot reduce the zero vector");
    Subalgebra s = Subalgebra::make(e, span);
    ReductionResult r = reduce(ac, s);
    const Representative* rep = tables.find(ac.tag, r.label);
    if (!rep) throw Error("reduction produced a label outside the table: " + r.label);

    std::string certificate;
    try {
        certificate = certify_reduction(ac, span, r, *rep) ? "exact" : "failed";
    } catch (const IncommensurableSurds&) {
        Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()), 4);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < 4; ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j].to_double();
        certificate = orbit_distance(ac, m, *rep).distance < c.tol ? "numeric" : "failed";
    }
    std::string original;
    for (const auto& oe : tables.regime(ac.tag).entries)
        if (oe.source == r.label) original = oe.effective().label;

    json j{{"schema", 1},
           {"command", "reduce"},
           {"k", ac.k.str()},
           {"case", to_string(ac.tag)},
           {"input", format_subspace(span, e_labels())},
           {"label", r.label},
           {"original_label", original},
           {"dim", r.dim_sub},
           {"params", params_json(r.params)},
           {"word", r.word.str(e_labels())},
           {"certificate", certificate}};
    std::string text = "input (e-basis): " + format_subspace(span, e_labels()) + "\nrepresentative: " + r.label;
    if (!r.params.str().empty()) text += " with " + r.params.str();
    text += "\noriginal basis: " + original + "\nword: " + (r.word.empty() ? "identity" : r.word.str(e_labels())) +
            "\ncertificate: " + certificate + "\n";
    emit(c, out, j, text);
    return certificate == "failed" ? kExitFailure : kExitOk;
}

std::string symbolic_alpha_text() { return "(k-1)/k for k > 1/2, k/(k-1) for k < 1/2, -1 at k = 1/2"; }

int cmd_tables(const CliConfig& c, std::ostream& out) {
    const OptimalTables tables = OptimalTables::load(c.data_dir);
    std::optional<AlgebraCase> ac;
    if (!c.k.empty()) ac = classify_k(Rational::parse(c.k));
    std::string table_case = c.table_case;
    std::optional<CaseTag> regime;
    if (ac) {
        regime = ac->tag;
        table_case = tables.e_table_name(ac->tag);
    } else if (table_case.empty() || table_case == "generic") {
        table_case = "generic";
    } else if (table_case != "k0_k1") {
        try {
            regime = case_tag_from_string(table_case);
        } catch (const Error&) {
            throw UsageError("unknown --case " + table_case + "; use generic, k0_k1 or a regime tag");
        }
        table_case = tables.e_table_name(*regime);
    }
    if (c.basis == Basis::v && !regime) {
        if (c.basis_explicit) throw UsageError("--basis v needs --k or a regime tag in --case");
        CliConfig e_config = c;
        e_config.basis = Basis::e;
        return cmd_tables(e_config, out);
    }

    std::string relations;
    json alpha;
    if (table_case == "generic") {
        std::string a = ac ? alpha_text(*ac) : regime == CaseTag::KHIGH ? "(k-1)/k"
                                           : regime == CaseTag::KLOW ? "k/(k-1)"
                                           : regime == CaseTag::KHALF ? "-1" : symbolic_alpha_text();
        alpha = a;
        relations = "[e1,e3] = e1, [e2,e3] = alpha e2, alpha = " + a;
    } else {
        relations = "[e1,e2] = e2";
    }

    json entries = json::array();
    std::string text = "table " + table_case + (c.basis == Basis::v ? " (original basis)" : "") + "\n" + relations + "\n";
    auto add = [&](const Representative& r, json extra) {
        if (c.dim && r.dim_sub != c.dim) return;
        json item{{"label", r.label}, {"dim", r.dim_sub}, {"params", r.params}, {"generators", r.generator_text}};
        item.update(extra);
        entries.push_back(item);
        text += "  [" + std::to_string(r.dim_sub) + "] " + r.label;
        if (extra.contains("printed")) text += "   (printed " + extra.at("printed").get<std::string>() + ")";
        text += "\n";
    };
    if (c.basis == Basis::e) {
        for (const auto& r : tables.e_table(regime ? *regime : table_case == "generic" ? CaseTag::KHIGH : CaseTag::K0))
            add(r, json::object());
    } else {
        const OriginalRegime& reg = tables.regime(*regime);
        text += "regime " + to_string(reg.tag) + ": " + reg.k_range + "\n";
        for (const auto& oe : reg.entries) {
            json extra{{"source", oe.source}, {"a_scale", oe.a_scale.str()}};
            if (oe.corrected) {
                extra["printed"] = oe.printed.label;
                extra["erratum"] = oe.erratum_note;
            }
            add(oe.effective(), extra);
        }
    }
    json j{{"schema", 1},
           {"command", "tables"},
           {"table", table_case},
           {"basis", c.basis == Basis::v ? "v" : "e"},
           {"k", ac ? json(ac->k.str()) : json(nullptr)},
           {"regime", regime ? json(to_string(*regime)) : json(nullptr)},
           {"relations", relations},
           {"alpha", alpha},
           {"entries", entries}};
    emit(c, out, j, text);
    return kExitOk;
}

int cmd_verify(const CliConfig& c, std::ostream& out) {
    AlgebraCase ac = classify_k(require_k(c));
    VerifyOptions o;
    o.samples = c.samples;
    o.tol = c.tol;
    o.seed = c.seed;
    o.data_dir = c.data_dir;
    json report = verify_optimal_system(ac, o);
    emit(c, out, report, render_report_text(report));
    return report.at("pass").get<bool>() ? kExitOk : kExitFailure;
}

template <class T>
json jacobi_json(const JacobiReport& r, const BasicLieAlgebra<T>& l) {
    json j{{"ok", r.ok}, {"triples_checked", r.triples_checked}};
    if (r.violation)
        j["violation"] = {{"i", l.labels()[r.violation->i]},
                          {"j", l.labels()[r.violation->j]},
                          {"k", l.labels()[r.violation->k]},
                          {"p", l.labels()[r.violation->p]},
                          {"value", r.violation->value}};
    return j;
}

int cmd_jacobi(const CliConfig& c, std::ostream& out) {
    const LieAlgebra l = algebra_file(c);
    json result;
    std::string scope;
    if (c.basis == Basis::e) {
        AlgebraCase ac = classify_k(require_k(c));
        const LieAlgebraQ e = to_standard_basis(l, ac).e_algebra;
        result = jacobi_json(check_jacobi(e), e);
        scope = "e-basis at k = " + ac.k.str();
    } else if (!c.k.empty()) {
        const LieAlgebraQ lk = evaluate(l, Rational::parse(c.k));
        result = jacobi_json(check_jacobi(lk), lk);
        scope = "v-basis at k = " + Rational::parse(c.k).str();
    } else {
        result = jacobi_json(check_jacobi(l), l);
        scope = "v-basis, symbolic in k";
        RealizationReport rr = verify_realization(symmetry_generators(), l);
        result["realization"] = rr.ok;
        result["ok"] = result["ok"].get<bool>() && rr.ok;
    }
    json j{{"schema", 1}, {"command", "jacobi"}, {"scope", scope}};
    j.update(result);
    const bool ok = j.at("ok").get<bool>();
    std::string text = "jacobi (" + scope + "): " + (ok ? "holds" : "FAILS") + " over " +
                       std::to_string(j.at("triples_checked").get<std::size_t>()) + " triples\n";
    if (j.contains("realization"))
        text += std::string("vector field realization: ") + (j.at("realization").get<bool>() ? "holds" : "FAILS") + "\n";
    if (j.contains("violation")) {
        const auto& v = j.at("violation");
        text += "  witness (" + v.at("i").get<std::string>() + ", " + v.at("j").get<std::string>() + ", " +
                v.at("k").get<std::string>() + ") component " + v.at("p").get<std::string>() + ": " +
                v.at("value").get<std::string>() + "\n";
    }
    emit(c, out, j, text);
    return ok ? kExitOk : kExitFailure;
}

bool is_input_error(const Error& e) {
    return dynamic_cast<const UsageError*>(&e) || dynamic_cast<const ParseError*>(&e) ||
           dynamic_cast<const DimensionMismatch*>(&e) || dynamic_cast<const ZeroVector*>(&e) ||
           dynamic_cast<const NotClosed*>(&e) || dynamic_cast<const PoleAtK*>(&e) ||
           dynamic_cast<const DivisionByZero*>(&e);
}

}  // namespace

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
    try {
        switch (config.command) {
            case Command::classify: return cmd_classify(config, out);
            case Command::bracket: return cmd_bracket(config, out);
            case Command::reduce: return cmd_reduce(config, out);
            case Command::tables: return cmd_tables(config, out);
            case Command::verify: return cmd_verify(config, out);
            case Command::jacobi: return cmd_jacobi(config, out);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return is_input_error(e) ? kExitUsage : kExitFailure;
    }
    return kExitUsage;
}

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Optimal systems of subalgebras for the algebras L(k)", "liesym"};
    app.require_subcommand(1);
    CliConfig config;
    const std::map<std::string, Basis> bases{{"v", Basis::v}, {"e", Basis::e}};
    const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}};

    auto common = [&](CLI::App* sub) {
        sub->add_option("--k", config.k, "parameter k as an exact rational, e.g. 3/4");
        sub->add_option("--basis", config.basis, "basis of inputs and outputs")->transform(CLI::CheckedTransformer(bases));
        sub->add_option("--format", config.format, "output format")->transform(CLI::CheckedTransformer(formats));
        sub->add_option("--data-dir", config.data_dir, "directory with L_paper.json and tables/ (default: bundled)");
    };
    const std::vector<std::pair<Command, std::string>> commands{
        {Command::classify, "classify"}, {Command::bracket, "bracket"}, {Command::reduce, "reduce"},
        {Command::tables, "tables"},     {Command::verify, "verify"},   {Command::jacobi, "jacobi"}};
    std::map<std::string, CLI::App*> subs;
    subs["classify"] = app.add_subcommand("classify", "isomorphism class and standard basis of L(k)");
    subs["bracket"] = app.add_subcommand("bracket", "bracket of two elements");
    subs["reduce"] = app.add_subcommand("reduce", "reduce a subalgebra to its table representative");
    subs["tables"] = app.add_subcommand("tables", "print an optimal system table");
    subs["verify"] = app.add_subcommand("verify", "verify the optimal system of L(k)");
    subs["jacobi"] = app.add_subcommand("jacobi", "check the Jacobi identity");
    for (auto& [name, sub] : subs) common(sub);
    subs["bracket"]->add_option("--x", config.x, "first element, e.g. v2 or 2*v1 + v3");
    subs["bracket"]->add_option("--y", config.y, "second element");
    subs["reduce"]->add_option("--vector", config.vectors, "generator as comma separated rationals, repeatable");
    subs["tables"]->add_option("--case", config.table_case, "generic, k0_k1 or a regime tag");
    subs["tables"]->add_option("--dim", config.dim, "only entries of this dimension")->check(CLI::Range(1, 3));
    subs["verify"]->add_option("--samples", config.samples, "random subalgebras per dimension");
    subs["verify"]->add_option("--tol", config.tol, "numeric tolerance");
    subs["verify"]->add_option("--seed", config.seed, "random seed");
    subs["reduce"]->add_option("--tol", config.tol, "numeric tolerance");

    std::vector<std::string> args(argv.begin() + (argv.empty() ? 0 : 1), argv.end());
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }
    for (const auto& [cmd, name] : commands)
        if (subs[name]->parsed()) {
            config.command = cmd;
            config.basis_explicit = subs[name]->count("--basis") > 0;
        }
    return run(config, out, err);
}

}  // namespace liesym::cli
