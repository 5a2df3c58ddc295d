#include "liesym/tables.hpp"

#include <cmath>
#include <json.hpp>

#include "liesym/data.hpp"

namespace liesym {

using json = nlohmann::json;

namespace {

std::string trim(std::string_view s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

SlotTerm parse_term(const std::string& text, bool negative, const std::vector<std::string>& labels) {
    SlotTerm t;
    if (negative) t.coeff = Rational(-1);
    bool have_basis = false;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t star = text.find('*', start);
        std::string f = trim(text.substr(start, star == std::string::npos ? std::string::npos : star - start));
        if (f.empty()) throw ParseError("empty factor in '" + text + "'");
        if (f == "a") {
            ++t.a_pow;
        } else if (f == "eps") {
            ++t.eps_pow;
        } else if (f == "cos") {
            ++t.cos_pow;
        } else if (f == "sin") {
            ++t.sin_pow;
        } else if (std::isdigit(static_cast<unsigned char>(f[0]))) {
            t.coeff = t.coeff * Rational::parse(f);
        } else {
            auto it = std::find(labels.begin(), labels.end(), f);
            if (it == labels.end()) throw ParseError("unknown basis label '" + f + "'");
            if (have_basis) throw ParseError("two basis labels in '" + text + "'");
            t.basis = static_cast<std::size_t>(it - labels.begin());
            have_basis = true;
        }
        if (star == std::string::npos) break;
        start = star + 1;
    }
    if (!have_basis) throw ParseError("term without basis label: '" + text + "'");
    t.coeff_value = t.coeff.to_double();
    return t;
}

Surd surd_pow(const Surd& x, int n) {
    Surd out(1);
    for (int i = 0; i < n; ++i) out *= x;
    return out;
}

const Surd& need(const std::optional<Surd>& v, const char* name) {
    if (!v) throw Error(std::string("parameter ") + name + " is not set");
    return *v;
}

Representative representative_from_json(const json& e, const std::vector<std::string>& labels) {
    return parse_representative(e.at("label").get<std::string>(), e.at("dim").get<std::size_t>(),
                                e.at("params").get<std::vector<std::string>>(),
                                e.at("generators").get<std::vector<std::string>>(), labels);
}

json parse_json(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(what + ": " + e.what());
    }
}

}  // namespace

SlotElement parse_slot_element(std::string_view text, const std::vector<std::string>& labels) {
    SlotElement out;
    std::string cur;
    bool negative = false;
    auto flush = [&] {
        std::string t = trim(cur);
        if (!t.empty()) out.push_back(parse_term(t, negative, labels));
        cur.clear();
    };
    for (char c : text) {
        if (c == '+' || c == '-') {
            if (!trim(cur).empty()) {
                flush();
                negative = false;
            }
            if (c == '-') negative = !negative;
            continue;
        }
        cur += c;
    }
    flush();
    if (out.empty()) throw ParseError("empty element '" + std::string(text) + "'");
    return out;
}

std::string ParamValues::str() const {
    std::string out;
    auto add = [&](const std::string& s) {
        if (!out.empty()) out += ", ";
        out += s;
    };
    if (a) add("a=" + a->str());
    if (eps) add("eps=" + std::to_string(*eps));
    if (cos && sin) add("cos phi=" + cos->str() + ", sin phi=" + sin->str());
    return out;
}

NumericParams to_numeric(const ParamValues& p) {
    NumericParams n;
    if (p.a) n.a = p.a->to_double();
    if (p.eps) n.eps = *p.eps;
    if (p.cos && p.sin) n.phi = std::atan2(p.sin->to_double(), p.cos->to_double());
    return n;
}

bool Representative::has_param(std::string_view p) const {
    return std::find(params.begin(), params.end(), p) != params.end();
}

Matrix<Surd> Representative::instantiate(const ParamValues& p) const {
    Matrix<Surd> rows;
    for (const auto& g : generators) {
        Vec<Surd> row(ambient_dim, Surd(0));
        for (const auto& t : g) {
            Surd c(t.coeff);
            if (t.a_pow) c *= surd_pow(need(p.a, "a"), t.a_pow);
            if (t.eps_pow) {
                if (!p.eps) throw Error("parameter eps is not set");
                if (t.eps_pow % 2 == 1 && *p.eps < 0) c = -c;
            }
            if (t.cos_pow) c *= surd_pow(need(p.cos, "phi"), t.cos_pow);
            if (t.sin_pow) c *= surd_pow(need(p.sin, "phi"), t.sin_pow);
            row[t.basis] += c;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix<Rational> Representative::instantiate_rational(const ParamValues& p) const {
    Matrix<Rational> out;
    for (const auto& row : instantiate(p)) {
        Vec<Rational> r;
        for (const auto& x : row) r.push_back(x.to_rational());
        out.push_back(std::move(r));
    }
    return out;
}

Eigen::MatrixXd Representative::instantiate_numeric(const NumericParams& p) const {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(generators.size()),
                                              static_cast<Eigen::Index>(ambient_dim));
    const double c = std::cos(p.phi), s = std::sin(p.phi);
    for (std::size_t i = 0; i < generators.size(); ++i)
        for (const auto& t : generators[i]) {
            double v = t.coeff_value;
            for (int i = 0; i < t.a_pow; ++i) v *= p.a;
            if (t.eps_pow % 2 == 1) v *= p.eps;
            for (int i = 0; i < t.cos_pow; ++i) v *= c;
            for (int i = 0; i < t.sin_pow; ++i) v *= s;
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(t.basis)) += v;
        }
    return m;
}

Representative parse_representative(const std::string& label, std::size_t dim_sub,
                                    const std::vector<std::string>& params,
                                    const std::vector<std::string>& generators,
                                    const std::vector<std::string>& labels) {
    Representative r;
    r.label = label;
    r.dim_sub = dim_sub;
    r.params = params;
    r.generator_text = generators;
    r.ambient_dim = labels.size();
    for (const auto& p : params)
        if (p != "a" && p != "eps" && p != "phi") throw ParseError("unknown parameter '" + p + "' in " + label);
    for (const auto& g : generators) r.generators.push_back(parse_slot_element(g, labels));
    if (r.generators.size() != dim_sub) throw ParseError("entry " + label + " has the wrong number of generators");
    return r;
}

OptimalTables OptimalTables::load(const std::string& data_dir) {
    OptimalTables t;
    auto load_e = [&](const char* name, std::vector<Representative>& out) {
        json j = parse_json(read_data_file(data_dir, name), name);
        auto labels = j.at("basis_labels").get<std::vector<std::string>>();
        for (const auto& e : j.at("entries")) out.push_back(representative_from_json(e, labels));
    };
    try {
        load_e("tables/generic.json", t.generic_);
        load_e("tables/k0_k1.json", t.k0_k1_);
        json j = parse_json(read_data_file(data_dir, "tables/original_basis.json"), "tables/original_basis.json");
        auto labels = j.at("basis_labels").get<std::vector<std::string>>();
        for (const auto& r : j.at("regimes")) {
            OriginalRegime reg;
            reg.tag = case_tag_from_string(r.at("case").get<std::string>());
            if (r.contains("k")) reg.k = Rational::parse(r.at("k").get<std::string>());
            reg.k_range = r.value("k_range", reg.k ? "k = " + reg.k->str() : "");
            reg.source_table = r.at("source_table").get<std::string>();
            for (const auto& e : r.at("entries")) {
                OriginalEntry oe;
                oe.printed = representative_from_json(e, labels);
                oe.source = e.at("source").get<std::string>();
                oe.a_scale = ParamScalar::parse(e.value("a_scale", "1"));
                if (e.contains("erratum")) {
                    const auto& er = e.at("erratum");
                    oe.corrected = parse_representative(er.at("label").get<std::string>(), oe.printed.dim_sub,
                                                        oe.printed.params,
                                                        er.at("generators").get<std::vector<std::string>>(), labels);
                    oe.erratum_note = er.value("note", "");
                }
                reg.entries.push_back(std::move(oe));
            }
            t.regimes_.push_back(std::move(reg));
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("table JSON: ") + e.what());
    }
    return t;
}

const OptimalTables& OptimalTables::bundled() {
    static const OptimalTables t = load("");
    return t;
}

const std::vector<Representative>& OptimalTables::e_table(CaseTag tag) const {
    return (tag == CaseTag::K0 || tag == CaseTag::K1) ? k0_k1_ : generic_;
}

std::string OptimalTables::e_table_name(CaseTag tag) const {
    return (tag == CaseTag::K0 || tag == CaseTag::K1) ? "k0_k1" : "generic";
}

const OriginalRegime& OptimalTables::regime(CaseTag tag) const {
    for (const auto& r : regimes_)
        if (r.tag == tag) return r;
    throw Error("no original-basis regime for " + to_string(tag));
}

std::vector<Representative> OptimalTables::table_for(CaseTag tag, std::size_t dim_sub, TableBasis basis) const {
    std::vector<Representative> out;
    if (basis == TableBasis::e) {
        for (const auto& r : e_table(tag))
            if (r.dim_sub == dim_sub) out.push_back(r);
    } else {
        for (const auto& e : regime(tag).entries)
            if (e.printed.dim_sub == dim_sub) out.push_back(e.effective());
    }
    return out;
}

const Representative* OptimalTables::find(CaseTag tag, std::string_view label) const {
    for (const auto& r : e_table(tag))
        if (r.label == label) return &r;
    return nullptr;
}

std::vector<std::pair<Rational, Rational>> exact_phi_points() {
    return {{Rational(1), Rational(0)},
            {Rational(0), Rational(1)},
            {Rational(-1), Rational(0)},
            {Rational(3, 5), Rational(4, 5)},
            {Rational(-5, 13), Rational(12, 13)}};
}

}  // namespace liesym
