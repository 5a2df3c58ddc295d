#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "liesym/classify.hpp"
#include "liesym/param_scalar.hpp"
#include "liesym/surd.hpp"

namespace liesym {

/// coeff * a^a_pow * eps^eps_pow * cos(phi)^cos_pow * sin(phi)^sin_pow * basis element.
struct SlotTerm {
    Rational coeff{1};
    double coeff_value = 1.0;
    int a_pow = 0;
    int eps_pow = 0;
    int cos_pow = 0;
    int sin_pow = 0;
    std::size_t basis = 0;
};

using SlotElement = std::vector<SlotTerm>;

/// Parses "e1 + eps*cos*e3 - 2*a*e4" against the given basis labels.
SlotElement parse_slot_element(std::string_view text, const std::vector<std::string>& labels);

/// Exact values of the free parameters. phi is carried as the pair (cos phi, sin phi).
struct ParamValues {
    std::optional<Surd> a;
    std::optional<int> eps;
    std::optional<Surd> cos;
    std::optional<Surd> sin;

    [[nodiscard]] std::string str() const;
    friend bool operator==(const ParamValues&, const ParamValues&) = default;
};

struct NumericParams {
    double a = 0.0;
    double eps = 1.0;
    double phi = 0.0;
};

NumericParams to_numeric(const ParamValues& p);

struct Representative {
    std::string label;
    std::size_t dim_sub = 0;
    /// Subset of {"a", "eps", "phi"}.
    std::vector<std::string> params;
    std::vector<std::string> generator_text;
    std::vector<SlotElement> generators;
    std::size_t ambient_dim = 4;

    [[nodiscard]] bool has_param(std::string_view p) const;
    /// Throws Error when a used parameter is unset.
    [[nodiscard]] Matrix<Surd> instantiate(const ParamValues& p) const;
    /// Throws NonRationalPower when an entry is irrational.
    [[nodiscard]] Matrix<Rational> instantiate_rational(const ParamValues& p) const;
    /// Rows are the instantiated generators.
    [[nodiscard]] Eigen::MatrixXd instantiate_numeric(const NumericParams& p) const;
};

/// Row of the original-basis table, with the corrected form when the printed one is wrong.
struct OriginalEntry {
    Representative printed;
    std::optional<Representative> corrected;
    std::string erratum_note;
    /// Label of the e-basis entry this row transports.
    std::string source;
    /// The row's a equals a_scale(k) times the a of the source entry.
    ParamScalar a_scale{1};

    [[nodiscard]] const Representative& effective() const { return corrected ? *corrected : printed; }
};

struct OriginalRegime {
    CaseTag tag;
    std::optional<Rational> k;
    std::string k_range;
    std::string source_table;
    std::vector<OriginalEntry> entries;
};

enum class TableBasis { e, v };

class OptimalTables {
public:
    /// Loads tables/generic.json, tables/k0_k1.json and tables/original_basis.json.
    static OptimalTables load(const std::string& data_dir = "");
    static const OptimalTables& bundled();

    /// E-basis table of the regime: generic for KLOW, KHALF, KHIGH, k0_k1 for K0, K1.
    [[nodiscard]] const std::vector<Representative>& e_table(CaseTag tag) const;
    [[nodiscard]] std::string e_table_name(CaseTag tag) const;
    [[nodiscard]] const OriginalRegime& regime(CaseTag tag) const;
    [[nodiscard]] const std::vector<OriginalRegime>& regimes() const { return regimes_; }

    /// Entries of the given dimension; the v-basis variant uses corrected rows.
    [[nodiscard]] std::vector<Representative> table_for(CaseTag tag, std::size_t dim_sub, TableBasis basis) const;
    [[nodiscard]] const Representative* find(CaseTag tag, std::string_view label) const;

private:
    std::vector<Representative> generic_;
    std::vector<Representative> k0_k1_;
    std::vector<OriginalRegime> regimes_;
};

Representative parse_representative(const std::string& label, std::size_t dim_sub,
                                    const std::vector<std::string>& params,
                                    const std::vector<std::string>& generators,
                                    const std::vector<std::string>& labels);

/// Exact points on the half circle used for phi: 0, pi/2, pi and a few rational points.
std::vector<std::pair<Rational, Rational>> exact_phi_points();

}  // namespace liesym
