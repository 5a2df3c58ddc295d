#pragma once

#include <cstdint>
#include <json.hpp>
#include <string>
#include <vector>

#include "liesym/orbit.hpp"
#include "liesym/reduce.hpp"
#include "liesym/sampling.hpp"

namespace liesym {

struct VerifyOptions {
    std::size_t samples = 1000;
    double tol = 1e-8;
    std::uint64_t seed = 0;
    std::string data_dir;
    /// Random parameter pairs per signature collision, family and sign pair.
    int separation_pairs = 20;
    double separation_floor = 0.1;
};

/// Five assignments per entry: a in {0, 1, -2, 1/3, 5/2}, eps alternating, phi on exact points.
std::vector<ParamValues> closure_assignments(const Representative& r);
/// All combinations of a in {0, 1, -1, 2, -3/2}, eps = +-1 and the exact phi points.
std::vector<ParamValues> probe_assignments(const Representative& r);
/// Random rational assignment; a is 0 or +-1 with probability 1/4 each, phi on a rational point.
ParamValues random_assignment(const Representative& r, Rng& rng);

/// The algebra L(k) in the original generators, from L_paper.json.
LieAlgebraQ original_algebra(const Rational& k, const std::string& data_dir = "");

/// e-coordinates to v-coordinates of a row vector: x -> x B.
Vec<Rational> e_to_v(const AlgebraCase& c, const Vec<Rational>& x);

nlohmann::json closure_section(const AlgebraCase& c, const OptimalTables& t, const LieAlgebraQ& lv);
nlohmann::json consistency_section(const AlgebraCase& c, const OptimalTables& t);
nlohmann::json coverage_section(const AlgebraCase& c, const OptimalTables& t, const VerifyOptions& o);
nlohmann::json separation_section(const AlgebraCase& c, const OptimalTables& t, const VerifyOptions& o);
/// Redundancy, overlap, absorption, omission and misprint findings.
nlohmann::json discrepancy_section(const AlgebraCase& c, const OptimalTables& t, const nlohmann::json& coverage,
                                   const nlohmann::json& consistency, const nlohmann::json& separation);

/// Full report with schema 1. "pass" is true when closure, consistency and coverage pass.
nlohmann::json verify_optimal_system(const AlgebraCase& c, const VerifyOptions& o);
std::string render_report_text(const nlohmann::json& report);

}  // namespace liesym
