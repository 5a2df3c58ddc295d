#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace liesym::cli {

enum class Command { classify, bracket, reduce, tables, verify, jacobi };
enum class Basis { v, e };
enum class Format { text, json };

struct CliConfig {
    Command command = Command::classify;
    std::string k;
    Basis basis = Basis::v;
    /// False when --basis was not given; tables then falls back to the e-basis without a regime.
    bool basis_explicit = false;
    Format format = Format::text;
    std::size_t samples = 1000;
    double tol = 1e-8;
    std::uint64_t seed = 0;
    std::string x, y;
    std::vector<std::string> vectors;
    std::string table_case;
    std::size_t dim = 0;
    std::string data_dir;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Parses argv and runs the command; argv[0] is the program name.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);
/// Runs an already parsed configuration.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

}  // namespace liesym::cli
