#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace liesym {

namespace detail {
const std::map<std::string, std::string, std::less<>>& bundled_files();
}

/// Names of the bundled files, e.g. "L_paper.json", "tables/generic.json".
std::vector<std::string> bundled_file_names();

/// Reads `name` below `data_dir`, or the copy compiled into the library when
/// `data_dir` is empty. Throws Error when the file is missing.
std::string read_data_file(const std::string& data_dir, std::string_view name);

}  // namespace liesym
