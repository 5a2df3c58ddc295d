#include "liesym/data.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "liesym/error.hpp"

namespace liesym {

std::vector<std::string> bundled_file_names() {
    std::vector<std::string> out;
    for (const auto& [name, _] : detail::bundled_files()) out.push_back(name);
    return out;
}

std::string read_data_file(const std::string& data_dir, std::string_view name) {
    if (data_dir.empty()) {
        const auto& files = detail::bundled_files();
        auto it = files.find(name);
        if (it == files.end()) throw Error("no bundled data file " + std::string(name));
        return it->second;
    }
    std::filesystem::path p = std::filesystem::path(data_dir) / std::string(name);
    std::ifstream in(p);
    if (!in) throw Error("cannot read " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace liesym
