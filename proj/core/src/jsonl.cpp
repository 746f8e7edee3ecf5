#include "claimforge/jsonl.hpp"

#include "claimforge/errors.hpp"

#include <atomic>
#include <fstream>
#include <sstream>

namespace claimforge {

namespace fs = std::filesystem;

std::vector<ordered_json> read_jsonl(const fs::path & path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot open " + path.string());
    }
    std::vector<ordered_json> rows;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) {
            continue;
        }
        try {
            rows.push_back(ordered_json::parse(line));
        } catch (const nlohmann::json::exception & ex) {
            throw ConfigError(path.string() + ":" + std::to_string(lineno) +
                              ": bad JSON line: " + ex.what());
        }
    }
    return rows;
}

void write_file_atomic(const fs::path & path, std::string_view content) {
    static std::atomic<uint64_t> counter{0};
    if (path.has_parent_path()) {
        fs::create_directories(path.parent_path());
    }
    fs::path tmp = path;
    tmp += ".tmp" + std::to_string(counter.fetch_add(1));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw ConfigError("cannot write " + tmp.string());
        }
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) {
            throw ConfigError("short write to " + tmp.string());
        }
    }
    fs::rename(tmp, path);
}

void write_jsonl(const fs::path & path, const std::vector<ordered_json> & rows) {
    std::ostringstream out;
    for (const auto & row : rows) {
        out << row.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace) << '\n';
    }
    write_file_atomic(path, out.str());
}

std::string read_file(const fs::path & path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot open " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace claimforge
