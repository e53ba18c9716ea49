#include "lk/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lk {

std::string content_hash(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

void atomic_write(const std::filesystem::path& path, const std::string& content) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot open for writing: " + tmp.string());
        }
        out << content;
        if (!out) {
            throw std::runtime_error("write failed: " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path);
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string render_kv(const std::map<std::string, std::string>& kv) {
    std::ostringstream os;
    for (const auto& [k, v] : kv) {
        os << k << " = " << v << "\n";
    }
    return os.str();
}

std::string render_columns(const std::vector<std::string>& header_lines,
                           const std::vector<Column>& columns) {
    std::ostringstream os;
    for (const auto& line : header_lines) {
        os << "# " << line << "\n";
    }
    os << "#";
    for (const auto& col : columns) {
        os << "\t" << col.name;
    }
    os << "\n";
    std::size_t rows = 0;
    for (const auto& col : columns) rows = std::max(rows, col.values.size());
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if (c > 0) os << "\t";
            os << (i < columns[c].values.size() ? format_double(columns[c].values[i]) : "");
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace lk
