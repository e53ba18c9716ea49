#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "lk/types.hpp"

namespace lk {

// FNV-1a 64-bit content hash, hex-encoded.
std::string content_hash(const std::string& data);

// Write-then-rename so partially written artifacts are never observed.
void atomic_write(const std::filesystem::path& path, const std::string& content);

std::string format_double(double v);

// Flat key-value block, keys sorted, one "key = value" per line.
std::string render_kv(const std::map<std::string, std::string>& kv);

struct Column {
    std::string name;
    std::vector<double> values;
};

// Columnar text: '#' header lines, then tab-separated rows.
std::string render_columns(const std::vector<std::string>& header_lines,
                           const std::vector<Column>& columns);

}  // namespace lk
