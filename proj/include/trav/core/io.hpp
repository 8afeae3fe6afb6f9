#pragma once

#include <filesystem>
#include <string>

namespace trav::core {

// Writes via a temp file in the same directory then renames, so readers
// never observe a truncated artifact.
void atomic_write(const std::filesystem::path& path, const std::string& data);

std::string read_file(const std::filesystem::path& path);

// "%.17g" round-trip formatting shared by every report writer.
std::string format_double(double v);

}  // namespace trav::core
