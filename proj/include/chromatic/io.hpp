#pragma once

#include <filesystem>
#include <string>

namespace chromatic {

// Shortest decimal that round-trips the double (printf %.17g with trailing
// precision trimmed). CSV cells produced from bit-identical doubles are
// therefore byte-identical.
std::string format_double(double v);

// Write via a sibling temp file and rename, so readers never observe a
// partially written artifact.
void write_file_atomic(const std::filesystem::path& path,
                       const std::string& content);

std::string read_file(const std::filesystem::path& path);

} // namespace chromatic
