#pragma once

#include <string>
#include <string_view>

namespace kcr {

/// Hex-encoded SHA-256 of a byte string.
std::string sha256_hex(std::string_view data);

/// Hex-encoded SHA-256 of a file's contents. Throws on I/O failure.
std::string sha256_file_hex(const std::string& path);

}  // namespace kcr
