#pragma once

// File emission helpers: every writer goes through write_file_atomic
// (write to <path>.tmp, then rename), so a failing command never leaves a
// partial output behind.

#include <filesystem>
#include <string>

namespace snn {

void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

} // namespace snn
