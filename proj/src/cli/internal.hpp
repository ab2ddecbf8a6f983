#pragma once

#include <string>

#include "sympow/cli.hpp"

namespace sympow::cli {

bool is_help_request(const UsageError& e);

std::string read_file(const std::filesystem::path& path);

}  // namespace sympow::cli
