#pragma once

#include <string>
#include <string_view>

#include "hallmark/group.hpp"

namespace hallmark {

/// Parses the group file format:
///   {"name": str, "degree": int, "generators": [[int, ...], ...]}
/// with 1-based images. Errors carry a JSON path such as "generators[2][7]".
PermutationGroup parseGroupFile(std::string_view text);

PermutationGroup loadGroupFile(const std::string& path);

/// Inverse of parseGroupFile (1-based images, compact JSON, trailing newline).
std::string writeGroupFile(const PermutationGroup& group);

std::string readTextFile(const std::string& path);

}  // namespace hallmark
