#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace multsidon {

// Newline-delimited decimal integers. '#' starts a comment; blank lines are
// skipped. Throws std::invalid_argument naming the offending line.
std::vector<std::uint64_t> read_set(std::istream& in);
std::vector<std::uint64_t> read_set_file(const std::string& path);

void write_set(std::ostream& out, std::span<const std::uint64_t> elements);

} // namespace multsidon
