#include "multsidon/setio.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace multsidon {

std::vector<std::uint64_t> read_set(std::istream& in) {
    std::vector<std::uint64_t> out;
    std::string line;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos)
            continue;
        const auto last = line.find_last_not_of(" \t\r");
        const char* begin = line.data() + first;
        const char* end = line.data() + last + 1;
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc() || ptr != end)
            throw std::invalid_argument("line " + std::to_string(lineno) + ": not a decimal integer: '" +
                                        std::string(begin, end) + "'");
        out.push_back(value);
    }
    return out;
}

std::vector<std::uint64_t> read_set_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open set file '" + path + "'");
    return read_set(in);
}

void write_set(std::ostream& out, std::span<const std::uint64_t> elements) {
    for (std::uint64_t a : elements)
        out << a << '\n';
}

} // namespace multsidon
