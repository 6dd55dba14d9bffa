#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "multsidon/ledger.hpp"

namespace multsidon {

enum class OutputFormat { Json, Csv, Text };

OutputFormat parse_format(const std::string& name);

struct RunConfig {
    std::string command;

    std::uint64_t n = 100;
    std::uint64_t sieve_limit = 0;  // 0: MULTSIDON_SIEVE_LIMIT, else whatever the command needs
    OutputFormat format = OutputFormat::Json;
    std::uint64_t seed = 1;
    std::uint64_t budget = 50'000'000;
    unsigned workers = 1;
    BoundConstants constants;

    // input set: a file, or one of base | greedy | exact | random
    std::string set_file;
    std::string construction;
    std::size_t random_size = 0;

    unsigned k = 3;                    // verify
    bool list = false;                 // decompose: one line per m
    std::string graph_out;             // encode: edge list destination
    std::uint64_t g0_floor = 10000;    // ledger
    std::uint64_t x = 0;               // census; 0 means n
    unsigned i_min = 0, i_max = 14;    // census
    bool exact = false, greedy = false;
    std::string objective = "sidon";   // search: sidon | square-free
    unsigned max_order = 9;            // extremal, general graphs
    unsigned max_class = 5;            // extremal, bipartite classes
    std::vector<std::uint64_t> bound_ns;  // bounds; empty means {n}
};

// Flat key=value lines ('#' comments). Keys match the long flag names.
// Throws std::invalid_argument on unknown keys or bad values.
void apply_config(RunConfig& config, std::istream& in);
void apply_config_file(RunConfig& config, const std::string& path);

// Exit status: 0 success, 1 a verification failure was found, 2 invalid input.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Deterministic sample of `size` distinct values from 1..n, ascending.
std::vector<std::uint64_t> random_subset(std::uint64_t n, std::size_t size, std::uint64_t seed);

} // namespace multsidon
