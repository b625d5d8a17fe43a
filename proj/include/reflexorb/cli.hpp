#pragma once

#include "reflexorb/lattice_vector.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace reflexorb {

inline constexpr const char* tool_version = "0.1.0";

enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 1,
    exit_not_reflexive = 2,
    exit_not_simplicial = 3,
    exit_parse_error = 4,
    exit_hypothesis = 5,
};

struct RunConfig {
    std::string command;
    std::optional<std::string> input_path;
    std::optional<std::vector<std::uint64_t>> weights;
    bool dual = false;           // input file holds Δ (in M) instead of Δ°
    bool interior_only = false;  // `points`: only interior lattice points
    std::uint64_t seed = 1;
    bool force = false;          // evaluate Hodge formulas for n < 4
    std::string format = "json"; // json | tsv
    unsigned dilate = 1;
};

struct RunResult {
    int exit_code = exit_ok;
    std::string out;
    std::string err;
};

/// Executes one subcommand. Output is either complete or empty; errors go to
/// `err` with the matching exit code.
RunResult run(const RunConfig& config);

/// Hex SHA-256 of the lexicographically sorted vertex matrix.
std::string input_hash(std::span<const LatticeVector> vertices);

const std::vector<std::string>& subcommands();

}  // namespace reflexorb
