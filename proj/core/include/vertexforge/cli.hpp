#pragma once

#include <string>
#include <vector>

namespace vf {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;       // usage, I/O, validation
inline constexpr int kExitIntegrality = 3; // theorem counterexample report

/**
 * @brief One batch run: a single source, truncation bounds, class map, output
 *        format, and worker count.  All commands are pure string-in/string-out
 *        so they can run in-process.
 */
struct RunConfig {
    std::string preset;          ///< "name" or "name:p1,p2,..."
    std::string graph_path;
    std::string fan_path;
    std::vector<int> max_degree; ///< componentwise bound; empty means unset
    long max_total_degree = -1;  ///< -1 means unset
    std::string class_map = "sum"; ///< "sum", "identity", or a JSON file path
    std::string output = "text";   ///< text | json | csv
    int threads = 1;
    int weight_bound = 2; ///< crosscheck partition weight, at most 3
    bool gv_only = false; ///< restrict compute output to the invariant tables
};

struct RunResult {
    std::string out;
    std::string err;
    int exit_code = 0;
};

/// list the built-in graph presets
RunResult cmd_presets(const RunConfig& cfg);

/**
 * @brief Full pipeline on one graph: partition coefficients, their logarithm,
 *        the multicover-stripped coefficients, and the integer invariant
 *        tables by degree and by class.  Output is byte-identical across runs
 *        and thread counts.
 */
RunResult cmd_compute(const RunConfig& cfg);

/// construct a graph from a fan file and emit its JSON
RunResult cmd_from_fan(const RunConfig& cfg);

/// compare the series evaluator against the mode-operator oracle on all
/// partition triples up to the weight bound
RunResult cmd_crosscheck(const RunConfig& cfg);

/// run the built-in verification suite; nonzero exit on any failure
RunResult cmd_selftest(const RunConfig& cfg);

} // namespace vf
