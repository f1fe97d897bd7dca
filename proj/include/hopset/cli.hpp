#ifndef HOPSET_CLI_HPP
#define HOPSET_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hopset {

// Exit codes of hopctl.
enum ExitCode : int { kExitOk = 0, kExitValidation = 2, kExitConfig = 3, kExitSolver = 4 };

struct RunConfig {
    std::string command;
    std::string graph_path;
    std::string hopset_path;
    std::string oracle_path;
    std::string td_path;
    std::string out_path;

    // gen
    std::string kind = "path";
    std::size_t n = 0, m = 0, rows = 0, cols = 0, branching = 2, legs = 2;
    std::int64_t max_weight = 0;

    std::string method;  // tree, treewidth, skeleton, lp, lp3
    int h = 3;
    bool h_given = false;
    bool linear = false;
    std::uint64_t seed = 1;
    std::optional<double> size_bound;
    std::optional<double> dprime;
    std::optional<double> epsilon;
    std::optional<std::size_t> max_levels;
    std::string alpha = "1/2";
    bool subdivide = false;
    unsigned threads = 0;
    std::size_t sample = 10000;
    bool json = false;
    bool unsafe = false;
    std::vector<std::size_t> sizes;  // bench / stats
    std::vector<int> hs;             // stats
};

// Rejects parameter combinations that do not fit the method; returns the
// problem, or an empty string.
std::string check_config(const RunConfig& cfg);

/// Entry point of hopctl. Reads queries from `in`, reports to `out`,
/// diagnostics to `err`; returns the exit code.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace hopset

#endif  // HOPSET_CLI_HPP
