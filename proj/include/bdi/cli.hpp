#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bdi/quiver.hpp"

namespace bdi {

struct RunConfig {
    std::string command;
    std::string preset;
    std::string file;
    bool json = false;
    bool strict = false;
    bool details = false;
    int max_cells = 32;
    std::size_t facet_cap = 10'000'000;
    int threads = 1;
    std::uint64_t seed = 1;
    int random = 0;          // verify: extra random instances
    int samples = 100;       // vdc-sample
    std::string flavor = "m2";
    std::uint64_t generator_cap = 100'000;
};

/// Builds an instance from a preset string:
///   det:m,n,u                 one arrow 2->1, m = (m, n), u = (u, u)
///   double:r,m,n,u,v          r parallel arrows 2->1, m = (m, n), u = (u, v)
///   secant:a,b,t              double:2,a,b,t,t
///   star:(m0,u0),(m1,u1),...  sources 2, 3, ... each with one arrow into 1
///   star-example              star:(3,2),(2,1),(2,1),(2,1)
Instance parse_preset(const std::string& spec, BuildMode mode);

/// Parses command-line arguments. Returns nothing when the parser already
/// handled the request (help output or a usage error); `exit_code` is set.
std::optional<RunConfig> parse_args(int argc, char** argv, int& exit_code);

/// Executes one subcommand. Returns the process exit status: 0 success,
/// 1 verification failure, 2 invalid input, 3 resource limit.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace bdi
