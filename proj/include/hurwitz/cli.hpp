#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hurwitz {

/// Parsed command-line request.  Exit codes: 0 success, 1 verification
/// failure or I/O error, 2 usage or bounds error.
struct RunConfig {
    std::string command;             // compute | table | verify
    std::string kind;                // compute/table subject
    std::string alpha;               // partition text form
    int genus = -1;                  // -1 = unset
    int r = -1;                      // -1 = unset
    std::string method;              // compute path selector
    bool all_methods = false;
    bool total = false;              // oracle kind: drop transitivity
    std::string mode = "monotone";   // oracle kind: monotone | classical | rank
    int d_max = 3;
    int genus_max = 0;
    int points = 1;
    int degree = 4;
    int weight = -1;                 // verify caps (-1 = suite default)
    int r_max = -1;
    int verify_d_max = -1;
    int verify_degree = -1;
    int bound_d = -1;                // oracle bound overrides
    int bound_r = -1;
    std::string format = "plain";    // csv | json | plain
    std::string cache_path;
    std::string suite = "all";
    bool stats = false;
};

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hurwitz
