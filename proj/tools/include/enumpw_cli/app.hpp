#pragma once

#include <string>
#include <vector>

namespace enumpw::cli {

struct Outcome {
    int exit_code = 0;   // 0 pass, 1 check failure, 2 usage or precision error
    std::string output;  // report text (JSON or CSV)
    std::string error;   // diagnostics and help text
};

// Arguments exclude the program name. With --output the report is also written
// to that path, relative paths resolved against $ENUMPW_OUTPUT_DIR when set.
Outcome run(const std::vector<std::string>& args);

}  // namespace enumpw::cli
