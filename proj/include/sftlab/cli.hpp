#pragma once

#include <optional>
#include <string>

#include "sftlab/family.hpp"
#include "sftlab/rational.hpp"

namespace sft {

struct SessionConfig {
    Rational lambda0 = Rational(1, 2);
    // Explicit command-line overrides; bundle files carry their own
    // descriptor which these take precedence over.
    std::optional<Index> radius, tails, periods;
    bool structured = false;
};

struct CmdResult {
    int exit_code = 0;  // 0 pass, 1 verification failure, 2 input error
    std::string output;
};

CmdResult cmd_matrix_info(const std::string& matrix_path, const SessionConfig& cfg);
CmdResult cmd_equiv(const std::string& matrix_path, const std::string& point_x,
                    const std::string& point_z, const SessionConfig& cfg);
CmdResult cmd_limits(const std::string& matrix_path, const std::string& point,
                     const SessionConfig& cfg);
CmdResult cmd_verify(const std::string& bundle_path, const SessionConfig& cfg);

}  // namespace sft
