// Copyright 2026 The idcoherence Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef IDC_CLI_COMMANDS_H
#define IDC_CLI_COMMANDS_H

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cli/config.h"
#include "idc/selfcheck.h"

namespace idc::cli {

enum ExitCode : int {
    kExitSuccess = 0,
    kExitCheckFailure = 1,
    kExitConfigError = 2,
    kExitDegenerate = 3,
};

enum class Format { Csv, Json };

/// Each command writes its report to `out` and returns the process exit code.
/// Errors propagate as exceptions; run_cli maps them onto exit codes.
int cmd_project(const ScenarioConfig &config, Format format, std::ostream &out);
int cmd_discriminate(const ScenarioConfig &config, Format format, std::ostream &out);
int cmd_sweep(const ScenarioConfig &config, Format format, std::ostream &out);
int cmd_check(const SelfCheckOptions &options, std::ostream &out);

/// Full command-line entry point; args excludes the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace idc::cli

#endif
