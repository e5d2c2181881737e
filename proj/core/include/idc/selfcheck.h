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

#ifndef IDC_SELFCHECK_H
#define IDC_SELFCHECK_H

#include <cstdint>
#include <string>
#include <vector>

namespace idc {

struct SelfCheckOptions {
    uint64_t seed = 20190514;
    size_t n = 1000;
    // Multiplies every tolerance. Only tests set this; a negative value makes
    // every suite fail.
    double tolerance_scale = 1;
};

struct SuiteResult {
    std::string name;
    size_t cases = 0;
    double worst = 0;      // worst residual, or violation count for boolean suites
    double tolerance = 0;  // after scaling
    bool passed = false;
};

/// Runs the invariant and oracle suites with seeded random inputs.
std::vector<SuiteResult> run_self_checks(const SelfCheckOptions &options);

}  // namespace idc

#endif
