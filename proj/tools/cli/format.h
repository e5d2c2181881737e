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

#ifndef IDC_CLI_FORMAT_H
#define IDC_CLI_FORMAT_H

#include <optional>
#include <string>
#include <vector>

namespace idc::cli {

/// Shortest decimal that round-trips to the same double, capped at 15
/// significant digits. Negative zero prints as "0".
std::string format_number(double value);

/// The double nearest to format_number(value).
double rounded(double value);

/// Writes comma-separated cells; missing values become empty cells.
std::string csv_row(const std::vector<std::string> &cells);
std::string csv_cell(std::optional<double> value);

}  // namespace idc::cli

#endif
