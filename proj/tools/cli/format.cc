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

#include "cli/format.h"

#include <charconv>
#include <cmath>
#include <system_error>

namespace idc::cli {

std::string format_number(double value) {
    if (value == 0) {
        return "0";
    }
    if (std::isnan(value)) {
        return "nan";
    }
    if (std::isinf(value)) {
        return value > 0 ? "inf" : "-inf";
    }
    char buf[64];
    constexpr int kMaxDigits = 15;
    for (int digits = 1; digits <= kMaxDigits; digits++) {
        auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, digits);
        double parsed = 0;
        std::from_chars(buf, end, parsed);
        if (parsed == value || digits == kMaxDigits) {
            return std::string(buf, end);
        }
    }
    return {};
}

double rounded(double value) {
    std::string text = format_number(value);
    double parsed = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), parsed);
    if (ec != std::errc()) {
        return value;
    }
    return parsed;
}

std::string csv_row(const std::vector<std::string> &cells) {
    std::string out;
    for (size_t i = 0; i < cells.size(); i++) {
        if (i > 0) {
            out += ',';
        }
        out += cells[i];
    }
    out += '\n';
    return out;
}

std::string csv_cell(std::optional<double> value) {
    return value ? format_number(*value) : std::string();
}

}  // namespace idc::cli
