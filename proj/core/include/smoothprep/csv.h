// Copyright 2026 The smoothprep Authors
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

#ifndef SMOOTHPREP_CSV_H_
#define SMOOTHPREP_CSV_H_

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace smoothprep {

/// Shortest decimal that round-trips to the same double. Locale-independent.
std::string format_real(double value);

std::string join_csv(std::initializer_list<std::string> fields);

/// Splits one line on commas. No quoting: none of the schemas here need it.
std::vector<std::string_view> split_csv(std::string_view line);

}  // namespace smoothprep

#endif  // SMOOTHPREP_CSV_H_
