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


#include "smoothprep/csv.h"

#include <cstdlib>
#include <limits>
#include <string>

#include <gtest/gtest.h>

namespace smoothprep {
namespace {

TEST(FormatRealTest, ShortestRoundTrip) {
  EXPECT_EQ(format_real(0.1), "0.1");
  EXPECT_EQ(format_real(2.0), "2");
  EXPECT_EQ(format_real(-0.25), "-0.25");
  EXPECT_EQ(format_real(0.1 + 0.2), "0.30000000000000004");
  EXPECT_EQ(format_real(1e-300), "1e-300");
  for (double v : {1.0 / 3, 6.02214076e23, -1e-17, std::numeric_limits<double>::denorm_min()}) {
    EXPECT_EQ(std::strtod(format_real(v).c_str(), nullptr), v);
  }
}

TEST(CsvTest, JoinAndSplit) {
  EXPECT_EQ(join_csv({"a", "b", "", "c"}), "a,b,,c");
  const auto f = split_csv("a,b,,c");
  ASSERT_EQ(f.size(), 4u);
  EXPECT_EQ(f[0], "a");
  EXPECT_EQ(f[2], "");
  EXPECT_EQ(f[3], "c");
  EXPECT_EQ(split_csv("").size(), 1u);
}

}  // namespace
}  // namespace smoothprep
