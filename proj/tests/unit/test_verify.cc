// Copyright 2026 The qe7 Authors
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


#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "json.hpp"
#include "qe7/verify.h"

using namespace qe7;

TEST(Report, ExpectEqAndRendering) {
    VerificationReport r;
    r.suite = "demo";
    r.expect_eq("count", 3, 3);
    r.expect_eq("name", std::string("a"), std::string("b"));
    EXPECT_FALSE(r.passed());
    ASSERT_EQ(r.checks.size(), 2u);
    EXPECT_TRUE(r.checks[0].passed);
    EXPECT_EQ(r.checks[1].actual, "b");
    auto j = nlohmann::json::parse(r.json());
    EXPECT_EQ(j["suite"], "demo");
    EXPECT_EQ(j["passed"], false);
    EXPECT_EQ(j["checks"][1]["status"], "fail");
    EXPECT_NE(r.text().find("name"), std::string::npos);
}

TEST(Report, UnknownSuiteThrows) {
    EXPECT_THROW(run_verify("nope"), std::invalid_argument);
    EXPECT_THROW(run_verify(""), std::invalid_argument);
}

class SuiteTest : public ::testing::TestWithParam<std::string> {};

TEST_P(SuiteTest, Passes) {
    VerificationReport r = run_verify(GetParam());
    EXPECT_EQ(r.suite, GetParam());
    EXPECT_FALSE(r.checks.empty());
    std::set<std::string> ids;
    for (const auto &c : r.checks) {
        EXPECT_TRUE(c.passed) << c.id << " expected " << c.expected << " got " << c.actual;
        EXPECT_TRUE(ids.insert(c.id).second) << "duplicate id " << c.id;
    }
}

INSTANTIATE_TEST_SUITE_P(Verify, SuiteTest,
                         ::testing::Values("heisenberg", "normalizer", "coxeter", "quadforms", "tensors", "hopf",
                                           "e7", "restriction", "orders"));

TEST(Report, SuiteNamesEndWithAll) {
    const auto &names = suite_names();
    ASSERT_EQ(names.size(), 10u);
    EXPECT_EQ(names.back(), "all");
}

TEST(Golden, TablesParse) {
    auto rows = [](std::string_view text) {
        std::istringstream in{std::string(text)};
        std::string line;
        std::vector<std::vector<std::string>> out;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') {
                continue;
            }
            std::istringstream fields(line);
            std::vector<std::string> f;
            std::string s;
            while (fields >> s) {
                f.push_back(s);
            }
            out.push_back(f);
        }
        return out;
    };
    auto points = rows(golden_restriction_points());
    ASSERT_EQ(points.size(), 7u);
    for (const auto &p : points) {
        EXPECT_EQ(p.size(), 3u);
    }
    auto lines = rows(golden_restriction_lines());
    ASSERT_EQ(lines.size(), 7u);
    for (const auto &l : lines) {
        EXPECT_EQ(l.size(), 4u);
        EXPECT_EQ(l[0].size(), 3u);
    }
}
