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


#ifndef QE7_VERIFY_H
#define QE7_VERIFY_H

#include <string>
#include <string_view>
#include <vector>

namespace qe7 {

struct CheckResult {
    std::string id;
    bool passed = false;
    std::string expected;
    std::string actual;
};

struct VerificationReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool passed() const;
    void add(std::string id, bool passed, std::string expected, std::string actual);
    void expect_eq(std::string id, long long expected, long long actual);
    void expect_eq(std::string id, const std::string &expected, const std::string &actual);

    /// Aligned table, one check per line, then an overall line.
    std::string text() const;
    /// {"suite", "passed", "checks": [{"id", "status", "expected", "actual"}]}
    std::string json() const;
};

/// heisenberg, normalizer, coxeter, quadforms, tensors, hopf, e7, restriction, orders, all.
const std::vector<std::string> &suite_names();

/// Throws std::invalid_argument for an unknown suite. "all" concatenates every
/// suite with check ids prefixed by the suite name.
VerificationReport run_verify(std::string_view suite);

/// Golden restriction tables: rows of whitespace-separated fields, '#' comments skipped.
std::string_view golden_restriction_points();
std::string_view golden_restriction_lines();

}  // namespace qe7

#endif
