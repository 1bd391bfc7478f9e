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

#include <array>
#include <cstdlib>
#include <set>

#include "generators.h"
#include "qe7/group_closure.h"

using namespace qe7;
using qe7::testing::Gen;

namespace {

// Permutations of {0..n-1} packed 4 bits per point.
struct PackedPermTraits {
    using Element = uint64_t;
    using Generator = uint64_t;
    using Key = uint64_t;
    static Key key(uint64_t p) {
        return p;
    }
    static uint64_t multiply(uint64_t a, uint64_t g) {
        uint64_t out = 0;
        for (int i = 0; i < 12; i++) {
            uint64_t gi = (g >> (4 * i)) & 15;
            out |= ((a >> (4 * gi)) & 15) << (4 * i);
        }
        return out;
    }
};

struct StringPermTraits {
    using Element = std::string;
    using Generator = std::string;
    using Key = std::string;
    static Key key(const std::string &p) {
        return p;
    }
    static std::string multiply(const std::string &a, const std::string &g) {
        std::string out(a.size(), ' ');
        for (std::size_t i = 0; i < a.size(); i++) {
            out[i] = a[g[i] - 'a'];
        }
        return out;
    }
};

uint64_t packed(const std::vector<int> &images) {
    uint64_t out = 0;
    for (int i = 0; i < 12; i++) {
        uint64_t v = i < static_cast<int>(images.size()) ? images[i] : i;
        out |= v << (4 * i);
    }
    return out;
}

}  // namespace

TEST(FlatKeyIndex, InsertFindAndGrow) {
    FlatKeyIndex index;
    Gen g(40);
    std::set<uint64_t> inserted;
    for (int t = 0; t < 5000; t++) {
        uint64_t key = static_cast<uint64_t>(g.uniform(0, 1 << 20)) * 2654435761ULL;
        bool fresh = inserted.insert(key).second;
        EXPECT_EQ(index.insert(key, inserted.size() - 1), fresh);
    }
    EXPECT_EQ(index.size(), inserted.size());
    for (uint64_t key : inserted) {
        EXPECT_TRUE(index.find(key).has_value());
    }
    EXPECT_FALSE(index.find(3).has_value() && !inserted.count(3));
}

TEST(CloseGroup, SymmetricGroupsFromCoxeterGenerators) {
    long long factorial = 1;
    for (int n = 2; n <= 8; n++) {
        factorial *= n;
        std::vector<uint64_t> gens;
        for (int i = 0; i + 1 < n; i++) {
            std::vector<int> images(12);
            for (int j = 0; j < 12; j++) {
                images[j] = j;
            }
            std::swap(images[i], images[i + 1]);
            gens.push_back(packed(images));
        }
        auto cat = close_group<PackedPermTraits>(packed({}), gens);
        EXPECT_EQ(static_cast<long long>(cat.order()), factorial);
        EXPECT_TRUE(cat.contains(packed({}))) << n;
    }
}

TEST(CloseGroup, HashedKeysAndCycleGenerator) {
    auto cat = close_group<StringPermTraits>("abcdefg", {"bcdefga"});
    EXPECT_EQ(cat.order(), 7u);
    auto dihedral = close_group<StringPermTraits>("abcdefg", {"bcdefga", "agfedcb"});
    EXPECT_EQ(dihedral.order(), 14u);
    EXPECT_EQ(dihedral.index_of("abcdefg"), std::size_t{0});
    EXPECT_FALSE(dihedral.contains("bacdefg"));
}

TEST(CloseGroup, ThreadCountDoesNotChangeResult) {
    std::vector<uint64_t> gens = {packed({1, 0}), packed({1, 2, 3, 4, 5, 6, 7, 8, 0})};
    setenv("QE7_THREADS", "1", 1);
    EXPECT_EQ(worker_threads(), 1u);
    auto serial = close_group<PackedPermTraits>(packed({}), gens);
    setenv("QE7_THREADS", "4", 1);
    EXPECT_EQ(worker_threads(), 4u);
    auto parallel = close_group<PackedPermTraits>(packed({}), gens);
    unsetenv("QE7_THREADS");
    EXPECT_EQ(serial.order(), 362880u);
    EXPECT_EQ(parallel.order(), serial.order());
    EXPECT_EQ(parallel.elements(), serial.elements());
    setenv("QE7_THREADS", "zero", 1);
    EXPECT_EQ(worker_threads(), 1u);
    unsetenv("QE7_THREADS");
}
