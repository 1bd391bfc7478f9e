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

#include "qe7/group_closure.h"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>

namespace qe7 {

unsigned worker_threads() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const char *env = std::getenv("QE7_THREADS");
    if (env == nullptr || *env == '\0') {
        return hw;
    }
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), value);
    if (ec != std::errc() || *ptr != '\0' || value == 0) {
        return 1;
    }
    return value;
}

namespace {

uint64_t mix(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

FlatKeyIndex::FlatKeyIndex() {
    keys_.assign(16, 0);
    values_.assign(16, kEmpty);
    mask_ = 15;
}

std::size_t FlatKeyIndex::slot_of(uint64_t key) const {
    std::size_t slot = mix(key) & mask_;
    while (values_[slot] != kEmpty && keys_[slot] != key) {
        slot = (slot + 1) & mask_;
    }
    return slot;
}

std::optional<std::size_t> FlatKeyIndex::find(uint64_t key) const {
    std::size_t slot = slot_of(key);
    if (values_[slot] == kEmpty) {
        return std::nullopt;
    }
    return values_[slot];
}

bool FlatKeyIndex::insert(uint64_t key, std::size_t index) {
    if (2 * (size_ + 1) > keys_.size()) {
        grow();
    }
    std::size_t slot = slot_of(key);
    if (values_[slot] != kEmpty) {
        return false;
    }
    keys_[slot] = key;
    values_[slot] = static_cast<uint32_t>(index);
    size_++;
    return true;
}

void FlatKeyIndex::reserve(std::size_t n) {
    while (keys_.size() < 2 * n) {
        grow();
    }
}

void FlatKeyIndex::grow() {
    std::vector<uint64_t> old_keys = std::move(keys_);
    std::vector<uint32_t> old_values = std::move(values_);
    keys_.assign(old_keys.size() * 2, 0);
    values_.assign(old_keys.size() * 2, kEmpty);
    mask_ = keys_.size() - 1;
    for (std::size_t i = 0; i < old_keys.size(); i++) {
        if (old_values[i] != kEmpty) {
            std::size_t slot = slot_of(old_keys[i]);
            keys_[slot] = old_keys[i];
            values_[slot] = old_values[i];
        }
    }
}

}  // namespace qe7
