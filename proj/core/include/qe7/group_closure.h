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

#ifndef QE7_GROUP_CLOSURE_H
#define QE7_GROUP_CLOSURE_H

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <thread>
#include <type_traits>
#include <unordered_map>
#include <utility>
#include <vector>

namespace qe7 {

/// Worker count for internal parallel loops: QE7_THREADS if set, else the
/// hardware concurrency. Always at least 1.
unsigned worker_threads();

/// Open-addressing map from 64-bit keys to element indices.
class FlatKeyIndex {
   public:
    FlatKeyIndex();

    std::optional<std::size_t> find(uint64_t key) const;
    /// Returns false if the key was already present.
    bool insert(uint64_t key, std::size_t index);
    std::size_t size() const {
        return size_;
    }
    void reserve(std::size_t n);

   private:
    static constexpr uint32_t kEmpty = std::numeric_limits<uint32_t>::max();
    std::size_t slot_of(uint64_t key) const;
    void grow();

    std::vector<uint64_t> keys_;
    std::vector<uint32_t> values_;
    std::size_t size_ = 0;
    std::size_t mask_ = 0;
};

template <typename Key>
class HashKeyIndex {
   public:
    std::optional<std::size_t> find(const Key &key) const {
        auto it = map_.find(key);
        if (it == map_.end()) {
            return std::nullopt;
        }
        return it->second;
    }
    bool insert(const Key &key, std::size_t index) {
        return map_.emplace(key, index).second;
    }
    std::size_t size() const {
        return map_.size();
    }
    void reserve(std::size_t n) {
        map_.reserve(n);
    }

   private:
    std::unordered_map<Key, std::size_t> map_;
};

template <typename Key>
using KeyIndex = std::conditional_t<std::is_same_v<Key, uint64_t>, FlatKeyIndex, HashKeyIndex<Key>>;

/// The finite group generated by a set of generators, enumerated breadth first.
///
/// Traits supplies Element, Generator, Key, key(element) and
/// multiply(element, generator). Keys must be injective on elements.
template <typename Traits>
class GroupCatalog {
   public:
    using Element = typename Traits::Element;
    using Generator = typename Traits::Generator;
    using Key = typename Traits::Key;

    std::size_t order() const {
        return elements_.size();
    }
    const std::vector<Element> &elements() const {
        return elements_;
    }
    const std::vector<Generator> &generators() const {
        return generators_;
    }
    bool contains(const Element &e) const {
        return index_.find(Traits::key(e)).has_value();
    }
    std::optional<std::size_t> index_of(const Element &e) const {
        return index_.find(Traits::key(e));
    }

    template <typename T>
    friend GroupCatalog<T> close_group(const typename T::Element &identity, std::vector<typename T::Generator> gens,
                                       std::size_t reserve_hint);

   private:
    std::vector<Element> elements_;
    std::vector<Generator> generators_;
    KeyIndex<Key> index_;
};

/// Closes {identity} under right multiplication by the generators.
///
/// Elements appear in breadth-first insertion order: level by level, and
/// within a level by (parent index, generator index). Large levels are
/// expanded on worker_threads() threads; candidates are merged in that same
/// order so the catalog never depends on the thread count.
template <typename Traits>
GroupCatalog<Traits> close_group(const typename Traits::Element &identity, std::vector<typename Traits::Generator> gens,
                                 std::size_t reserve_hint = 0) {
    using Element = typename Traits::Element;
    GroupCatalog<Traits> cat;
    cat.generators_ = std::move(gens);
    if (reserve_hint != 0) {
        cat.elements_.reserve(reserve_hint);
        cat.index_.reserve(reserve_hint);
    }
    cat.elements_.push_back(identity);
    cat.index_.insert(Traits::key(identity), 0);

    const auto &generators = cat.generators_;
    const std::size_t num_gens = generators.size();
    const unsigned threads = worker_threads();
    constexpr std::size_t kParallelThreshold = 1 << 14;

    std::size_t level_begin = 0;
    while (level_begin < cat.elements_.size()) {
        const std::size_t level_end = cat.elements_.size();
        const std::size_t level_size = level_end - level_begin;

        if (threads > 1 && level_size * num_gens >= kParallelThreshold) {
            // The index is only read while workers run.
            std::vector<std::vector<Element>> found(threads);
            std::vector<std::thread> pool;
            const std::size_t chunk = (level_size + threads - 1) / threads;
            for (unsigned t = 0; t < threads; t++) {
                pool.emplace_back([&, t]() {
                    std::size_t lo = level_begin + t * chunk;
                    std::size_t hi = std::min(level_end, lo + chunk);
                    for (std::size_t i = lo; i < hi; i++) {
                        for (const auto &g : generators) {
                            Element p = Traits::multiply(cat.elements_[i], g);
                            if (!cat.index_.find(Traits::key(p))) {
                                found[t].push_back(std::move(p));
                            }
                        }
                    }
                });
            }
            for (auto &th : pool) {
                th.join();
            }
            for (auto &bucket : found) {
                for (auto &p : bucket) {
                    if (cat.index_.insert(Traits::key(p), cat.elements_.size())) {
                        cat.elements_.push_back(std::move(p));
                    }
                }
            }
        } else {
            for (std::size_t i = level_begin; i < level_end; i++) {
                for (const auto &g : generators) {
                    Element p = Traits::multiply(cat.elements_[i], g);
                    if (cat.index_.insert(Traits::key(p), cat.elements_.size())) {
                        cat.elements_.push_back(std::move(p));
                    }
                }
            }
        }
        level_begin = level_end;
    }
    return cat;
}

}  // namespace qe7

#endif
