// Copyright 2026 The Werner Diagrams Authors
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

#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace werner {

using Block = std::vector<int>;

/// A set partition of {1..n}, stored canonically: elements sorted within each
/// block and blocks sorted by their minimum.
///
/// Chord diagrams are partitions whose blocks all have two elements; polygon
/// diagrams are arbitrary partitions. Singleton blocks are allowed.
class Partition {
   public:
    Partition() = default;
    /// Validates coverage of {1..n} and canonicalizes. Throws std::invalid_argument.
    Partition(int n, std::vector<Block> blocks);

    static Partition singletons(int n);
    static Partition whole(int n);

    int n() const {
        return n_;
    }
    const std::vector<Block> &blocks() const {
        return blocks_;
    }
    size_t num_blocks() const {
        return blocks_.size();
    }
    bool is_matching() const;
    /// 0-based block index of element x (1-based).
    size_t block_of(int x) const;

    std::string to_string() const;

    auto operator<=>(const Partition &) const = default;

   private:
    int n_ = 0;
    std::vector<Block> blocks_;
};

/// A partition whose blocks all have exactly two elements.
class Matching {
   public:
    Matching() = default;
    explicit Matching(Partition p);

    int n() const {
        return partition_.n();
    }
    const Partition &partition() const {
        return partition_;
    }
    const std::vector<Block> &chords() const {
        return partition_.blocks();
    }
    std::string to_string() const {
        return partition_.to_string();
    }

    auto operator<=>(const Matching &) const = default;

   private:
    Partition partition_;
};

/// Parse error carrying the 0-based character offset of the offending token.
class ParseError : public std::invalid_argument {
   public:
    ParseError(size_t position, const std::string &what);
    size_t position() const {
        return position_;
    }
    /// Message without the position prefix.
    const std::string &detail() const {
        return detail_;
    }

   private:
    size_t position_;
    std::string detail_;
};

/// Parses "1 4 | 2 3". The ground set size is the number of elements, which
/// must be exactly {1..n}. When expected_n > 0 the size must match it.
Partition parse_partition(std::string_view text, int expected_n = 0);

/// Exact Catalan number (2m choose m)/(m+1). Throws for m > 35 (overflow).
uint64_t catalan(int m);

bool is_noncrossing(const Partition &p);

/// Non-crossing perfect matchings of {1..n} in canonical (lexicographic block
/// list) order. Throws for odd n.
std::vector<Matching> enumerate_noncrossing_matchings(int n);

/// Non-crossing partitions of {1..n} in canonical order.
std::vector<Partition> enumerate_noncrossing_partitions(int n);

/// Every perfect matching of {1..n}, crossing or not, in canonical order.
std::vector<Matching> enumerate_all_matchings(int n);

/// Finest partition that every input subdivides (the lattice glb).
Partition common_coarsening(std::span<const Partition> ps);

/// True iff every block of a lies inside a block of b.
bool refines(const Partition &a, const Partition &b);

/// Relabels points 2j-1 -> j and 2j -> j' and glues j with j'. The blocks of
/// the result are the connected components of the glued chord graph.
Partition glue_matching(const Matching &m);

}  // namespace werner
