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

#include "werner/diagrams.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace werner {

namespace {

class UnionFind {
   public:
    explicit UnionFind(int n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent_[std::max(a, b)] = std::min(a, b);
        }
    }

   private:
    std::vector<int> parent_;
};

// Blocks of elements 1..n grouped by union-find representative.
Partition components(int n, UnionFind &uf) {
    std::vector<Block> by_root(n);
    for (int x = 1; x <= n; x++) {
        by_root[uf.find(x - 1)].push_back(x);
    }
    std::vector<Block> blocks;
    for (auto &b : by_root) {
        if (!b.empty()) {
            blocks.push_back(std::move(b));
        }
    }
    return Partition(n, std::move(blocks));
}

// Non-crossing partitions of the consecutive labels lo..hi (inclusive).
std::vector<std::vector<Block>> noncrossing_segment(int lo, int hi) {
    if (lo > hi) {
        return {{}};
    }
    std::vector<std::vector<Block>> out;
    int span = hi - lo;
    // Choose which later labels share a block with lo; the gaps between
    // consecutive chosen labels, and the tail after the last one, are
    // partitioned independently.
    for (uint32_t mask = 0; mask < (uint32_t{1} << span); mask++) {
        Block head{lo};
        for (int k = 0; k < span; k++) {
            if (mask & (uint32_t{1} << k)) {
                head.push_back(lo + 1 + k);
            }
        }
        std::vector<std::vector<Block>> partial{{head}};
        auto extend = [&](int a, int b) {
            auto pieces = noncrossing_segment(a, b);
            std::vector<std::vector<Block>> next;
            for (const auto &prefix : partial) {
                for (const auto &piece : pieces) {
                    auto combined = prefix;
                    combined.insert(combined.end(), piece.begin(), piece.end());
                    next.push_back(std::move(combined));
                }
            }
            partial = std::move(next);
        };
        for (size_t j = 0; j + 1 < head.size(); j++) {
            extend(head[j] + 1, head[j + 1] - 1);
        }
        extend(head.back() + 1, hi);
        out.insert(out.end(), partial.begin(), partial.end());
    }
    return out;
}

std::vector<std::vector<Block>> noncrossing_matching_segment(int lo, int hi) {
    if (lo > hi) {
        return {{}};
    }
    std::vector<std::vector<Block>> out;
    for (int partner = lo + 1; partner <= hi; partner += 2) {
        auto inside = noncrossing_matching_segment(lo + 1, partner - 1);
        auto outside = noncrossing_matching_segment(partner + 1, hi);
        for (const auto &in : inside) {
            for (const auto &rest : outside) {
                std::vector<Block> blocks{{lo, partner}};
                blocks.insert(blocks.end(), in.begin(), in.end());
                blocks.insert(blocks.end(), rest.begin(), rest.end());
                out.push_back(std::move(blocks));
            }
        }
    }
    return out;
}

void all_matchings(std::vector<int> &remaining, std::vector<Block> &current, std::vector<std::vector<Block>> &out) {
    if (remaining.empty()) {
        out.push_back(current);
        return;
    }
    int first = remaining.front();
    for (size_t j = 1; j < remaining.size(); j++) {
        int partner = remaining[j];
        std::vector<int> rest;
        for (size_t k = 1; k < remaining.size(); k++) {
            if (k != j) {
                rest.push_back(remaining[k]);
            }
        }
        current.push_back({first, partner});
        all_matchings(rest, current, out);
        current.pop_back();
    }
}

}  // namespace

Partition::Partition(int n, std::vector<Block> blocks) : n_(n), blocks_(std::move(blocks)) {
    if (n_ < 1) {
        throw std::invalid_argument("partition ground set must be nonempty");
    }
    std::vector<int> seen(n_ + 1, 0);
    for (auto &b : blocks_) {
        if (b.empty()) {
            throw std::invalid_argument("partition has an empty block");
        }
        std::sort(b.begin(), b.end());
        for (int x : b) {
            if (x < 1 || x > n_) {
                throw std::invalid_argument("partition element " + std::to_string(x) + " outside 1.." +
                                            std::to_string(n_));
            }
            if (seen[x]++) {
                throw std::invalid_argument("partition element " + std::to_string(x) + " appears twice");
            }
        }
    }
    for (int x = 1; x <= n_; x++) {
        if (!seen[x]) {
            throw std::invalid_argument("partition does not cover element " + std::to_string(x));
        }
    }
    std::sort(blocks_.begin(), blocks_.end());
}

Partition Partition::singletons(int n) {
    std::vector<Block> blocks;
    for (int x = 1; x <= n; x++) {
        blocks.push_back({x});
    }
    return Partition(n, std::move(blocks));
}

Partition Partition::whole(int n) {
    Block b(n);
    std::iota(b.begin(), b.end(), 1);
    return Partition(n, {b});
}

bool Partition::is_matching() const {
    return std::all_of(blocks_.begin(), blocks_.end(), [](const Block &b) { return b.size() == 2; });
}

size_t Partition::block_of(int x) const {
    for (size_t k = 0; k < blocks_.size(); k++) {
        if (std::binary_search(blocks_[k].begin(), blocks_[k].end(), x)) {
            return k;
        }
    }
    throw std::invalid_argument("element " + std::to_string(x) + " not in partition");
}

std::string Partition::to_string() const {
    std::string out;
    for (size_t k = 0; k < blocks_.size(); k++) {
        if (k) {
            out += " | ";
        }
        for (size_t j = 0; j < blocks_[k].size(); j++) {
            if (j) {
                out += ' ';
            }
            out += std::to_string(blocks_[k][j]);
        }
    }
    return out;
}

Matching::Matching(Partition p) : partition_(std::move(p)) {
    if (!partition_.is_matching()) {
        throw std::invalid_argument("not a matching: every block must have exactly two elements (" +
                                    partition_.to_string() + ")");
    }
}

ParseError::ParseError(size_t position, const std::string &what)
    : std::invalid_argument("diagram parse error at column " + std::to_string(position + 1) + ": " + what),
      position_(position),
      detail_(what) {
}

Partition parse_partition(std::string_view text, int expected_n) {
    std::vector<Block> blocks(1);
    std::vector<size_t> block_start{0};
    std::vector<size_t> first_seen;
    size_t pos = 0;
    while (pos < text.size()) {
        char ch = text[pos];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            pos++;
        } else if (ch == '|') {
            if (blocks.back().empty()) {
                throw ParseError(pos, "empty block before '|'");
            }
            blocks.emplace_back();
            block_start.push_back(pos);
            pos++;
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            size_t start = pos;
            long value = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                value = value * 10 + (text[pos] - '0');
                if (value > 1000000) {
                    throw ParseError(start, "element too large");
                }
                pos++;
            }
            if (value < 1) {
                throw ParseError(start, "elements must be positive integers");
            }
            int x = static_cast<int>(value);
            if (static_cast<size_t>(x) >= first_seen.size()) {
                first_seen.resize(x + 1, std::string_view::npos);
            }
            if (first_seen[x] != std::string_view::npos) {
                throw ParseError(start, "element " + std::to_string(x) + " repeated (first seen at column " +
                                            std::to_string(first_seen[x] + 1) + ")");
            }
            first_seen[x] = start;
            blocks.back().push_back(x);
        } else {
            throw ParseError(pos, std::string("unexpected character '") + ch + "'");
        }
    }
    if (blocks.back().empty()) {
        if (blocks.size() == 1) {
            throw ParseError(0, "empty diagram");
        }
        throw ParseError(block_start.back(), "empty block after '|'");
    }
    int n = 0;
    for (const auto &b : blocks) {
        n += static_cast<int>(b.size());
    }
    if (expected_n > 0 && n != expected_n) {
        throw ParseError(text.size(), "diagram has " + std::to_string(n) + " elements, expected " +
                                          std::to_string(expected_n));
    }
    for (size_t x = 1; x < first_seen.size(); x++) {
        if (first_seen[x] != std::string_view::npos && static_cast<int>(x) > n) {
            throw ParseError(first_seen[x], "element " + std::to_string(x) + " exceeds the element count " +
                                                std::to_string(n) + "; labels must be exactly 1.." +
                                                std::to_string(n));
        }
    }
    return Partition(n, std::move(blocks));
}

uint64_t catalan(int m) {
    if (m < 0) {
        throw std::invalid_argument("catalan: negative argument");
    }
    if (m > 35) {
        throw std::invalid_argument("catalan: argument too large for 64-bit result");
    }
    // C_{k+1} = C_k * 2(2k+1) / (k+2), exact in integers.
    unsigned __int128 c = 1;
    for (int k = 0; k < m; k++) {
        c = c * (2 * (2 * k + 1)) / (k + 2);
    }
    return static_cast<uint64_t>(c);
}

bool is_noncrossing(const Partition &p) {
    // Two blocks cross iff some element of one lies strictly between two
    // cyclically consecutive elements of the other while another element does not.
    const auto &blocks = p.blocks();
    for (size_t i = 0; i < blocks.size(); i++) {
        const auto &b = blocks[i];
        if (b.size() < 2) {
            continue;
        }
        for (size_t j = 0; j < blocks.size(); j++) {
            if (i == j) {
                continue;
            }
            const auto &other = blocks[j];
            // Each element of `other` falls into one of the arcs cut out by b.
            size_t arc_of_first = std::upper_bound(b.begin(), b.end(), other.front()) - b.begin();
            arc_of_first %= b.size();
            for (int x : other) {
                size_t arc = (std::upper_bound(b.begin(), b.end(), x) - b.begin()) % b.size();
                if (arc != arc_of_first) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::vector<Matching> enumerate_noncrossing_matchings(int n) {
    if (n < 0 || n % 2 != 0) {
        throw std::invalid_argument("non-crossing matchings need an even number of points, got " +
                                    std::to_string(n));
    }
    if (n == 0) {
        return {};
    }
    std::vector<Matching> out;
    for (auto &blocks : noncrossing_matching_segment(1, n)) {
        out.emplace_back(Partition(n, std::move(blocks)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> enumerate_noncrossing_partitions(int n) {
    if (n < 1) {
        throw std::invalid_argument("non-crossing partitions need n >= 1");
    }
    if (n > 16) {
        throw std::invalid_argument("non-crossing partition enumeration is capped at n = 16");
    }
    std::vector<Partition> out;
    for (auto &blocks : noncrossing_segment(1, n)) {
        out.emplace_back(n, std::move(blocks));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Matching> enumerate_all_matchings(int n) {
    if (n < 2 || n % 2 != 0) {
        throw std::invalid_argument("perfect matchings need a positive even number of points");
    }
    std::vector<int> points(n);
    std::iota(points.begin(), points.end(), 1);
    std::vector<Block> current;
    std::vector<std::vector<Block>> raw;
    all_matchings(points, current, raw);
    std::vector<Matching> out;
    for (auto &blocks : raw) {
        out.emplace_back(Partition(n, std::move(blocks)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Partition common_coarsening(std::span<const Partition> ps) {
    if (ps.empty()) {
        throw std::invalid_argument("common_coarsening needs at least one partition");
    }
    int n = ps.front().n();
    UnionFind uf(n);
    for (const auto &p : ps) {
        if (p.n() != n) {
            throw std::invalid_argument("common_coarsening: partitions have different ground sets");
        }
        for (const auto &b : p.blocks()) {
            for (size_t k = 1; k < b.size(); k++) {
                uf.unite(b[0] - 1, b[k] - 1);
            }
        }
    }
    return components(n, uf);
}

bool refines(const Partition &a, const Partition &b) {
    if (a.n() != b.n()) {
        throw std::invalid_argument("refines: partitions have different ground sets");
    }
    for (const auto &block : a.blocks()) {
        size_t home = b.block_of(block.front());
        const auto &target = b.blocks()[home];
        for (int x : block) {
            if (!std::binary_search(target.begin(), target.end(), x)) {
                return false;
            }
        }
    }
    return true;
}

Partition glue_matching(const Matching &m) {
    int points = m.n();
    if (points % 2 != 0) {
        throw std::invalid_argument("glue_matching needs an even number of points");
    }
    int n = points / 2;
    UnionFind uf(n);
    for (const auto &chord : m.chords()) {
        uf.unite((chord[0] - 1) / 2, (chord[1] - 1) / 2);
    }
    return components(n, uf);
}

}  // namespace werner
