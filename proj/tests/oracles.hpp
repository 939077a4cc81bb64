#pragma once

// Test-only oracles that do not go through the library's own algorithms.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "thompson/group.hpp"

namespace oracle {

// Dyadic rational n / 2^kDepth.
inline constexpr unsigned kDepth = 60;
using Dyadic = std::uint64_t;

struct Piece {
    Dyadic lo = 0;
    unsigned depth = 0;
};

// Leaf intervals of a tree, left to right, computed from the preorder code.
inline std::vector<Piece> leaf_intervals(const std::string& code) {
    std::vector<Piece> out;
    std::vector<Piece> stack{{0, 0}};
    for (char c : code) {
        Piece p = stack.back();
        stack.pop_back();
        if (c == '0') {
            out.push_back(p);
        } else {
            const Dyadic half = Dyadic{1} << (kDepth - p.depth - 1);
            stack.push_back({p.lo + half, p.depth + 1});
            stack.push_back({p.lo, p.depth + 1});
        }
    }
    return out;
}

// The PL homeomorphism of [0,1] carrying leaf i of the positive tree
// affinely onto leaf i of the negative tree.
class PlMap {
public:
    explicit PlMap(const thompson::TreePair& p)
        : from_(leaf_intervals(p.pos.preorder())), to_(leaf_intervals(p.neg.preorder())) {}

    Dyadic operator()(Dyadic x) const {
        std::size_t i = from_.size() - 1;
        while (from_[i].lo > x) --i;
        const Dyadic offset = x - from_[i].lo;
        if (to_[i].depth >= from_[i].depth) return to_[i].lo + (offset >> (to_[i].depth - from_[i].depth));
        return to_[i].lo + (offset << (from_[i].depth - to_[i].depth));
    }

private:
    std::vector<Piece> from_;
    std::vector<Piece> to_;
};

// Sample points on a dyadic grid of the given resolution.
inline std::vector<Dyadic> grid(unsigned bits) {
    std::vector<Dyadic> pts;
    for (Dyadic k = 0; k < (Dyadic{1} << bits); ++k) pts.push_back(k << (kDepth - bits));
    return pts;
}

// Every reduced pair reachable by cancelling common exposed carets in any
// order. A confluent reduction yields exactly one.
inline std::set<std::pair<std::string, std::string>> all_reduction_outcomes(const thompson::TreePair& p) {
    std::set<std::pair<std::string, std::string>> done;
    std::set<std::pair<std::string, std::string>> seen;
    std::vector<thompson::TreePair> work{p};
    while (!work.empty()) {
        thompson::TreePair cur = work.back();
        work.pop_back();
        const auto key = std::make_pair(cur.neg.preorder(), cur.pos.preorder());
        if (!seen.insert(key).second) continue;
        const auto a = thompson::exposed_carets(cur.neg);
        const auto b = thompson::exposed_carets(cur.pos);
        bool any = false;
        for (std::size_t m : a) {
            for (std::size_t n : b) {
                if (m != n) continue;
                any = true;
                work.emplace_back(thompson::collapse_caret(cur.neg, m), thompson::collapse_caret(cur.pos, m));
            }
        }
        if (!any) done.insert(key);
    }
    return done;
}

// All words over {x0^±1, x1^±1} of exactly `length` letters.
inline std::vector<thompson::Word> finite_words(std::size_t length) {
    std::vector<thompson::Word> out{thompson::Word{}};
    for (std::size_t i = 0; i < length; ++i) {
        std::vector<thompson::Word> next;
        for (const auto& w : out) {
            for (std::uint32_t idx = 0; idx < 2; ++idx) {
                for (bool inv : {false, true}) {
                    auto v = w;
                    v.letters.push_back({idx, inv});
                    next.push_back(std::move(v));
                }
            }
        }
        out = std::move(next);
    }
    return out;
}

} // namespace oracle
