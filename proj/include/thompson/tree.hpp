#pragma once

// Rooted binary trees, tree-pair diagrams and their canonical reduction.
//
// A tree is stored as its preorder caret/leaf sequence ('1' = caret,
// '0' = exposed leaf). The encoding is canonical, so equality, ordering and
// hashing are plain string operations, and a caret whose two children are
// exposed leaves is exactly the substring "100".

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace thompson {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class BinaryTree {
public:
    /// A bare leaf.
    BinaryTree() : code_("0") {}

    static BinaryTree leaf() { return {}; }
    static BinaryTree caret(const BinaryTree& left, const BinaryTree& right);

    /// Builds from a preorder code over {'1','0'}; throws on malformed input.
    static BinaryTree from_preorder(std::string code);

    /// carets along the right side, each with a bare left leaf
    static BinaryTree right_comb(std::size_t carets);
    static BinaryTree left_comb(std::size_t carets);

    bool is_leaf() const noexcept { return code_.size() == 1; }
    BinaryTree left() const;
    BinaryTree right() const;

    std::size_t caret_count() const noexcept { return code_.size() / 2; }
    std::size_t leaf_count() const noexcept { return code_.size() / 2 + 1; }

    const std::string& preorder() const noexcept { return code_; }

    friend bool operator==(const BinaryTree&, const BinaryTree&) = default;
    friend std::strong_ordering operator<=>(const BinaryTree&, const BinaryTree&) = default;

private:
    explicit BinaryTree(std::string code) : code_(std::move(code)) {}

    std::string code_;
};

/// Binary address of a node: 0 descends left, 1 descends right. Empty = root.
class CloneAddress {
public:
    CloneAddress() = default;

    static CloneAddress parse(std::string_view text);
    static CloneAddress ones(std::size_t count) { return CloneAddress(std::string(count, '1')); }

    std::size_t size() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }
    bool goes_right(std::size_t depth) const { return bits_.at(depth) == '1'; }
    const std::string& str() const noexcept { return bits_; }

    bool is_prefix_of(const CloneAddress& other) const noexcept {
        return other.bits_.starts_with(bits_);
    }

    CloneAddress child(bool right) const { return CloneAddress(bits_ + (right ? '1' : '0')); }

    friend bool operator==(const CloneAddress&, const CloneAddress&) = default;
    friend std::strong_ordering operator<=>(const CloneAddress&, const CloneAddress&) = default;

private:
    explicit CloneAddress(std::string bits) : bits_(std::move(bits)) {}

    std::string bits_;
};

/// (T-, T+). Construction enforces equal leaf counts; reduction is separate.
struct TreePair {
    BinaryTree neg;
    BinaryTree pos;

    TreePair() = default;
    TreePair(BinaryTree negative, BinaryTree positive);

    std::size_t leaf_count() const noexcept { return neg.leaf_count(); }

    friend bool operator==(const TreePair&, const TreePair&) = default;
    friend std::strong_ordering operator<=>(const TreePair&, const TreePair&) = default;
};

inline std::size_t leaf_count(const BinaryTree& t) noexcept { return t.leaf_count(); }
inline std::size_t caret_count(const BinaryTree& t) noexcept { return t.caret_count(); }

/// Length of the maximal ascending left-edge path from leaf n that avoids the
/// right side (the root counts as part of the right side).
std::uint32_t leaf_exponent(const BinaryTree& t, std::size_t n);
std::vector<std::uint32_t> leaf_exponents(const BinaryTree& t);

/// Left leaf numbers m of carets whose two children are exposed leaves m, m+1.
std::vector<std::size_t> exposed_carets(const BinaryTree& t);

/// Replaces the caret over exposed leaves (m, m+1) with a single leaf m.
BinaryTree collapse_caret(const BinaryTree& t, std::size_t m);

bool is_reduced(const TreePair& p);

/// Cancels common exposed carets, lowest leaf number first, until none remain.
TreePair reduce(const TreePair& p);

BinaryTree subtree_at(const BinaryTree& t, const CloneAddress& a);

/// Spine of |a| carets along a with `inner` at the addressed node.
BinaryTree graft_at(const BinaryTree& inner, const CloneAddress& a);

bool right_subtree_of_root_empty(const BinaryTree& t);

/// Smallest tree containing both (union of caret sets).
BinaryTree common_refinement(const BinaryTree& a, const BinaryTree& b);

/// For each leaf of `t`, the subtree of `refinement` hanging at that leaf.
/// `refinement` must contain `t`.
std::vector<BinaryTree> leaf_completions(const BinaryTree& t, const BinaryTree& refinement);

/// Substitutes subtrees[i] for leaf i.
BinaryTree expand_leaves(const BinaryTree& t, const std::vector<BinaryTree>& subtrees);

/// "L" | "(" tree " " tree ")"
std::string to_string(const BinaryTree& t);
/// "negTree | posTree"
std::string to_string(const TreePair& p);

BinaryTree parse_tree(std::string_view text);
TreePair parse_tree_pair(std::string_view text);

} // namespace thompson

template <>
struct std::hash<thompson::BinaryTree> {
    std::size_t operator()(const thompson::BinaryTree& t) const noexcept {
        return std::hash<std::string>{}(t.preorder());
    }
};

template <>
struct std::hash<thompson::TreePair> {
    std::size_t operator()(const thompson::TreePair& p) const noexcept {
        std::size_t h = std::hash<std::string>{}(p.neg.preorder());
        return h ^ (std::hash<std::string>{}(p.pos.preorder()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    }
};
