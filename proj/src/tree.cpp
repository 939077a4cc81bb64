#include "thompson/tree.hpp"


namespace thompson {

namespace {

// Index one past the subtree whose preorder code starts at `pos`.
std::size_t subtree_end(std::string_view code, std::size_t pos) {
    std::size_t open = 1;
    while (open > 0) {
        open = code[pos++] == '1' ? open + 1 : open - 1;
    }
    return pos;
}

bool well_formed(std::string_view code) {
    if (code.empty()) return false;
    std::size_t open = 1;
    for (std::size_t i = 0; i < code.size(); ++i) {
        if (open == 0) return false;
        if (code[i] == '1') {
            ++open;
        } else if (code[i] == '0') {
            --open;
        } else {
            return false;
        }
    }
    return open == 0;
}

void exponent_walk(std::string_view code, std::size_t& pos, bool on_right_side, std::uint32_t chain,
                   std::vector<std::uint32_t>& out) {
    if (code[pos++] == '0') {
        out.push_back(chain);
        return;
    }
    // Left child: extends this node's left-edge chain unless this node sits on
    // the right side, in which case the chain may not reach it.
    exponent_walk(code, pos, false, on_right_side ? 0 : chain + 1, out);
    exponent_walk(code, pos, on_right_side, 0, out);
}

void union_walk(std::string_view a, std::size_t& i, std::string_view b, std::size_t& j, std::string& out) {
    if (a[i] == '0') {
        std::size_t end = subtree_end(b, j);
        out.append(b.substr(j, end - j));
        j = end;
        ++i;
        return;
    }
    if (b[j] == '0') {
        std::size_t end = subtree_end(a, i);
        out.append(a.substr(i, end - i));
        i = end;
        ++j;
        return;
    }
    out.push_back('1');
    ++i;
    ++j;
    union_walk(a, i, b, j, out);
    union_walk(a, i, b, j, out);
}

void completion_walk(std::string_view t, std::size_t& i, std::string_view r, std::size_t& j,
                     std::vector<BinaryTree>& out) {
    if (t[i] == '0') {
        std::size_t end = subtree_end(r, j);
        out.push_back(BinaryTree::from_preorder(std::string(r.substr(j, end - j))));
        j = end;
        ++i;
        return;
    }
    if (r[j] != '1') throw Error("refinement does not contain the tree");
    ++i;
    ++j;
    completion_walk(t, i, r, j, out);
    completion_walk(t, i, r, j, out);
}

void print_walk(std::string_view code, std::size_t& pos, std::string& out) {
    if (code[pos++] == '0') {
        out.push_back('L');
        return;
    }
    out.push_back('(');
    print_walk(code, pos, out);
    out.push_back(' ');
    print_walk(code, pos, out);
    out.push_back(')');
}

class TreeParser {
public:
    explicit TreeParser(std::string_view text) : text_(text) {}

    BinaryTree parse_complete() {
        BinaryTree t = parse();
        if (pos_ != text_.size()) throw ParseError("trailing characters after tree", pos_);
        return t;
    }

    BinaryTree parse() {
        if (pos_ >= text_.size()) throw ParseError("unexpected end of tree", pos_);
        if (text_[pos_] == 'L') {
            ++pos_;
            return BinaryTree::leaf();
        }
        expect('(');
        BinaryTree left = parse();
        expect(' ');
        BinaryTree right = parse();
        expect(')');
        return BinaryTree::caret(left, right);
    }

    std::size_t position() const { return pos_; }

private:
    void expect(char c) {
        if (pos_ >= text_.size() || text_[pos_] != c) {
            throw ParseError(std::string("expected '") + c + "'", pos_);
        }
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

BinaryTree BinaryTree::caret(const BinaryTree& left, const BinaryTree& right) {
    std::string code;
    code.reserve(1 + left.code_.size() + right.code_.size());
    code.push_back('1');
    code += left.code_;
    code += right.code_;
    return BinaryTree(std::move(code));
}

BinaryTree BinaryTree::from_preorder(std::string code) {
    if (!well_formed(code)) throw Error("malformed preorder tree code '" + code + "'");
    return BinaryTree(std::move(code));
}

BinaryTree BinaryTree::right_comb(std::size_t carets) {
    std::string code;
    for (std::size_t i = 0; i < carets; ++i) code += "10";
    code.push_back('0');
    return BinaryTree(std::move(code));
}

BinaryTree BinaryTree::left_comb(std::size_t carets) {
    return BinaryTree(std::string(carets, '1') + std::string(carets + 1, '0'));
}

BinaryTree BinaryTree::left() const {
    if (is_leaf()) throw Error("a leaf has no left subtree");
    return BinaryTree(code_.substr(1, subtree_end(code_, 1) - 1));
}

BinaryTree BinaryTree::right() const {
    if (is_leaf()) throw Error("a leaf has no right subtree");
    return BinaryTree(code_.substr(subtree_end(code_, 1)));
}

CloneAddress CloneAddress::parse(std::string_view text) {
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] != '0' && text[i] != '1') throw ParseError("address digits must be 0 or 1", i);
    }
    return CloneAddress(std::string(text));
}

TreePair::TreePair(BinaryTree negative, BinaryTree positive) : neg(std::move(negative)), pos(std::move(positive)) {
    if (neg.leaf_count() != pos.leaf_count()) {
        throw Error("tree pair leaf counts differ: " + std::to_string(neg.leaf_count()) + " vs " +
                    std::to_string(pos.leaf_count()));
    }
}

std::vector<std::uint32_t> leaf_exponents(const BinaryTree& t) {
    std::vector<std::uint32_t> out;
    out.reserve(t.leaf_count());
    std::size_t pos = 0;
    exponent_walk(t.preorder(), pos, true, 0, out);
    return out;
}

std::uint32_t leaf_exponent(const BinaryTree& t, std::size_t n) {
    if (n >= t.leaf_count()) {
        throw Error("leaf index " + std::to_string(n) + " out of range for tree with " +
                    std::to_string(t.leaf_count()) + " leaves");
    }
    return leaf_exponents(t)[n];
}

std::vector<std::size_t> exposed_carets(const BinaryTree& t) {
    std::vector<std::size_t> out;
    const std::string& code = t.preorder();
    std::size_t leaves = 0;
    for (std::size_t i = 0; i < code.size(); ++i) {
        if (code[i] == '0') {
            ++leaves;
        } else if (i + 2 < code.size() && code[i + 1] == '0' && code[i + 2] == '0') {
            out.push_back(leaves);
        }
    }
    return out;
}

BinaryTree collapse_caret(const BinaryTree& t, std::size_t m) {
    const std::string& code = t.preorder();
    std::size_t leaves = 0;
    for (std::size_t i = 0; i < code.size(); ++i) {
        if (code[i] == '0') {
            ++leaves;
            continue;
        }
        if (leaves == m && i + 2 < code.size() && code[i + 1] == '0' && code[i + 2] == '0') {
            std::string out = code.substr(0, i);
            out.push_back('0');
            out.append(code, i + 3);
            return BinaryTree::from_preorder(std::move(out));
        }
    }
    throw Error("no exposed caret over leaves " + std::to_string(m) + ", " + std::to_string(m + 1));
}

namespace {

// Lowest m with an exposed caret over (m, m+1) in both trees, or npos.
std::size_t first_common_caret(const TreePair& p) {
    auto a = exposed_carets(p.neg);
    auto b = exposed_carets(p.pos);
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return a[i];
        if (a[i] < b[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return std::string::npos;
}

} // namespace

bool is_reduced(const TreePair& p) { return first_common_caret(p) == std::string::npos; }

TreePair reduce(const TreePair& p) {
    if (p.neg.leaf_count() != p.pos.leaf_count()) throw Error("cannot reduce a pair with mismatched leaf counts");
    TreePair current = p;
    for (std::size_t m = first_common_caret(current); m != std::string::npos; m = first_common_caret(current)) {
        current = TreePair(collapse_caret(current.neg, m), collapse_caret(current.pos, m));
    }
    return current;
}

BinaryTree subtree_at(const BinaryTree& t, const CloneAddress& a) {
    std::string_view code = t.preorder();
    std::size_t pos = 0;
    for (std::size_t depth = 0; depth < a.size(); ++depth) {
        if (code[pos] == '0') {
            throw Error("address '" + a.str() + "' walks off a leaf at depth " + std::to_string(depth));
        }
        pos = a.goes_right(depth) ? subtree_end(code, pos + 1) : pos + 1;
    }
    return BinaryTree::from_preorder(std::string(code.substr(pos, subtree_end(code, pos) - pos)));
}

BinaryTree graft_at(const BinaryTree& inner, const CloneAddress& a) {
    BinaryTree result = inner;
    for (std::size_t depth = a.size(); depth-- > 0;) {
        result = a.goes_right(depth) ? BinaryTree::caret(BinaryTree::leaf(), result)
                                     : BinaryTree::caret(result, BinaryTree::leaf());
    }
    return result;
}

bool right_subtree_of_root_empty(const BinaryTree& t) {
    if (t.is_leaf()) throw Error("a bare leaf has no root caret");
    return t.preorder()[subtree_end(t.preorder(), 1)] == '0';
}

BinaryTree common_refinement(const BinaryTree& a, const BinaryTree& b) {
    std::string out;
    std::size_t i = 0;
    std::size_t j = 0;
    union_walk(a.preorder(), i, b.preorder(), j, out);
    return BinaryTree::from_preorder(std::move(out));
}

std::vector<BinaryTree> leaf_completions(const BinaryTree& t, const BinaryTree& refinement) {
    std::vector<BinaryTree> out;
    out.reserve(t.leaf_count());
    std::size_t i = 0;
    std::size_t j = 0;
    completion_walk(t.preorder(), i, refinement.preorder(), j, out);
    return out;
}

BinaryTree expand_leaves(const BinaryTree& t, const std::vector<BinaryTree>& subtrees) {
    if (subtrees.size() != t.leaf_count()) throw Error("expand_leaves: one subtree per leaf required");
    std::string out;
    std::size_t leaf = 0;
    for (char c : t.preorder()) {
        if (c == '1') {
            out.push_back('1');
        } else {
            out += subtrees[leaf++].preorder();
        }
    }
    return BinaryTree::from_preorder(std::move(out));
}

std::string to_string(const BinaryTree& t) {
    std::string out;
    std::size_t pos = 0;
    print_walk(t.preorder(), pos, out);
    return out;
}

std::string to_string(const TreePair& p) { return to_string(p.neg) + " | " + to_string(p.pos); }

BinaryTree parse_tree(std::string_view text) { return TreeParser(text).parse_complete(); }

TreePair parse_tree_pair(std::string_view text) {
    auto bar = text.find(" | ");
    if (bar == std::string_view::npos) throw ParseError("expected ' | ' between trees", text.size());
    BinaryTree neg;
    try {
        neg = TreeParser(text.substr(0, bar)).parse_complete();
    } catch (const ParseError& e) {
        throw ParseError("malformed negative tree", e.position());
    }
    BinaryTree pos;
    try {
        pos = TreeParser(text.substr(bar + 3)).parse_complete();
    } catch (const ParseError& e) {
        throw ParseError("malformed positive tree", bar + 3 + e.position());
    }
    return TreePair(neg, pos);
}

} // namespace thompson
