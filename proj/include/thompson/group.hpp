#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "thompson/normal_form.hpp"
#include "thompson/tree.hpp"

namespace thompson {

/// An element of F, held as its reduced tree pair.
class GroupElement {
public:
    GroupElement() = default;

    /// Reduces `p` first.
    explicit GroupElement(const TreePair& p) : pair_(reduce(p)) {}

    static GroupElement identity() { return {}; }
    static GroupElement from_normal_form(const NormalForm& nf);
    /// x_k, or x_k^-1 when `inverse`.
    static GroupElement generator(std::uint32_t k, bool inverse = false);

    const TreePair& pair() const noexcept { return pair_; }
    bool is_identity() const noexcept { return pair_.neg.is_leaf(); }
    /// N: carets in either tree of the reduced pair.
    std::size_t caret_count() const noexcept { return pair_.neg.caret_count(); }

    NormalForm normal_form() const { return tree_pair_to_normal_form(pair_); }

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
    friend std::strong_ordering operator<=>(const GroupElement&, const GroupElement&) = default;

private:
    TreePair pair_;
};

/// The product a·b, with the convention that x0^-1 x1 x0 = x2.
GroupElement multiply(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& a);
GroupElement power(const GroupElement& a, long long k);
GroupElement commutator(const GroupElement& a, const GroupElement& b);
bool commutator_is_trivial(const GroupElement& a, const GroupElement& b);

inline GroupElement operator*(const GroupElement& a, const GroupElement& b) { return multiply(a, b); }

/// Left-to-right product of the letters.
GroupElement evaluate(const Word& w);

/// Unique normal form of the element `w` represents, via tree pairs.
NormalForm to_normal_form(const Word& w);

struct RelatorCheck {
    std::string name;
    bool passed = false;
};

struct RelatorReport {
    std::vector<RelatorCheck> checks;

    bool all_passed() const;
};

/// Both relators of the two-generator presentation and the relations
/// x_i^-1 x_j x_i = x_{j+1} for 0 <= i < j <= max_index.
RelatorReport verify_relators(std::uint32_t max_index = 8);

} // namespace thompson

template <>
struct std::hash<thompson::GroupElement> {
    std::size_t operator()(const thompson::GroupElement& g) const noexcept {
        return std::hash<thompson::TreePair>{}(g.pair());
    }
};
