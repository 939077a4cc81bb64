#include "thompson/group.hpp"

#include <algorithm>

namespace thompson {

GroupElement GroupElement::from_normal_form(const NormalForm& nf) {
    return GroupElement(normal_form_to_tree_pair(nf));
}

GroupElement GroupElement::generator(std::uint32_t k, bool inverse) {
    NormalForm nf;
    (inverse ? nf.negative : nf.positive).push_back({k, 1});
    return from_normal_form(nf);
}

// An element maps the leaves of its negative tree onto those of its positive
// tree. In a·b the factor b acts first, so b's positive tree is matched
// against a's negative tree over their common refinement.
GroupElement multiply(const GroupElement& a, const GroupElement& b) {
    if (a.is_identity()) return b;
    if (b.is_identity()) return a;
    const TreePair& pa = a.pair();
    const TreePair& pb = b.pair();
    BinaryTree middle = common_refinement(pa.neg, pb.pos);
    BinaryTree a_pos = expand_leaves(pa.pos, leaf_completions(pa.neg, middle));
    BinaryTree b_neg = expand_leaves(pb.neg, leaf_completions(pb.pos, middle));
    return GroupElement(TreePair(std::move(b_neg), std::move(a_pos)));
}

GroupElement inverse(const GroupElement& a) {
    return GroupElement(TreePair(a.pair().pos, a.pair().neg));
}

GroupElement power(const GroupElement& a, long long k) {
    GroupElement base = k < 0 ? inverse(a) : a;
    unsigned long long n = k < 0 ? 0ULL - static_cast<unsigned long long>(k) : static_cast<unsigned long long>(k);
    GroupElement result;
    while (n > 0) {
        if (n & 1ULL) result = multiply(result, base);
        n >>= 1;
        if (n > 0) base = multiply(base, base);
    }
    return result;
}

GroupElement commutator(const GroupElement& a, const GroupElement& b) {
    return multiply(multiply(inverse(a), inverse(b)), multiply(a, b));
}

bool commutator_is_trivial(const GroupElement& a, const GroupElement& b) { return multiply(a, b) == multiply(b, a); }

GroupElement evaluate(const Word& w) {
    GroupElement result;
    for (const auto& l : w.letters) result = multiply(result, GroupElement::generator(l.index, l.inverse));
    return result;
}

NormalForm to_normal_form(const Word& w) { return evaluate(w).normal_form(); }

bool RelatorReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const RelatorCheck& c) { return c.passed; });
}

RelatorReport verify_relators(std::uint32_t max_index) {
    RelatorReport report;
    const auto x0 = GroupElement::generator(0);
    const auto x1 = GroupElement::generator(1);
    const auto u = x0 * inverse(x1);
    report.checks.push_back({"[x0 x1^-1, x0^-1 x1 x0]", commutator(u, inverse(x0) * x1 * x0).is_identity()});
    report.checks.push_back(
        {"[x0 x1^-1, x0^-2 x1 x0^2]", commutator(u, power(x0, -2) * x1 * power(x0, 2)).is_identity()});
    for (std::uint32_t j = 1; j <= max_index; ++j) {
        for (std::uint32_t i = 0; i < j; ++i) {
            const auto xi = GroupElement::generator(i);
            const auto lhs = inverse(xi) * GroupElement::generator(j) * xi;
            report.checks.push_back({"x" + std::to_string(i) + "^-1 x" + std::to_string(j) + " x" + std::to_string(i) +
                                         " = x" + std::to_string(j + 1),
                                     lhs == GroupElement::generator(j + 1)});
        }
    }
    return report;
}

} // namespace thompson
