#include "thompson/sampling.hpp"

namespace thompson {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw Error("empty sampling range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(engine_());
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t draw = engine_();
    while (draw >= limit) draw = engine_();
    return lo + static_cast<std::int64_t>(draw % span);
}

BinaryTree random_tree(Rng& rng, std::size_t carets) {
    if (carets == 0) return BinaryTree::leaf();
    const auto left = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(carets) - 1));
    BinaryTree l = random_tree(rng, left);
    BinaryTree r = random_tree(rng, carets - 1 - left);
    return BinaryTree::caret(l, r);
}

GroupElement random_element(Rng& rng, std::size_t max_carets) {
    const auto carets = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(max_carets)));
    BinaryTree neg = random_tree(rng, carets);
    BinaryTree pos = random_tree(rng, carets);
    return GroupElement(TreePair(std::move(neg), std::move(pos)));
}

Word random_finite_word(Rng& rng, std::size_t length) { return random_word(rng, length, 1); }

Word random_word(Rng& rng, std::size_t length, std::uint32_t max_index) {
    Word w;
    for (std::size_t i = 0; i < length; ++i) {
        const auto index = static_cast<std::uint32_t>(rng.uniform(0, max_index));
        w.letters.push_back({index, rng.uniform(0, 1) == 1});
    }
    return w;
}

} // namespace thompson
