#pragma once

#include <cstdint>
#include <random>

#include "thompson/group.hpp"

namespace thompson {

/// Deterministic generator shared by samplers. Bounded draws avoid
/// std::uniform_int_distribution so output is identical across standard
/// libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);
    std::uint64_t bits() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

/// Random tree with exactly `carets` carets (left/right caret split uniform).
BinaryTree random_tree(Rng& rng, std::size_t carets);

/// Reduced pair of two random trees with a caret count drawn from
/// [0, max_carets]; the result has at most max_carets carets.
GroupElement random_element(Rng& rng, std::size_t max_carets);

/// Uniform random word over {x0^±1, x1^±1}.
Word random_finite_word(Rng& rng, std::size_t length);

/// Uniform random word with indices in [0, max_index].
Word random_word(Rng& rng, std::size_t length, std::uint32_t max_index);

} // namespace thompson
