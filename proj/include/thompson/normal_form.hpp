#pragma once

// Words over the generators x_k of the infinite presentation, their unique
// normal forms, and the bijection between normal forms and reduced tree pairs
// via leaf exponents.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "thompson/tree.hpp"

namespace thompson {

struct GenLetter {
    std::uint32_t index = 0;
    bool inverse = false;

    GenLetter inverted() const noexcept { return {index, !inverse}; }

    friend bool operator==(const GenLetter&, const GenLetter&) = default;
};

/// Free word, left to right. May be unreduced.
struct Word {
    std::vector<GenLetter> letters;

    /// True when every letter is x0 or x1 (a word in the finite presentation).
    bool is_finite_alphabet() const noexcept;
    std::size_t length() const noexcept { return letters.size(); }

    Word inverse() const;

    friend Word operator*(const Word& a, const Word& b);
    friend bool operator==(const Word&, const Word&) = default;
};

/// Parses `x0 x1^-1 x2^3`; exponent 0 drops the term, negative exponents
/// expand to repeated inverse letters. Throws ParseError with position.
Word parse_word(std::string_view text);

std::string to_string(const Word& w);

struct Term {
    std::uint32_t index = 0;
    std::uint32_t exponent = 0;

    friend bool operator==(const Term&, const Term&) = default;
};

/// x_{i1}^{r1} ... x_{ik}^{rk} x_{jl}^{-sl} ... x_{j1}^{-s1}.
/// Both parts are stored with strictly increasing indices; the negative part
/// is emitted in decreasing order.
struct NormalForm {
    std::vector<Term> positive;
    std::vector<Term> negative;

    bool is_identity() const noexcept { return positive.empty() && negative.empty(); }

    friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

/// Positive exponents, increasing indices, and the uniqueness condition:
/// an index present in both parts forces index+1 to be present in one.
bool is_valid(const NormalForm& nf);
void validate(const NormalForm& nf);

std::string to_string(const NormalForm& nf);
Word to_word(const NormalForm& nf);

/// Dense exponent vector (index -> exponent) of one part.
std::vector<std::uint32_t> exponent_vector(const std::vector<Term>& part);
std::vector<Term> terms_from_exponents(const std::vector<std::uint32_t>& exponents);

/// Number of leaves of the smallest tree whose leaf exponents are `exponents`
/// (trailing zeros allowed).
std::size_t minimal_leaf_count(const std::vector<std::uint32_t>& exponents);

/// The unique tree with `leaves` leaves realizing `exponents`; `leaves` must
/// be at least minimal_leaf_count(exponents).
BinaryTree tree_from_exponents(const std::vector<std::uint32_t>& exponents, std::size_t leaves);

TreePair normal_form_to_tree_pair(const NormalForm& nf);

/// posTree exponents give the positive part, negTree exponents the negative
/// part. Throws on an unreduced pair.
NormalForm tree_pair_to_normal_form(const TreePair& p);

/// Normal form by string rewriting alone, independent of tree pairs:
/// sort positive letters left and negative letters right with the relations
/// x_j x_i = x_i x_{j+1} (i < j), cancel freely, then remove pairs
/// x_i ... x_i^-1 whose interior avoids index i+1.
NormalForm rewrite_to_normal_form(const Word& w, std::size_t max_steps = 10'000'000);

} // namespace thompson
