#pragma once

// Shift and clone maps, the F x Z embedding generated by x0 x1^-1, x2, x3, and
// the product embeddings F^m x Z^n -> F over prefix-free address sets.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "thompson/group.hpp"

namespace thompson {

/// Copy of g acting on the dyadic interval addressed by s (both trees grafted
/// at s). An injective homomorphism F -> C_s.
GroupElement clone_map(const CloneAddress& s, const GroupElement& g);

/// phi^k: raises every normal-form index by k. Equals clone_map(1^k, g).
GroupElement shift(const GroupElement& g, std::size_t k);

/// Index shift performed on the normal form alone.
NormalForm shift_indices(const NormalForm& nf, std::uint32_t k);

/// Phi(w, t) = phi^2(w) (x0 x1^-1)^t.
GroupElement burillo_embed(const GroupElement& w, long long t);

/// x_{2i} x_{2i+1}^-1
GroupElement z_generator(std::uint32_t i);

/// Addresses s_1 ... s_{m+1}; the last one carries the abelian factors.
class PrefixSet {
public:
    PrefixSet() = default;
    explicit PrefixSet(std::vector<CloneAddress> addresses) : addresses_(std::move(addresses)) {}

    /// Comma-separated, e.g. "0,10,11". An empty entry is the root.
    static PrefixSet parse(std::string_view text);

    const std::vector<CloneAddress>& addresses() const noexcept { return addresses_; }
    std::size_t size() const noexcept { return addresses_.size(); }
    const CloneAddress& operator[](std::size_t i) const { return addresses_.at(i); }

    std::string to_string(char separator = ',') const;

private:
    std::vector<CloneAddress> addresses_;
};

/// No address is a prefix of another.
bool is_prefix_free(const PrefixSet& ps);

struct ProductElement {
    std::vector<GroupElement> f_factors;
    std::vector<long long> z_factors;

    friend ProductElement operator*(const ProductElement& a, const ProductElement& b);
};

/// Psi(w_1..w_m, t_1..t_n) = p_{s_1}(w_1) ... p_{s_m}(w_m)
///   prod_i p_{s_{m+1}}(x_{2i-2} x_{2i-1}^-1)^{t_i}.
/// Requires a prefix-free set of exactly m+1 addresses.
GroupElement product_embed(const PrefixSet& ps, const ProductElement& e);

/// The individual factors of the Psi product in their defining order.
std::vector<GroupElement> product_factors(const PrefixSet& ps, const ProductElement& e);

/// [numerator / 2^depth, (numerator + 1) / 2^depth)
struct DyadicInterval {
    std::uint64_t numerator = 0;
    std::uint32_t depth = 0;

    friend bool operator==(const DyadicInterval&, const DyadicInterval&) = default;
};

DyadicInterval address_interval(const CloneAddress& s);
bool intervals_disjoint(const DyadicInterval& a, const DyadicInterval& b);
std::string to_string(const DyadicInterval& d);

/// Outcome of the root right-subtree lemma on a normal form written as
/// x0^{r0} x_{i1}^{r1} ... x_{ik}^{rk} x_{jl}^{-sl} ... x_{j1}^{-s1} x0^{-s0}:
/// if i_k < r0 + ... + r_{k-1}, the root of T+ has an empty right subtree;
/// symmetrically for T-. A claim is present only where its hypothesis holds.
struct LemmaClaims {
    std::optional<bool> pos_empty;
    std::optional<bool> neg_empty;
};

LemmaClaims lemma_right_side(const NormalForm& nf);

} // namespace thompson
