#include "thompson/embeddings.hpp"

#include <numeric>

namespace thompson {

GroupElement clone_map(const CloneAddress& s, const GroupElement& g) {
    if (g.is_identity()) return g;
    return GroupElement(TreePair(graft_at(g.pair().neg, s), graft_at(g.pair().pos, s)));
}

GroupElement shift(const GroupElement& g, std::size_t k) { return clone_map(CloneAddress::ones(k), g); }

NormalForm shift_indices(const NormalForm& nf, std::uint32_t k) {
    NormalForm out = nf;
    for (auto& t : out.positive) t.index += k;
    for (auto& t : out.negative) t.index += k;
    return out;
}

GroupElement z_generator(std::uint32_t i) {
    return multiply(GroupElement::generator(2 * i), GroupElement::generator(2 * i + 1, true));
}

GroupElement burillo_embed(const GroupElement& w, long long t) {
    return multiply(shift(w, 2), power(z_generator(0), t));
}

PrefixSet PrefixSet::parse(std::string_view text) {
    std::vector<CloneAddress> out;
    std::size_t start = 0;
    for (;;) {
        auto comma = text.find(',', start);
        auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        try {
            out.push_back(CloneAddress::parse(piece));
        } catch (const ParseError& e) {
            throw ParseError("malformed address list", start + e.position());
        }
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return PrefixSet(std::move(out));
}

std::string PrefixSet::to_string(char separator) const {
    std::string out;
    for (std::size_t i = 0; i < addresses_.size(); ++i) {
        if (i > 0) out.push_back(separator);
        out += addresses_[i].str();
    }
    return out;
}

bool is_prefix_free(const PrefixSet& ps) {
    const auto& a = ps.addresses();
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (i != j && a[i].is_prefix_of(a[j])) return false;
        }
    }
    return true;
}

ProductElement operator*(const ProductElement& a, const ProductElement& b) {
    if (a.f_factors.size() != b.f_factors.size() || a.z_factors.size() != b.z_factors.size()) {
        throw Error("product elements of different arity");
    }
    ProductElement out;
    for (std::size_t i = 0; i < a.f_factors.size(); ++i) out.f_factors.push_back(a.f_factors[i] * b.f_factors[i]);
    for (std::size_t i = 0; i < a.z_factors.size(); ++i) out.z_factors.push_back(a.z_factors[i] + b.z_factors[i]);
    return out;
}

std::vector<GroupElement> product_factors(const PrefixSet& ps, const ProductElement& e) {
    if (ps.size() != e.f_factors.size() + 1) {
        throw Error("address set needs m+1 = " + std::to_string(e.f_factors.size() + 1) + " entries, got " +
                    std::to_string(ps.size()));
    }
    if (!is_prefix_free(ps)) throw Error("address set '" + ps.to_string() + "' is not prefix-free");
    std::vector<GroupElement> out;
    const std::size_t m = e.f_factors.size();
    for (std::size_t i = 0; i < m; ++i) out.push_back(clone_map(ps[i], e.f_factors[i]));
    for (std::size_t i = 0; i < e.z_factors.size(); ++i) {
        out.push_back(power(clone_map(ps[m], z_generator(static_cast<std::uint32_t>(i))), e.z_factors[i]));
    }
    return out;
}

GroupElement product_embed(const PrefixSet& ps, const ProductElement& e) {
    GroupElement result;
    for (const auto& f : product_factors(ps, e)) result = multiply(result, f);
    return result;
}

DyadicInterval address_interval(const CloneAddress& s) {
    if (s.size() > 63) throw Error("address too deep for a 64-bit dyadic numerator");
    DyadicInterval d;
    d.depth = static_cast<std::uint32_t>(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) d.numerator = (d.numerator << 1) | (s.goes_right(i) ? 1U : 0U);
    return d;
}

bool intervals_disjoint(const DyadicInterval& a, const DyadicInterval& b) {
    // Compare at the finer depth: dyadic intervals are nested or disjoint.
    const DyadicInterval& coarse = a.depth <= b.depth ? a : b;
    const DyadicInterval& fine = a.depth <= b.depth ? b : a;
    return (fine.numerator >> (fine.depth - coarse.depth)) != coarse.numerator;
}

std::string to_string(const DyadicInterval& d) {
    const std::string den = "2^" + std::to_string(d.depth);
    return "[" + std::to_string(d.numerator) + "/" + den + ", " + std::to_string(d.numerator + 1) + "/" + den + ")";
}

namespace {

// Hypothesis for one part: i_k < r0 + r1 + ... + r_{k-1}, where r0 is the
// exponent of x0 and i_1 < ... < i_k are the remaining indices.
bool lemma_hypothesis(const std::vector<Term>& part) {
    std::uint64_t r0 = 0;
    std::vector<Term> rest;
    for (const auto& t : part) {
        if (t.index == 0) {
            r0 = t.exponent;
        } else {
            rest.push_back(t);
        }
    }
    if (rest.empty()) return false;
    std::uint64_t sum = r0;
    for (std::size_t m = 0; m + 1 < rest.size(); ++m) sum += rest[m].exponent;
    return rest.back().index < sum;
}

} // namespace

LemmaClaims lemma_right_side(const NormalForm& nf) {
    validate(nf);
    LemmaClaims claims;
    if (lemma_hypothesis(nf.positive)) claims.pos_empty = true;
    if (lemma_hypothesis(nf.negative)) claims.neg_empty = true;
    return claims;
}

} // namespace thompson
