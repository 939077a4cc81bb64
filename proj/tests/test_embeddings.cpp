#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "thompson/embeddings.hpp"
#include "thompson/metrics.hpp"
#include "thompson/sampling.hpp"

using namespace thompson;

namespace {

GroupElement E(const char* w) { return evaluate(parse_word(w)); }
CloneAddress A(const char* s) { return CloneAddress::parse(s); }

GroupElement nontrivial(Rng& rng, std::size_t max_carets) {
    GroupElement g;
    while (g.is_identity()) g = random_element(rng, max_carets);
    return g;
}

} // namespace

TEST_CASE("clone map basics") {
    CHECK(clone_map(A("11"), GroupElement::identity()).is_identity());
    CHECK(clone_map(A(""), E("x0 x1")) == E("x0 x1"));
    CHECK(clone_map(A("1"), E("x0")) == E("x1"));
    CHECK(clone_map(A("11"), E("x0")) == E("x2"));
    CHECK(clone_map(A("11"), E("x1")) == E("x3"));
    CHECK(shift(E("x0 x3^-1"), 2) == E("x2 x5^-1"));
}

TEST_CASE("clone map is an injective homomorphism with additive carets") {
    Rng rng(17);
    for (const char* s : {"0", "1", "01", "110", "0101"}) {
        const auto a = A(s);
        for (int i = 0; i < 200; ++i) {
            const auto g = random_element(rng, 8);
            const auto h = random_element(rng, 8);
            CHECK(clone_map(a, g * h) == clone_map(a, g) * clone_map(a, h));
            if (g != h) CHECK(clone_map(a, g) != clone_map(a, h));
            if (!g.is_identity()) CHECK(clone_map(a, g).caret_count() == g.caret_count() + a.size());
        }
    }
}

TEST_CASE("cloning at 1 shifts normal form indices") {
    Rng rng(29);
    for (int i = 0; i < 300; ++i) {
        const auto g = random_element(rng, 10);
        CHECK(clone_map(A("1"), g).normal_form() == shift_indices(g.normal_form(), 1));
        CHECK(shift(g, 3) == GroupElement::from_normal_form(shift_indices(g.normal_form(), 3)));
    }
}

TEST_CASE("clones at incomparable addresses commute") {
    Rng rng(37);
    const std::vector<std::pair<const char*, const char*>> pairs{{"0", "1"}, {"0", "11"}, {"01", "10"}, {"001", "1"}};
    for (auto [s, t] : pairs) {
        CHECK(intervals_disjoint(address_interval(A(s)), address_interval(A(t))));
        for (int i = 0; i < 100; ++i) {
            CHECK(commutator_is_trivial(clone_map(A(s), random_element(rng, 8)), clone_map(A(t), random_element(rng, 8))));
        }
    }
    CHECK_FALSE(commutator_is_trivial(clone_map(A("1"), E("x0")), clone_map(A("11"), E("x0"))));
}

TEST_CASE("z generators") {
    CHECK(z_generator(0) == E("x0 x1^-1"));
    CHECK(z_generator(1) == E("x2 x3^-1"));
    for (std::uint32_t i = 0; i <= 4; ++i) {
        for (std::uint32_t j = 0; j <= 4; ++j) CHECK(commutator_is_trivial(z_generator(i), z_generator(j)));
    }
    // measured: N((x_{2i} x_{2i+1}^-1)^t) = N(x_{2i} x_{2i+1}^-1) + t - 1
    for (std::uint32_t i = 0; i <= 3; ++i) {
        for (long long t = 1; t <= 8; ++t) {
            CHECK(power(z_generator(i), t).caret_count() == z_generator(i).caret_count() + static_cast<std::size_t>(t) - 1);
        }
    }
}

TEST_CASE("Phi") {
    CHECK(burillo_embed(GroupElement::identity(), 0).is_identity());
    for (long long k = 1; k <= 10; ++k) {
        const auto g = burillo_embed(GroupElement::identity(), k);
        CHECK(g == power(E("x0 x1^-1"), k));
        CHECK(g.caret_count() == static_cast<std::size_t>(k) + 2);
    }
    Rng rng(43);
    for (int i = 0; i < 300; ++i) {
        const auto w = nontrivial(rng, 10);
        const long long t = rng.uniform(1, 20);
        CHECK(burillo_embed(w, t).caret_count() == w.caret_count() + static_cast<std::size_t>(t) + 2);
        CHECK(burillo_embed(w, -t).caret_count() == w.caret_count() + static_cast<std::size_t>(t) + 2);
    }
}

TEST_CASE("Phi is a homomorphism") {
    Rng rng(47);
    for (int i = 0; i < 300; ++i) {
        const auto w1 = random_element(rng, 8);
        const auto w2 = random_element(rng, 8);
        const long long t1 = rng.uniform(-10, 10);
        const long long t2 = rng.uniform(-10, 10);
        CHECK(burillo_embed(w1 * w2, t1 + t2) == burillo_embed(w1, t1) * burillo_embed(w2, t2));
        CHECK(commutator_is_trivial(clone_map(A("11"), w1), power(z_generator(0), t2)));
    }
}

TEST_CASE("prefix sets") {
    CHECK(is_prefix_free(PrefixSet::parse("0,10,11")));
    CHECK_FALSE(is_prefix_free(PrefixSet::parse("1,11")));
    CHECK_FALSE(is_prefix_free(PrefixSet::parse(",0")));
    CHECK_FALSE(is_prefix_free(PrefixSet::parse("0,0")));
    CHECK(PrefixSet::parse("").size() == 1);
    CHECK(PrefixSet::parse("00,01,1").to_string() == "00,01,1");
    CHECK_THROWS_AS(PrefixSet::parse("0,2"), ParseError);
}

TEST_CASE("address intervals") {
    CHECK(address_interval(A("")) == DyadicInterval{0, 0});
    CHECK(address_interval(A("11")) == DyadicInterval{3, 2});
    CHECK(to_string(address_interval(A("11"))) == "[3/2^2, 4/2^2)");
    CHECK(intervals_disjoint(address_interval(A("0")), address_interval(A("11"))));
    CHECK_FALSE(intervals_disjoint(address_interval(A("1")), address_interval(A("10"))));
}

TEST_CASE("Psi") {
    CHECK(product_embed(PrefixSet::parse("0,11"), {{GroupElement::identity()}, {0}}).is_identity());
    for (long long t = -4; t <= 4; ++t) {
        CHECK(product_embed(PrefixSet::parse(""), {{}, {t}}) == power(E("x0 x1^-1"), t));
    }
    const auto g = product_embed(PrefixSet::parse("0,11"), {{E("x0")}, {1}});
    CHECK(g == clone_map(A("0"), E("x0")) * clone_map(A("11"), E("x0 x1^-1")));
    CHECK(g.caret_count() == caret_count_of(g));
    CHECK_THROWS_AS(product_embed(PrefixSet::parse("0,11"), {{E("x0"), E("x1")}, {}}), Error);
    CHECK_THROWS_AS(product_embed(PrefixSet::parse("1,11"), {{E("x0")}, {}}), Error);
}

TEST_CASE("Psi is a homomorphism independent of factor order") {
    Rng rng(53);
    const auto ps = PrefixSet::parse("00,01,1");
    for (int i = 0; i < 150; ++i) {
        ProductElement a{{random_element(rng, 6), random_element(rng, 6)}, {rng.uniform(-5, 5), rng.uniform(-5, 5)}};
        ProductElement b{{random_element(rng, 6), random_element(rng, 6)}, {rng.uniform(-5, 5), rng.uniform(-5, 5)}};
        CHECK(product_embed(ps, a * b) == product_embed(ps, a) * product_embed(ps, b));

        auto factors = product_factors(ps, a);
        const auto expected = product_embed(ps, a);
        std::sort(factors.begin(), factors.end());
        int perms = 0;
        do {
            GroupElement prod;
            for (const auto& f : factors) prod = prod * f;
            CHECK(prod == expected);
        } while (++perms < 24 && std::next_permutation(factors.begin(), factors.end()));
    }
}

TEST_CASE("lemma claims on small inputs") {
    CHECK_FALSE(lemma_right_side(E("x0").normal_form()).pos_empty.has_value());
    CHECK_FALSE(lemma_right_side(E("x0").normal_form()).neg_empty.has_value());
    const auto c = lemma_right_side(E("x0^3 x1").normal_form());
    REQUIRE(c.pos_empty.has_value());
    CHECK(*c.pos_empty);
    // exponent sums for (x0 x1^-1)^k: i_k = k is not below k - 1
    CHECK_FALSE(lemma_right_side(power(E("x0 x1^-1"), 5).normal_form()).neg_empty.has_value());
}

TEST_CASE("lemma hypothesis does not force an empty right subtree") {
    // x0 absent: leaf 0 hangs directly off the root
    const auto a = E("x1^3 x2");
    REQUIRE(lemma_right_side(a.normal_form()).pos_empty == true);
    CHECK(to_string(a.pair().pos) == "(L ((((L (L L)) L) L) L))");
    CHECK_FALSE(right_subtree_of_root_empty(a.pair().pos));
    // a zero exponent at leaf 1 closes the left subtree after one caret
    const auto b = E("x0 x2^3 x3");
    REQUIRE(lemma_right_side(b.normal_form()).pos_empty == true);
    CHECK_FALSE(right_subtree_of_root_empty(b.pair().pos));
    // padding: the minimal positive tree has an empty right subtree, the
    // padded one does not
    const auto c = E("x0^2 x1 x4^-1");
    REQUIRE(lemma_right_side(c.normal_form()).pos_empty == true);
    const auto e = exponent_vector(c.normal_form().positive);
    CHECK(right_subtree_of_root_empty(tree_from_exponents(e, minimal_leaf_count(e))));
    CHECK_FALSE(right_subtree_of_root_empty(c.pair().pos));
}

TEST_CASE("right child of the root of T- for (x0 x1^-1)^k has an empty right subtree") {
    for (long long k = 3; k <= 12; ++k) {
        const auto neg = power(E("x0 x1^-1"), k).pair().neg;
        CHECK_FALSE(right_subtree_of_root_empty(neg));
        CHECK(right_subtree_of_root_empty(neg.right()));
    }
}

TEST_CASE("T+ of (x0 x1^-1)^3 has a nonempty root right subtree") {
    CHECK(right_subtree_of_root_empty(power(E("x0 x1^-1"), 3).pair().pos) == false);
}
