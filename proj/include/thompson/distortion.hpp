#pragma once

// Distortion measurement for the embeddings F x Z -> F and F^m x Z^n -> F.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "thompson/embeddings.hpp"
#include "thompson/metrics.hpp"
#include "thompson/sampling.hpp"

namespace thompson {

struct EmbeddingSpec {
    enum class Kind { Burillo, Product };

    Kind kind = Kind::Burillo;
    PrefixSet addresses;
    std::size_t m = 1;
    std::size_t n = 1;

    /// Phi: one F factor cloned at "11", one Z factor generated by x0 x1^-1.
    static EmbeddingSpec burillo();
    /// Psi over s_1..s_{m+1}; throws Error unless prefix-free with m+1 entries.
    static EmbeddingSpec product(PrefixSet addresses, std::size_t m, std::size_t n);
};

GroupElement embed(const EmbeddingSpec& spec, const ProductElement& e);

enum class FactorSource {
    /// reduced pairs of random trees with at most max_carets carets
    RandomTrees,
    /// uniform length in [0, ball_radius], then uniform on that sphere
    Ball,
};

struct SamplerConfig {
    std::uint64_t seed = 0;
    std::size_t samples = 1000;
    std::size_t max_carets = 12;
    long long max_abs_t = 20;
    bool positive_t_only = false;
    /// Draw only non-identity F factors and nonzero t, the regime in which
    /// caret counts add across factors.
    bool nontrivial_factors = false;
    FactorSource source = FactorSource::RandomTrees;
    /// Oracle radius used for exact factor and image lengths.
    std::size_t ball_radius = 8;
};

/// Closed interval of possible norms. Exact when lo == hi.
struct NormInterval {
    long long lo = 0;
    long long hi = 0;

    bool exact() const noexcept { return lo == hi; }
    friend NormInterval operator+(NormInterval a, NormInterval b) { return {a.lo + b.lo, a.hi + b.hi}; }
};

/// |g| if the oracle knows it; otherwise [max(N-2, R+1), 4N-4] where R is the
/// explored radius.
NormInterval factor_norm(const GroupElement& g, const CayleyBall& oracle);

struct DistortionSample {
    std::size_t index = 0;
    std::size_t m = 0;
    std::size_t n = 0;
    std::string addresses;
    ProductElement input;
    /// sum of F-factor norms plus sum of |t_j|
    NormInterval input_norm;
    GroupElement image;
    MetricEstimate image_estimate;
};

ProductElement sample_input(const EmbeddingSpec& spec, const SamplerConfig& cfg, Rng& rng, const CayleyBall& oracle);

/// Grows `oracle` to cfg.ball_radius, then draws cfg.samples inputs.
std::vector<DistortionSample> distortion_sweep(const EmbeddingSpec& spec, const SamplerConfig& cfg,
                                               CayleyBall& oracle);

inline constexpr const char* kCsvHeader = "m,n,addresses,input_norm,caret_count,lower,upper,exact";

/// One row per sample in index order. Addresses are ';'-joined; an inexact
/// input norm prints as "lo..hi"; `exact` is empty when unknown.
void write_csv(std::ostream& out, const std::vector<DistortionSample>& samples);

/// 4 N(Phi(w,t)) - 4 <= 4 |(w,t)| + 12, using the smallest admissible input norm.
bool burillo_upper_chain_holds(const DistortionSample& s);

struct AffineFit {
    double slope = 0;
    double intercept = 0;
    std::size_t points = 0;
};

/// Ordinary least squares y ~ intercept + slope * x.
AffineFit fit_affine(const std::vector<double>& x, const std::vector<double>& y);

struct EnvelopeFit {
    /// image upper bound 4N-4 against the smallest admissible input norm
    AffineFit upper;
    /// image lower bound N-2 against the largest admissible input norm
    AffineFit lower;
};

EnvelopeFit fit_envelopes(const std::vector<DistortionSample>& samples);

} // namespace thompson
