#include "thompson/distortion.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>

namespace thompson {

EmbeddingSpec EmbeddingSpec::burillo() {
    EmbeddingSpec spec;
    spec.kind = Kind::Burillo;
    spec.addresses = PrefixSet({CloneAddress::parse("11"), CloneAddress()});
    spec.m = 1;
    spec.n = 1;
    return spec;
}

EmbeddingSpec EmbeddingSpec::product(PrefixSet addresses, std::size_t m, std::size_t n) {
    if (addresses.size() != m + 1) {
        throw Error("product embedding with m = " + std::to_string(m) + " needs " + std::to_string(m + 1) +
                    " addresses, got " + std::to_string(addresses.size()));
    }
    if (!is_prefix_free(addresses)) throw Error("address set '" + addresses.to_string() + "' is not prefix-free");
    EmbeddingSpec spec;
    spec.kind = Kind::Product;
    spec.addresses = std::move(addresses);
    spec.m = m;
    spec.n = n;
    return spec;
}

GroupElement embed(const EmbeddingSpec& spec, const ProductElement& e) {
    if (e.f_factors.size() != spec.m || e.z_factors.size() != spec.n) throw Error("input arity does not match");
    if (spec.kind == EmbeddingSpec::Kind::Burillo) return burillo_embed(e.f_factors[0], e.z_factors[0]);
    return product_embed(spec.addresses, e);
}

NormInterval factor_norm(const GroupElement& g, const CayleyBall& oracle) {
    if (auto len = oracle.known_length(g)) {
        const auto l = static_cast<long long>(*len);
        return {l, l};
    }
    const auto b = length_bounds(g);
    const long long lo = std::max(b.lower, static_cast<long long>(oracle.radius()) + 1);
    return {lo, std::max(lo, b.upper)};
}

namespace {

GroupElement sample_factor(const SamplerConfig& cfg, Rng& rng, const CayleyBall& oracle) {
    if (cfg.source == FactorSource::RandomTrees) {
        GroupElement g = random_element(rng, cfg.max_carets);
        while (cfg.nontrivial_factors && g.is_identity()) g = random_element(rng, cfg.max_carets);
        return g;
    }
    const std::int64_t shortest = cfg.nontrivial_factors ? 1 : 0;
    const auto r = static_cast<std::size_t>(rng.uniform(shortest, static_cast<std::int64_t>(oracle.radius())));
    const auto& sphere = oracle.sphere(r);
    return sphere[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(sphere.size()) - 1))];
}

} // namespace

ProductElement sample_input(const EmbeddingSpec& spec, const SamplerConfig& cfg, Rng& rng, const CayleyBall& oracle) {
    ProductElement e;
    for (std::size_t i = 0; i < spec.m; ++i) e.f_factors.push_back(sample_factor(cfg, rng, oracle));
    for (std::size_t j = 0; j < spec.n; ++j) {
        long long t = 0;
        if (cfg.positive_t_only) {
            t = rng.uniform(1, std::max(1LL, cfg.max_abs_t));
        } else if (cfg.nontrivial_factors) {
            t = rng.uniform(1, std::max(1LL, cfg.max_abs_t));
            if (rng.uniform(0, 1) == 1) t = -t;
        } else {
            t = rng.uniform(-cfg.max_abs_t, cfg.max_abs_t);
        }
        e.z_factors.push_back(t);
    }
    return e;
}

std::vector<DistortionSample> distortion_sweep(const EmbeddingSpec& spec, const SamplerConfig& cfg,
                                               CayleyBall& oracle) {
    oracle.grow_to(cfg.ball_radius);
    Rng rng(cfg.seed);
    std::vector<DistortionSample> out;
    out.reserve(cfg.samples);
    const std::string addresses = spec.addresses.to_string(';');
    for (std::size_t i = 0; i < cfg.samples; ++i) {
        DistortionSample s;
        s.index = i;
        s.m = spec.m;
        s.n = spec.n;
        s.addresses = addresses;
        s.input = sample_input(spec, cfg, rng, oracle);
        for (const auto& w : s.input.f_factors) s.input_norm = s.input_norm + factor_norm(w, oracle);
        for (long long t : s.input.z_factors) s.input_norm = s.input_norm + NormInterval{std::llabs(t), std::llabs(t)};
        s.image = embed(spec, s.input);
        s.image_estimate = estimate(s.image, &oracle);
        out.push_back(std::move(s));
    }
    return out;
}

void write_csv(std::ostream& out, const std::vector<DistortionSample>& samples) {
    out << kCsvHeader << '\n';
    for (const auto& s : samples) {
        out << s.m << ',' << s.n << ',' << s.addresses << ',';
        if (s.input_norm.exact()) {
            out << s.input_norm.lo;
        } else {
            out << s.input_norm.lo << ".." << s.input_norm.hi;
        }
        const auto& e = s.image_estimate;
        out << ',' << e.caret_count << ',' << e.bounds.lower << ',' << e.bounds.upper << ',';
        if (e.exact) out << *e.exact;
        out << '\n';
    }
}

bool burillo_upper_chain_holds(const DistortionSample& s) {
    const auto n = static_cast<long long>(s.image_estimate.caret_count);
    return 4 * n - 4 <= 4 * s.input_norm.lo + 12;
}

AffineFit fit_affine(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) throw Error("affine fit needs at least two paired points");
    const auto count = static_cast<double>(x.size());
    double mx = 0;
    double my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= count;
    my /= count;
    double sxx = 0;
    double sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0) throw Error("affine fit needs at least two distinct x values");
    const double slope = sxy / sxx;
    return {slope, my - slope * mx, x.size()};
}

EnvelopeFit fit_envelopes(const std::vector<DistortionSample>& samples) {
    std::vector<double> x_lo;
    std::vector<double> x_hi;
    std::vector<double> upper;
    std::vector<double> lower;
    for (const auto& s : samples) {
        x_lo.push_back(static_cast<double>(s.input_norm.lo));
        x_hi.push_back(static_cast<double>(s.input_norm.hi));
        upper.push_back(static_cast<double>(s.image_estimate.bounds.upper));
        lower.push_back(static_cast<double>(s.image_estimate.bounds.lower));
    }
    return {fit_affine(x_lo, upper), fit_affine(x_hi, lower)};
}

} // namespace thompson
