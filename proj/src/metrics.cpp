#include "thompson/metrics.hpp"

#include <algorithm>

namespace thompson {

std::size_t caret_count_of(const GroupElement& g) { return g.caret_count(); }

LengthBounds length_bounds(const GroupElement& g) {
    if (g.is_identity()) return {};
    const auto n = static_cast<long long>(g.caret_count());
    return {n - 2, 4 * n - 4, true};
}

CayleyBall::CayleyBall(std::size_t radius_cap, GeneratorOrder order) : cap_(radius_cap), order_(order) {
    for (std::size_t i = 0; i < order_.size(); ++i) {
        generators_[i] = GroupElement::generator(order_[i].index, order_[i].inverse);
    }
    lengths_.emplace(GroupElement::identity(), 0);
    spheres_.push_back({GroupElement::identity()});
}

void CayleyBall::grow_one() {
    const std::size_t r = radius() + 1;
    std::vector<GroupElement> next;
    for (const auto& g : spheres_.back()) {
        for (const auto& s : generators_) {
            GroupElement h = multiply(g, s);
            if (lengths_.try_emplace(h, r).second) next.push_back(std::move(h));
        }
    }
    std::sort(next.begin(), next.end());
    spheres_.push_back(std::move(next));
}

void CayleyBall::grow_to(std::size_t r) {
    if (r > cap_) {
        throw Error("radius " + std::to_string(r) + " exceeds the oracle cap " + std::to_string(cap_));
    }
    while (radius() < r) grow_one();
}

std::optional<std::size_t> CayleyBall::known_length(const GroupElement& g) const {
    auto it = lengths_.find(g);
    if (it == lengths_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> CayleyBall::exact_length(const GroupElement& g, std::size_t max_radius) {
    if (max_radius > cap_) {
        throw Error("radius " + std::to_string(max_radius) + " exceeds the oracle cap " + std::to_string(cap_));
    }
    for (;;) {
        if (auto len = known_length(g); len && *len <= max_radius) return len;
        if (radius() >= max_radius) return std::nullopt;
        grow_one();
    }
}

std::optional<std::size_t> exact_length(const GroupElement& g, std::size_t max_radius) {
    CayleyBall ball;
    return ball.exact_length(g, max_radius);
}

std::vector<BallEntry> enumerate_ball(std::size_t radius, std::size_t radius_cap) {
    CayleyBall ball(radius_cap);
    ball.grow_to(radius);
    std::vector<BallEntry> out;
    out.reserve(ball.ball_size());
    for (std::size_t r = 0; r <= radius; ++r) {
        for (const auto& g : ball.sphere(r)) out.push_back({g, r});
    }
    return out;
}

MetricEstimate estimate(const GroupElement& g, const CayleyBall* oracle) {
    MetricEstimate e{g.caret_count(), length_bounds(g), std::nullopt};
    if (oracle) e.exact = oracle->known_length(g);
    return e;
}

BoundsReport check_bounds_on_ball(CayleyBall& ball, std::size_t radius) {
    ball.grow_to(radius);
    BoundsReport report;
    report.radius = radius;
    for (std::size_t r = 1; r <= radius; ++r) {
        for (const auto& g : ball.sphere(r)) {
            ++report.checked;
            auto b = length_bounds(g);
            const auto len = static_cast<long long>(r);
            if (!b.defined || len < b.lower || len > b.upper) report.violations.push_back({g, r, b});
        }
    }
    return report;
}

BoundsReport check_bounds_on_ball(std::size_t radius) {
    CayleyBall ball;
    return check_bounds_on_ball(ball, radius);
}

} // namespace thompson
