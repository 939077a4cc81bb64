#pragma once

// Caret-count metric estimates and an exact word-metric oracle for the
// generating set {x0, x1} by breadth-first search of the Cayley graph.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "thompson/group.hpp"

namespace thompson {

inline constexpr std::size_t kDefaultRadiusCap = 9;

std::size_t caret_count_of(const GroupElement& g);

/// N-2 <= |g| <= 4N-4 for non-identity g. For the identity `defined` is false
/// and both bounds are 0.
struct LengthBounds {
    long long lower = 0;
    long long upper = 0;
    bool defined = false;
};

LengthBounds length_bounds(const GroupElement& g);

struct MetricEstimate {
    std::size_t caret_count = 0;
    LengthBounds bounds;
    std::optional<std::size_t> exact;
};

struct BallEntry {
    GroupElement element;
    std::size_t length = 0;
};

/// Generator letters in BFS expansion order.
using GeneratorOrder = std::array<GenLetter, 4>;
inline constexpr GeneratorOrder kDefaultGeneratorOrder{{{0, false}, {0, true}, {1, false}, {1, true}}};

/// Ball around the identity in the Cayley graph of F with respect to {x0, x1},
/// grown one sphere at a time on demand.
class CayleyBall {
public:
    explicit CayleyBall(std::size_t radius_cap = kDefaultRadiusCap, GeneratorOrder order = kDefaultGeneratorOrder);

    std::size_t radius_cap() const noexcept { return cap_; }
    /// Radius explored so far.
    std::size_t radius() const noexcept { return spheres_.size() - 1; }

    /// Throws Error when `radius` exceeds the cap.
    void grow_to(std::size_t radius);

    /// Exact length if `g` lies in the explored ball.
    std::optional<std::size_t> known_length(const GroupElement& g) const;

    /// |g| if it is at most `max_radius`, growing the ball as needed.
    std::optional<std::size_t> exact_length(const GroupElement& g, std::size_t max_radius);

    const std::vector<GroupElement>& sphere(std::size_t r) const { return spheres_.at(r); }
    std::size_t ball_size() const noexcept { return lengths_.size(); }

private:
    void grow_one();

    std::size_t cap_;
    GeneratorOrder order_;
    std::array<GroupElement, 4> generators_;
    std::unordered_map<GroupElement, std::size_t> lengths_;
    std::vector<std::vector<GroupElement>> spheres_;
};

/// One-shot helper: exact length within `max_radius` (cap kDefaultRadiusCap).
std::optional<std::size_t> exact_length(const GroupElement& g, std::size_t max_radius);

/// All elements with |g| <= radius, ordered by length then tree pair.
std::vector<BallEntry> enumerate_ball(std::size_t radius, std::size_t radius_cap = kDefaultRadiusCap);

MetricEstimate estimate(const GroupElement& g, const CayleyBall* oracle = nullptr);

struct BoundViolation {
    GroupElement element;
    std::size_t length = 0;
    LengthBounds bounds;
};

struct BoundsReport {
    std::size_t radius = 0;
    std::size_t checked = 0;
    std::vector<BoundViolation> violations;

    bool passed() const noexcept { return violations.empty(); }
};

/// Checks N-2 <= |g| <= 4N-4 on every non-identity element of the ball.
BoundsReport check_bounds_on_ball(CayleyBall& ball, std::size_t radius);
BoundsReport check_bounds_on_ball(std::size_t radius);

} // namespace thompson
