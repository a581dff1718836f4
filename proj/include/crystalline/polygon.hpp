#pragma once

#include <vector>

#include "crystalline/rational.hpp"

namespace crystalline {

enum class PolyKind { hodge, newton };

struct Segment {
    Rat slope;
    long long mult = 0;
};

struct BreakPoint {
    long long x = 0;
    long long y = 0;
    friend bool operator==(const BreakPoint&, const BreakPoint&) = default;
    friend auto operator<=>(const BreakPoint&, const BreakPoint&) = default;
};

// Hodge or Newton polygon: ascending slopes with multiplicities.
class Polygon {
public:
    Polygon() = default;

    // Sorts and merges equal slopes; validates the kind invariants
    // (Hodge: nonnegative integer slopes; Newton: integer vertex coordinates).
    static Polygon from_slopes(PolyKind kind, std::vector<Rat> slopes);

    PolyKind kind() const { return kind_; }
    const std::vector<Segment>& segments() const { return segs_; }
    long long rank() const;
    std::vector<Rat> slopes() const;  // expanded, ascending

    // Value of the polygon function at integer abscissa 0 <= i <= rank.
    Rat value_at(long long i) const;

    friend bool operator==(const Polygon& a, const Polygon& b) {
        return a.kind_ == b.kind_ && a.segs_.size() == b.segs_.size() &&
               [&] {
                   for (size_t k = 0; k < a.segs_.size(); ++k)
                       if (!(a.segs_[k].slope == b.segs_[k].slope) || a.segs_[k].mult != b.segs_[k].mult)
                           return false;
                   return true;
               }();
    }

private:
    PolyKind kind_ = PolyKind::newton;
    std::vector<Segment> segs_;
};

// All vertices of the polygon graph, endpoints included.
std::vector<BreakPoint> break_points(const Polygon& p);

bool has_break_point(const Polygon& p, const BreakPoint& p0);

// Newton_{p1}(i) >= Newton_{p2}(i) for all integers i in [0, rank].
// RankMismatch if the ranks differ. Endpoints need not be equal.
bool lies_above(const Polygon& p1, const Polygon& p2);

}  // namespace crystalline
