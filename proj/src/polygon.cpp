#include "crystalline/polygon.hpp"

#include <algorithm>

namespace crystalline {

Polygon Polygon::from_slopes(PolyKind kind, std::vector<Rat> slopes) {
    if (slopes.empty()) fail(Errc::param_mismatch, "polygon needs at least one slope");
    std::sort(slopes.begin(), slopes.end());
    Polygon p;
    p.kind_ = kind;
    for (const Rat& s : slopes) {
        if (kind == PolyKind::hodge && (!s.is_integer() || s.num < 0))
            fail(Errc::internal, "Hodge slopes must be nonnegative integers");
        if (!p.segs_.empty() && p.segs_.back().slope == s)
            ++p.segs_.back().mult;
        else
            p.segs_.push_back({s, 1});
    }
    if (kind == PolyKind::newton) {
        // every vertex has integer coordinates
        Rat y(0);
        for (const auto& seg : p.segs_) {
            y = y + seg.mult * seg.slope;
            if (!y.is_integer()) fail(Errc::internal, "Newton break point with non-integer coordinates");
        }
    }
    return p;
}

long long Polygon::rank() const {
    long long r = 0;
    for (const auto& s : segs_) r += s.mult;
    return r;
}

std::vector<Rat> Polygon::slopes() const {
    std::vector<Rat> out;
    for (const auto& s : segs_)
        for (long long i = 0; i < s.mult; ++i) out.push_back(s.slope);
    return out;
}

Rat Polygon::value_at(long long i) const {
    if (i < 0 || i > rank()) fail(Errc::index_out_of_range, "polygon abscissa out of range");
    Rat y(0);
    long long x = 0;
    for (const auto& seg : segs_) {
        if (i <= x + seg.mult) return y + (i - x) * seg.slope;
        y = y + seg.mult * seg.slope;
        x += seg.mult;
    }
    return y;
}

std::vector<BreakPoint> break_points(const Polygon& p) {
    std::vector<BreakPoint> out{{0, 0}};
    Rat y(0);
    long long x = 0;
    for (const auto& seg : p.segments()) {
        y = y + seg.mult * seg.slope;
        x += seg.mult;
        out.push_back({x, y.num});  // integrality enforced at construction
    }
    return out;
}

bool has_break_point(const Polygon& p, const BreakPoint& p0) {
    auto bps = break_points(p);
    return std::find(bps.begin(), bps.end(), p0) != bps.end();
}

bool lies_above(const Polygon& p1, const Polygon& p2) {
    if (p1.rank() != p2.rank()) fail(Errc::rank_mismatch, "polygon rank mismatch");
    for (long long i = 0; i <= p1.rank(); ++i)
        if (p1.value_at(i) < p2.value_at(i)) return false;
    return true;
}

}  // namespace crystalline
