#pragma once

#include "ratbase/error.hpp"
#include "ratbase/integers.hpp"

#include <optional>

namespace ratbase {

/// Closed interval with exact rational endpoints, used to enclose real
/// values of infinite words.
struct RatInterval {
    Rat lo;
    Rat hi;

    RatInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi)
            throw Error(ErrorKind::InternalInconsistency,
                        "interval endpoints out of order");
    }

    Rat width() const { return hi - lo; }
    Rat midpoint() const { return (lo + hi) / 2; }

    bool contains(const Rat& x) const { return lo <= x && x <= hi; }
    bool contains(const RatInterval& o) const { return lo <= o.lo && o.hi <= hi; }
    bool contains_strictly(const Rat& x) const { return lo < x && x < hi; }
    bool intersects(const RatInterval& o) const { return lo <= o.hi && o.lo <= hi; }

    std::optional<RatInterval> intersect(const RatInterval& o) const {
        Rat l = std::max(lo, o.lo);
        Rat h = std::min(hi, o.hi);
        if (l > h) return std::nullopt;
        return RatInterval(l, h);
    }

    bool operator==(const RatInterval& o) const {
        return lo == o.lo && hi == o.hi;
    }
};

} // namespace ratbase
