#pragma once

#include <string>
#include <string_view>

#include "lsat/projective_sets.hpp"
#include "lsat/slopes.hpp"

namespace lsat {

/// Integer change of basis on a boundary torus, acting on slopes by
/// p/q -> (a p + b q) / (c p + d q). The determinant is always +1 or -1.
class GluingMap {
public:
    GluingMap(const Integer& a, const Integer& b, const Integer& c, const Integer& d);
    GluingMap(long a, long b, long c, long d)
        : GluingMap(Integer(a), Integer(b), Integer(c), Integer(d)) {}

    static GluingMap identity() { return GluingMap(1, 0, 0, 1); }

    const Integer& a() const noexcept { return a_; }
    const Integer& b() const noexcept { return b_; }
    const Integer& c() const noexcept { return c_; }
    const Integer& d() const noexcept { return d_; }
    int det() const;

    Slope apply(const Slope& x) const;

    /// "[[a,b],[c,d]]"
    std::string str() const;
    static GluingMap parse(std::string_view text);

    friend bool operator==(const GluingMap& m, const GluingMap& n) {
        return m.a_ == n.a_ && m.b_ == n.b_ && m.c_ == n.c_ && m.d_ == n.d_;
    }

private:
    Integer a_, b_, c_, d_;
};

/// The map applying `second` first, then `first`.
GluingMap compose(const GluingMap& first, const GluingMap& second);
GluingMap inverse(const GluingMap& m);

/// (0 1; 1 0): meridian of one side to the 0-framed longitude of the other,
/// and longitude to meridian. Acts by p/q -> q/p.
GluingMap meridian_longitude_swap();

/// Image of a slope set. Orientation-reversing maps (det = -1) send the arc
/// from x to y onto the arc from m(y) to m(x), with closure flags swapped.
SlopeSet image_of_set(const GluingMap& m, const SlopeSet& s);

}  // namespace lsat
