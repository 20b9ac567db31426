#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace lsat {

using Integer = mpz_class;

/// Parses a decimal integer, throwing ParseError on malformed input.
Integer parse_integer(std::string_view text);

/// Ceiling of num / den for den > 0.
Integer ceil_div(const Integer& num, const Integer& den);

/// A slope on a torus boundary: an element of QP^1 = Q u {1/0}.
///
/// The pair (num, den) is primitive with den >= 0, and infinity is stored
/// as exactly (1, 0), so two slopes are equal iff their fields are equal.
class Slope {
public:
    Slope(const Integer& p, const Integer& q);
    Slope(long p, long q) : Slope(Integer(p), Integer(q)) {}

    static Slope infinity() { return Slope(1, 0); }
    static Slope integer(const Integer& n) { return Slope(n, Integer(1)); }

    const Integer& num() const noexcept { return num_; }
    const Integer& den() const noexcept { return den_; }
    bool is_infinite() const noexcept { return den_ == 0; }

    /// "p/q"; infinity prints as "1/0".
    std::string str() const;

    /// Accepts "p/q", "p", and "inf" / "-inf" / "∞" for 1/0.
    static Slope parse(std::string_view text);

    friend bool operator==(const Slope& a, const Slope& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Slope& a, const Slope& b) { return !(a == b); }

private:
    Integer num_;
    Integer den_;
};

/// a.num * b.den - b.num * a.den. Zero iff a == b.
Integer slope_det(const Slope& a, const Slope& b);

/// True iff b lies strictly inside the arc traversed from a to c in the
/// positive direction of QP^1 (rationals increasing, wrapping through 1/0).
/// Throws NotDistinct unless a, b, c are pairwise distinct.
bool slope_ccw(const Slope& a, const Slope& b, const Slope& c);

/// Total order on QP^1 read circularly starting at 1/0: infinity first,
/// then the rationals in increasing order.
bool circular_less(const Slope& a, const Slope& b);

/// The Farey sequence of order max_den restricted to the window [lo, hi],
/// in increasing order.
std::vector<Slope> farey_enumerate(long max_den, const Integer& lo, const Integer& hi);

/// 1/0 followed by every slope with den <= max_den and |value| <= height,
/// sorted circularly from infinity. Used as a finite sample of QP^1.
std::vector<Slope> farey_circle_sample(long max_den, long height);

}  // namespace lsat
