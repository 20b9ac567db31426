#include "lsat/slopes.hpp"

#include <algorithm>

#include "lsat/error.hpp"

namespace lsat {

Integer parse_integer(std::string_view text) {
    std::string s(text);
    auto first = s.find_first_not_of(" \t");
    auto last = s.find_last_not_of(" \t");
    if (first == std::string::npos) throw ParseError("empty integer");
    s = s.substr(first, last - first + 1);
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (start == s.size() ||
        !std::all_of(s.begin() + static_cast<long>(start), s.end(),
                     [](char c) { return c >= '0' && c <= '9'; })) {
        throw ParseError("not an integer: '" + std::string(text) + "'");
    }
    return Integer(s, 10);
}

Integer ceil_div(const Integer& num, const Integer& den) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

Slope::Slope(const Integer& p, const Integer& q) : num_(p), den_(q) {
    if (num_ == 0 && den_ == 0) throw ZeroZero();
    Integer g;
    mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    num_ /= g;
    den_ /= g;
    if (den_ < 0 || (den_ == 0 && num_ < 0)) {
        num_ = -num_;
        den_ = -den_;
    }
}

std::string Slope::str() const { return num_.get_str() + "/" + den_.get_str(); }

Slope Slope::parse(std::string_view text) {
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' ' || c == '\t'; }),
            s.end());
    if (s == "inf" || s == "+inf" || s == "-inf" || s == "∞" || s == "-∞" || s == "+∞") {
        return infinity();
    }
    auto slash = s.find('/');
    if (slash == std::string::npos) return Slope(parse_integer(s), Integer(1));
    return Slope(parse_integer(s.substr(0, slash)), parse_integer(s.substr(slash + 1)));
}

Integer slope_det(const Slope& a, const Slope& b) {
    return a.num() * b.den() - b.num() * a.den();
}

bool circular_less(const Slope& a, const Slope& b) {
    if (b.is_infinite()) return false;
    if (a.is_infinite()) return true;
    return slope_det(a, b) < 0;
}

bool slope_ccw(const Slope& a, const Slope& b, const Slope& c) {
    // With den >= 0 lifts, det(x, y) < 0 means x precedes y on the line read
    // with 1/0 as the largest element; the triple is positively ordered iff
    // that linear order is a cyclic rotation of (a, b, c).
    int ab = sgn(slope_det(a, b));
    int bc = sgn(slope_det(b, c));
    int ca = sgn(slope_det(c, a));
    if (ab == 0 || bc == 0 || ca == 0) throw NotDistinct();
    auto before = [](const Slope& x, const Slope& y, int det_sign) {
        if (x.is_infinite()) return false;
        if (y.is_infinite()) return true;
        return det_sign < 0;
    };
    bool a_b = before(a, b, ab);
    bool b_c = before(b, c, bc);
    bool c_a = before(c, a, ca);
    return (a_b && b_c) || (b_c && c_a) || (c_a && a_b);
}

std::vector<Slope> farey_enumerate(long max_den, const Integer& lo, const Integer& hi) {
    if (max_den < 1) throw InvalidArgument("max_den must be positive");
    std::vector<Slope> out;
    if (lo > hi) return out;
    // Farey sequence of [0, 1] by the next-term recurrence, shifted by each
    // integer part in the window.
    std::vector<std::pair<long, long>> unit;
    long a = 0, b = 1, c = 1, d = max_den;
    unit.emplace_back(a, b);
    while (c <= max_den) {
        long k = (max_den + b) / d;
        long e = k * c - a;
        long f = k * d - b;
        a = c;
        b = d;
        c = e;
        d = f;
        unit.emplace_back(a, b);
    }
    for (Integer base = lo; base < hi; ++base) {
        for (const auto& [p, q] : unit) {
            if (p == q) continue;  // 1/1 is the next unit's 0/1
            out.emplace_back(base * q + p, Integer(q));
        }
    }
    out.push_back(Slope::integer(hi));
    return out;
}

std::vector<Slope> farey_circle_sample(long max_den, long height) {
    std::vector<Slope> out;
    out.push_back(Slope::infinity());
    auto line = farey_enumerate(max_den, Integer(-height), Integer(height));
    out.insert(out.end(), line.begin(), line.end());
    return out;
}

}  // namespace lsat
