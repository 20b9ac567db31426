#include "lsat/gluing.hpp"

#include "lsat/error.hpp"

namespace lsat {

GluingMap::GluingMap(const Integer& a, const Integer& b, const Integer& c, const Integer& d)
    : a_(a), b_(b), c_(c), d_(d) {
    Integer det = a_ * d_ - b_ * c_;
    if (det != 1 && det != -1) {
        throw InvalidArgument("gluing map " + str() + " has determinant " + det.get_str() +
                              ", expected +1 or -1");
    }
}

int GluingMap::det() const { return a_ * d_ - b_ * c_ > 0 ? 1 : -1; }

Slope GluingMap::apply(const Slope& x) const {
    return Slope(a_ * x.num() + b_ * x.den(), c_ * x.num() + d_ * x.den());
}

std::string GluingMap::str() const {
    return "[[" + a_.get_str() + "," + b_.get_str() + "],[" + c_.get_str() + "," + d_.get_str() +
           "]]";
}

GluingMap GluingMap::parse(std::string_view text) {
    std::vector<Integer> entries;
    std::string digits;
    auto flush = [&] {
        if (!digits.empty()) entries.push_back(parse_integer(digits));
        digits.clear();
    };
    for (char c : text) {
        if (c == '-' || (c >= '0' && c <= '9')) {
            digits += c;
        } else if (c == '[' || c == ']' || c == ',' || c == ' ') {
            flush();
        } else {
            throw ParseError("gluing map '" + std::string(text) + "': unexpected character");
        }
    }
    flush();
    if (entries.size() != 4) throw ParseError("gluing map needs four entries: " + std::string(text));
    return GluingMap(entries[0], entries[1], entries[2], entries[3]);
}

GluingMap compose(const GluingMap& m, const GluingMap& n) {
    return GluingMap(m.a() * n.a() + m.b() * n.c(), m.a() * n.b() + m.b() * n.d(),
                     m.c() * n.a() + m.d() * n.c(), m.c() * n.b() + m.d() * n.d());
}

GluingMap inverse(const GluingMap& m) {
    Integer s = m.det();
    return GluingMap(s * m.d(), -s * m.b(), -s * m.c(), s * m.a());
}

GluingMap meridian_longitude_swap() { return GluingMap(0, 1, 1, 0); }

SlopeSet image_of_set(const GluingMap& m, const SlopeSet& s) {
    if (s.kind() != SlopeSet::Kind::Arcs) return s;
    const bool reverses = m.det() < 0;
    std::vector<Arc> arcs;
    arcs.reserve(s.arcs().size());
    for (const auto& arc : s.arcs()) {
        if (reverses) {
            arcs.push_back(Arc{m.apply(arc.end), m.apply(arc.start), arc.end_closed,
                               arc.start_closed});
        } else {
            arcs.push_back(
                Arc{m.apply(arc.start), m.apply(arc.end), arc.start_closed, arc.end_closed});
        }
    }
    return SlopeSet::from_arcs(arcs);
}

}  // namespace lsat
