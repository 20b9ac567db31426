#include "lsat/projective_sets.hpp"

#include <algorithm>

#include "lsat/error.hpp"

namespace lsat {

bool Arc::contains(const Slope& x) const {
    if (degenerate()) {
        if (start_closed != end_closed) return true;  // a full turn closed at one end
        return start_closed ? x == start : x != start;
    }
    if (x == start) return start_closed;
    if (x == end) return end_closed;
    return slope_ccw(start, x, end);
}

std::string Arc::str() const {
    if (is_point()) return "{" + start.str() + "}";
    if (is_punctured()) return "QP1 \\ {" + start.str() + "}";
    return std::string(start_closed ? "[" : "(") + start.str() + ", " + end.str() +
           (end_closed ? "]" : ")");
}

Slope gap_witness(const Slope& u, const Slope& v) {
    if (u == v) return u.is_infinite() ? Slope(0, 1) : Slope::infinity();
    if (u.is_infinite()) return Slope(v.num() - v.den(), v.den());
    if (v.is_infinite()) return Slope(u.num() + u.den(), u.den());
    if (slope_det(u, v) < 0) return Slope(u.num() + v.num(), u.den() + v.den());
    return Slope::infinity();  // the gap wraps through 1/0
}

namespace {

std::vector<Slope> sorted_breakpoints(const std::vector<Arc>& arcs) {
    std::vector<Slope> pts;
    pts.reserve(arcs.size() * 2);
    for (const auto& arc : arcs) {
        pts.push_back(arc.start);
        pts.push_back(arc.end);
    }
    std::sort(pts.begin(), pts.end(), circular_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

bool any_contains(const std::vector<Arc>& arcs, const Slope& x) {
    return std::any_of(arcs.begin(), arcs.end(), [&](const Arc& a) { return a.contains(x); });
}

}  // namespace

SlopeSet SlopeSet::full() {
    SlopeSet s;
    s.kind_ = Kind::Full;
    return s;
}

SlopeSet SlopeSet::from_arcs(const std::vector<Arc>& arcs) {
    if (arcs.empty()) return empty();
    // The breakpoints cut the circle into k points and k open gaps; each cell
    // lies entirely inside or outside the union. Cell 2i is point i, cell
    // 2i + 1 is the gap from point i to point i + 1 (mod k).
    const auto pts = sorted_breakpoints(arcs);
    const std::size_t k = pts.size();
    std::vector<char> in(2 * k);
    for (std::size_t i = 0; i < k; ++i) {
        in[2 * i] = any_contains(arcs, pts[i]);
        in[2 * i + 1] = any_contains(arcs, gap_witness(pts[i], pts[(i + 1) % k]));
    }
    if (std::all_of(in.begin(), in.end(), [](char c) { return c != 0; })) return full();
    if (std::none_of(in.begin(), in.end(), [](char c) { return c != 0; })) return empty();

    std::size_t first_out = 0;
    while (in[first_out]) ++first_out;

    SlopeSet out;
    out.kind_ = Kind::Arcs;
    const std::size_t n = 2 * k;
    std::size_t j = 1;
    while (j <= n) {
        std::size_t cell = (first_out + j) % n;
        if (!in[cell]) {
            ++j;
            continue;
        }
        std::size_t run_start = cell;
        std::size_t run_end = cell;
        while (j + 1 <= n && in[(first_out + j + 1) % n]) {
            ++j;
            run_end = (first_out + j) % n;
        }
        ++j;
        Arc arc{pts[run_start / 2], pts[0], true, true};
        arc.start_closed = run_start % 2 == 0;
        if (run_end % 2 == 0) {
            arc.end = pts[run_end / 2];
        } else {
            arc.end = pts[(run_end / 2 + 1) % k];
            arc.end_closed = false;
        }
        out.arcs_.push_back(arc);
    }
    std::sort(out.arcs_.begin(), out.arcs_.end(),
              [](const Arc& a, const Arc& b) { return circular_less(a.start, b.start); });
    return out;
}

bool SlopeSet::contains(const Slope& x) const {
    switch (kind_) {
        case Kind::Empty:
            return false;
        case Kind::Full:
            return true;
        case Kind::Arcs:
            return any_contains(arcs_, x);
    }
    return false;
}

std::vector<Slope> SlopeSet::breakpoints() const { return sorted_breakpoints(arcs_); }

std::string SlopeSet::str() const {
    if (kind_ == Kind::Empty) return "EMPTY";
    if (kind_ == Kind::Full) return "FULL";
    std::string out;
    for (const auto& arc : arcs_) {
        if (!out.empty()) out += ", ";
        out += arc.str();
    }
    return out;
}

namespace {

class SetParser {
public:
    explicit SetParser(std::string_view text) : s_(text) {}

    SlopeSet parse() {
        skip_space();
        if (consume_word("EMPTY")) return finish(SlopeSet::empty());
        if (consume_word("FULL")) return finish(SlopeSet::full());
        std::vector<Arc> arcs;
        while (true) {
            skip_space();
            if (pos_ >= s_.size()) break;
            arcs.push_back(item());
            skip_separators();
        }
        if (arcs.empty()) throw ParseError("empty slope set expression");
        return SlopeSet::from_arcs(arcs);
    }

private:
    SlopeSet finish(SlopeSet s) {
        skip_space();
        if (pos_ != s_.size()) fail("trailing input");
        return s;
    }

    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("slope set '" + std::string(s_) + "': " + why + " at offset " +
                         std::to_string(pos_));
    }

    void skip_space() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
    }

    void skip_separators() {
        while (pos_ < s_.size()) {
            if (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == ',' || s_[pos_] == 'U' ||
                s_[pos_] == 'u') {
                ++pos_;
            } else if (s_.substr(pos_, 3) == "∪") {
                pos_ += 3;
            } else {
                break;
            }
        }
    }

    bool consume_word(std::string_view w) {
        if (s_.substr(pos_, w.size()) == w) {
            pos_ += w.size();
            return true;
        }
        return false;
    }

    // Reads up to (not including) any of the stop characters.
    std::string token(std::string_view stops) {
        std::size_t begin = pos_;
        while (pos_ < s_.size() && stops.find(s_[pos_]) == std::string_view::npos) ++pos_;
        if (pos_ >= s_.size()) fail("unterminated arc");
        std::string t(s_.substr(begin, pos_ - begin));
        t.erase(std::remove_if(t.begin(), t.end(), [](char c) { return c == ' ' || c == '\t'; }),
                t.end());
        return t;
    }

    static bool is_neg_inf(const std::string& t) { return t == "-inf" || t == "-∞"; }
    static bool is_pos_inf(const std::string& t) {
        return t == "inf" || t == "+inf" || t == "∞" || t == "+∞";
    }

    Arc item() {
        if (consume_word("QP1")) {
            skip_space();
            if (!consume_word("\\")) fail("expected '\\' after QP1");
            skip_space();
            if (!consume_word("{")) fail("expected '{'");
            auto t = token("}");
            ++pos_;
            return Arc::punctured(Slope::parse(t));
        }
        char open = s_[pos_];
        if (open == '{') {
            ++pos_;
            auto t = token("}");
            ++pos_;
            return Arc::point(Slope::parse(t));
        }
        if (open != '[' && open != '(') fail("expected '[', '(', '{' or QP1");
        ++pos_;
        auto lo = token(",");
        ++pos_;
        auto hi = token("])");
        char close = s_[pos_++];
        bool start_closed = open == '[';
        bool end_closed = close == ']';
        if (is_neg_inf(lo) && is_pos_inf(hi)) {
            // The whole line read from -inf to +inf: both ends are 1/0.
            if (start_closed || end_closed) return Arc{Slope(0, 1), Slope(0, 1), true, false};
            return Arc::punctured(Slope::infinity());
        }
        Slope a = Slope::parse(lo);
        Slope b = Slope::parse(hi);
        if (a == b && start_closed != end_closed) return Arc{a, b, true, false};
        return Arc{a, b, start_closed, end_closed};
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

SlopeSet SlopeSet::parse(std::string_view text) { return SetParser(text).parse(); }

SlopeSet set_union(const SlopeSet& a, const SlopeSet& b) {
    if (a.is_full() || b.is_full()) return SlopeSet::full();
    if (a.is_empty()) return b;
    if (b.is_empty()) return a;
    std::vector<Arc> arcs = a.arcs();
    arcs.insert(arcs.end(), b.arcs().begin(), b.arcs().end());
    return SlopeSet::from_arcs(arcs);
}

SlopeSet interior(const SlopeSet& s) {
    if (s.kind() != SlopeSet::Kind::Arcs) return s;
    std::vector<Arc> arcs;
    for (const auto& arc : s.arcs()) {
        if (arc.is_point()) continue;
        arcs.push_back(Arc{arc.start, arc.end, false, false});
    }
    return SlopeSet::from_arcs(arcs);
}

CoverReport cover_report(const SlopeSet& a, const SlopeSet& b) {
    CoverReport report;
    if (a.is_full() || b.is_full()) {
        report.covered = true;
        return report;
    }
    if (a.is_empty() && b.is_empty()) {
        report.uncovered = Slope::infinity();
        report.cells_checked = 1;
        return report;
    }
    std::vector<Arc> arcs = a.arcs();
    arcs.insert(arcs.end(), b.arcs().begin(), b.arcs().end());
    const auto pts = sorted_breakpoints(arcs);
    auto covered = [&](const Slope& x) { return a.contains(x) || b.contains(x); };
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (const Slope& x : {pts[i], gap_witness(pts[i], pts[(i + 1) % pts.size()])}) {
            ++report.cells_checked;
            if (!covered(x)) {
                report.uncovered = x;
                return report;
            }
        }
    }
    report.covered = true;
    return report;
}

bool covers_circle(const SlopeSet& a, const SlopeSet& b) { return cover_report(a, b).covered; }

bool rr_shape_check(const SlopeSet& s, const Slope& longitude) {
    if (s.is_empty()) return true;
    if (s.is_full() || s.arcs().size() != 1) return false;
    const Arc& arc = s.arcs().front();
    if (arc.is_punctured()) return arc.start == longitude;
    return arc.start_closed && arc.end_closed;
}

}  // namespace lsat
