#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lsat/slopes.hpp"

namespace lsat {

/// A circular arc of QP^1 traversed from start to end in the positive
/// direction. When start == end the arc is degenerate: both ends closed is
/// the single point, both ends open is QP^1 with that point removed.
struct Arc {
    Slope start;
    Slope end;
    bool start_closed = true;
    bool end_closed = true;

    static Arc closed(const Slope& a, const Slope& b) { return {a, b, true, true}; }
    static Arc open(const Slope& a, const Slope& b) { return {a, b, false, false}; }
    static Arc point(const Slope& x) { return {x, x, true, true}; }
    static Arc punctured(const Slope& x) { return {x, x, false, false}; }

    bool degenerate() const { return start == end; }
    bool is_point() const { return degenerate() && start_closed && end_closed; }
    bool is_punctured() const { return degenerate() && !start_closed && !end_closed; }

    bool contains(const Slope& x) const;
    std::string str() const;

    friend bool operator==(const Arc& a, const Arc& b) {
        return a.start == b.start && a.end == b.end && a.start_closed == b.start_closed &&
               a.end_closed == b.end_closed;
    }
};

/// A finite union of arcs of QP^1 in canonical form: pairwise disjoint,
/// touching arcs merged, sorted by start circularly from 1/0. Empty and Full
/// are separate variants, so equal point sets compare equal.
class SlopeSet {
public:
    enum class Kind { Empty, Full, Arcs };

    SlopeSet() = default;
    static SlopeSet empty() { return SlopeSet(); }
    static SlopeSet full();
    static SlopeSet from_arc(const Arc& arc) { return from_arcs({arc}); }
    /// Canonicalizes an arbitrary list of arcs (any order, overlaps allowed).
    static SlopeSet from_arcs(const std::vector<Arc>& arcs);

    Kind kind() const noexcept { return kind_; }
    bool is_empty() const noexcept { return kind_ == Kind::Empty; }
    bool is_full() const noexcept { return kind_ == Kind::Full; }
    const std::vector<Arc>& arcs() const noexcept { return arcs_; }

    bool contains(const Slope& x) const;

    /// Every endpoint of every arc, deduplicated, sorted circularly from 1/0.
    std::vector<Slope> breakpoints() const;

    /// "EMPTY", "FULL", "QP1 \ {l}", or arcs such as "[1/2, 1/7], {0/1}".
    std::string str() const;
    /// Inverse of str(); also accepts inf / -inf endpoints and "U" or "∪"
    /// between arcs, so "[-inf, 2) U (7, inf]" reads as one arc through 1/0.
    static SlopeSet parse(std::string_view text);

    friend bool operator==(const SlopeSet& a, const SlopeSet& b) {
        return a.kind_ == b.kind_ && a.arcs_ == b.arcs_;
    }

private:
    Kind kind_ = Kind::Empty;
    std::vector<Arc> arcs_;
};

SlopeSet set_union(const SlopeSet& a, const SlopeSet& b);

/// Topological interior in QP^1: closed endpoints of non-degenerate arcs
/// open up and isolated points vanish.
SlopeSet interior(const SlopeSet& s);

struct CoverReport {
    bool covered = false;
    std::optional<Slope> uncovered;  // a slope in neither set, when not covered
    std::size_t cells_checked = 0;   // breakpoints plus one witness per gap
};

/// Exact cover test: checks every breakpoint of either set, and one interior
/// witness in every gap between consecutive breakpoints.
CoverReport cover_report(const SlopeSet& a, const SlopeSet& b);

/// True iff every slope lies in a or in b.
bool covers_circle(const SlopeSet& a, const SlopeSet& b);

/// True iff s is empty, a point, a single closed arc, or QP^1 minus the
/// longitude: the only shapes an L-space slope set can take.
bool rr_shape_check(const SlopeSet& s, const Slope& longitude);

/// A slope strictly inside the positive arc from u to v (u == v: any slope
/// other than u).
Slope gap_witness(const Slope& u, const Slope& v);

}  // namespace lsat
