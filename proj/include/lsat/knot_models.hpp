#pragma once

#include <string>

#include "lsat/projective_sets.hpp"
#include "lsat/slopes.hpp"

namespace lsat {

/// Declarative facts about a knot in S^3. The engine never decides the
/// L-space flags of an arbitrary knot; built-in families compute them and
/// everything else is a user assertion.
struct KnotFacts {
    std::string name;
    Integer genus;
    bool is_lspace = false;      // admits a positive L-space surgery
    bool is_neg_lspace = false;  // admits a negative L-space surgery
    bool is_fibered = false;
    bool is_unknot = false;

    /// Throws InvalidKnotFacts when the flags contradict each other.
    void validate() const;

    friend bool operator==(const KnotFacts& a, const KnotFacts& b) {
        return a.name == b.name && a.genus == b.genus && a.is_lspace == b.is_lspace &&
               a.is_neg_lspace == b.is_neg_lspace && a.is_fibered == b.is_fibered &&
               a.is_unknot == b.is_unknot;
    }
};

KnotFacts unknot();

/// T(p, m) with p >= 2 the number of strands. m = +-1 is the unknot and
/// negative m gives the mirror family.
KnotFacts torus_knot(const Integer& p, const Integer& m);

/// The mirror image: genus and fiberedness kept, L-space flags exchanged.
KnotFacts mirror(const KnotFacts& k);

/// L(M_K) for the exterior of a nontrivial knot: [2g-1, 1/0] for an
/// L-space knot, [1/0, -2g+1] for a negative one, EMPTY otherwise.
/// Throws UnknotCompanion for the unknot.
SlopeSet lspace_slope_set(const KnotFacts& k);

/// Whether the (p, q)-cable of the companion is an L-space knot, by the
/// exact cabling criterion q > p (2g - 1). Cables of the unknot are torus
/// knots and use the torus-knot criterion instead.
bool cable_is_lspace_exact(const KnotFacts& companion, const Integer& p, const Integer& q);

/// Facts for the (p, q)-cable. The genus p g + (p - 1)(|q| - 1) / 2 and
/// flags are derived rather than asserted.
KnotFacts cable_knot(const KnotFacts& companion, const Integer& p, const Integer& q);

}  // namespace lsat
