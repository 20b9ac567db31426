#include "lsat/knot_models.hpp"

#include "lsat/error.hpp"

namespace lsat {

namespace {

Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

void require_cable_params(const Integer& p, const Integer& q) {
    if (p <= 1) throw InvalidArgument("cable parameter p must exceed 1, got " + p.get_str());
    if (gcd(p, q) != 1) throw NotCoprime("(" + p.get_str() + ", " + q.get_str() + ")");
}

}  // namespace

void KnotFacts::validate() const {
    auto bad = [this](const std::string& why) {
        throw InvalidKnotFacts("knot '" + name + "': " + why);
    };
    if (genus < 0) bad("negative genus");
    if (is_unknot && (genus != 0 || !is_lspace || !is_neg_lspace || !is_fibered)) {
        bad("the unknot has genus 0 and is a fibered L-space knot of both signs");
    }
    if (genus >= 1 && is_lspace && is_neg_lspace) {
        bad("a nontrivial knot cannot be both an L-space and a negative L-space knot");
    }
    if ((is_lspace || is_neg_lspace) && !is_fibered) bad("L-space knots are fibered");
}

KnotFacts unknot() { return KnotFacts{"unknot", Integer(0), true, true, true, true}; }

KnotFacts torus_knot(const Integer& p, const Integer& m) {
    if (p < 2) throw InvalidArgument("torus knot needs p >= 2, got " + p.get_str());
    if (m == 0 || gcd(p, m) != 1) throw NotCoprime("T(" + p.get_str() + ", " + m.get_str() + ")");
    Integer abs_m = abs(m);
    KnotFacts k;
    k.name = "T(" + p.get_str() + "," + m.get_str() + ")";
    k.genus = (p - 1) * (abs_m - 1) / 2;
    k.is_lspace = m >= -1;
    k.is_neg_lspace = m <= 1;
    k.is_fibered = true;
    k.is_unknot = abs_m == 1;
    return k;
}

KnotFacts mirror(const KnotFacts& k) {
    KnotFacts m = k;
    m.name = k.is_unknot ? k.name : "-(" + k.name + ")";
    std::swap(m.is_lspace, m.is_neg_lspace);
    return m;
}

SlopeSet lspace_slope_set(const KnotFacts& k) {
    if (k.is_unknot) throw UnknotCompanion();
    const Integer bound = 2 * k.genus - 1;
    if (k.is_lspace) return SlopeSet::from_arc(Arc::closed(Slope::integer(bound), Slope::infinity()));
    if (k.is_neg_lspace) {
        return SlopeSet::from_arc(Arc::closed(Slope::infinity(), Slope::integer(-bound)));
    }
    return SlopeSet::empty();
}

bool cable_is_lspace_exact(const KnotFacts& companion, const Integer& p, const Integer& q) {
    require_cable_params(p, q);
    if (companion.is_unknot) return torus_knot(p, q).is_lspace;
    return companion.is_lspace && q > p * (2 * companion.genus - 1);
}

KnotFacts cable_knot(const KnotFacts& companion, const Integer& p, const Integer& q) {
    require_cable_params(p, q);
    if (companion.is_unknot) return torus_knot(p, q);
    KnotFacts k;
    k.name = companion.name + "_{" + p.get_str() + "," + q.get_str() + "}";
    k.genus = p * companion.genus + (p - 1) * (abs(q) - 1) / 2;
    k.is_lspace = cable_is_lspace_exact(companion, p, q);
    // The mirror of K_{p,q} is (-K)_{p,-q}.
    k.is_neg_lspace = cable_is_lspace_exact(mirror(companion), p, Integer(-q));
    k.is_fibered = companion.is_fibered;
    k.is_unknot = false;
    return k;
}

}  // namespace lsat
