#include <numeric>

#include "doctest.h"
#include "lsat/error.hpp"
#include "lsat/knot_models.hpp"
#include "lsat/patterns.hpp"
#include "oracles.hpp"

using namespace lsat;

namespace {

// Standard braid word (s_{p-1} ... s_1)^|m| for T(p, m), with signs following m.
std::vector<int> torus_word(int p, int m) {
    std::vector<int> w;
    for (int k = 0; k < std::abs(m); ++k) {
        for (int i = p - 1; i >= 1; --i) w.push_back(m > 0 ? i : -i);
    }
    return w;
}

}  // namespace

TEST_CASE("torus knot facts") {
    auto t = torus_knot(2, 3);
    CHECK(t.genus == 1);
    CHECK(t.is_lspace);
    CHECK_FALSE(t.is_neg_lspace);
    CHECK(t.is_fibered);

    auto u = torus_knot(2, -1);
    CHECK(u.is_unknot);
    CHECK(u.genus == 0);
    CHECK(u.is_lspace);
    CHECK(u.is_neg_lspace);

    auto n = torus_knot(3, -4);
    CHECK(n.is_neg_lspace);
    CHECK_FALSE(n.is_lspace);

    CHECK_THROWS_AS(torus_knot(2, 4), NotCoprime);
    CHECK_THROWS_AS(torus_knot(1, 3), InvalidArgument);
    CHECK_THROWS_AS(torus_knot(3, 0), NotCoprime);
}

TEST_CASE("torus genus formula against seifert and alexander oracles") {
    for (int p = 2; p <= 6; ++p) {
        for (int m = -6; m <= 6; ++m) {
            if (m == 0 || std::gcd(p, m) != 1) continue;
            auto k = torus_knot(p, m);
            auto word = torus_word(p, m);
            CHECK(k.genus == oracle::seifert_algorithm_genus(p, word));
            if (m > 0) CHECK(k.genus == oracle::alexander_half_span(p, word));
        }
    }
}

TEST_CASE("mirror duality") {
    for (long p = 2; p <= 7; ++p) {
        for (long m = -15; m <= 15; ++m) {
            if (m == 0 || std::gcd(p, m) != 1) continue;
            CHECK(torus_knot(p, m).is_lspace == torus_knot(p, -m).is_neg_lspace);
            auto mk = mirror(torus_knot(p, m));
            CHECK(mk.is_lspace == torus_knot(p, -m).is_lspace);
            CHECK(mk.genus == torus_knot(p, m).genus);
        }
    }
}

TEST_CASE("lspace slope sets") {
    CHECK(lspace_slope_set(torus_knot(2, 3)) == SlopeSet::parse("[1, inf]"));
    CHECK(lspace_slope_set(torus_knot(2, -3)) == SlopeSet::parse("[-inf, -1]"));
    KnotFacts fig8{"4_1", 1, false, false, true, false};
    CHECK(lspace_slope_set(fig8).is_empty());
    CHECK_THROWS_AS(lspace_slope_set(unknot()), UnknotCompanion);
    for (long p = 2; p <= 6; ++p) {
        for (long m = 2; m <= 12; ++m) {
            if (std::gcd(p, m) != 1) continue;
            auto open = interior(lspace_slope_set(torus_knot(p, m)));
            CHECK(open == SlopeSet::from_arc(Arc::open(Slope::integer(p * m - p - m),
                                                       Slope::infinity())));
        }
    }
}

TEST_CASE("knot facts validation") {
    KnotFacts bad{"x", 1, true, false, false, false};  // L-space knots are fibered
    CHECK_THROWS_AS(bad.validate(), InvalidKnotFacts);
    KnotFacts both{"x", 2, true, true, true, false};  // only the unknot has both
    CHECK_THROWS_AS(both.validate(), InvalidKnotFacts);
    KnotFacts neg_genus{"x", -1, false, false, false, false};
    CHECK_THROWS_AS(neg_genus.validate(), InvalidKnotFacts);
    CHECK_NOTHROW(unknot().validate());
}

TEST_CASE("exact cable criterion") {
    auto t = torus_knot(2, 3);
    CHECK(cable_is_lspace_exact(t, 2, 3));
    CHECK(cable_is_lspace_exact(t, 3, 4));
    CHECK_FALSE(cable_is_lspace_exact(t, 2, 1));
    KnotFacts fig8{"4_1", 1, false, false, true, false};
    CHECK_FALSE(cable_is_lspace_exact(fig8, 2, 101));
    CHECK_THROWS_AS(cable_is_lspace_exact(t, 2, 4), NotCoprime);
    CHECK_THROWS_AS(cable_is_lspace_exact(t, 1, 4), InvalidArgument);
    // Monotone in q.
    for (long p = 2; p <= 6; ++p) {
        bool seen = false;
        for (long q = -40; q <= 40; ++q) {
            if (std::gcd(p, q) != 1) continue;
            bool now = cable_is_lspace_exact(torus_knot(2, 5), p, q);
            if (seen) CHECK(now);
            seen = seen || now;
        }
    }
    // Cables of the unknot are torus knots.
    CHECK(cable_is_lspace_exact(unknot(), 3, -1) == torus_knot(3, -1).is_lspace);
    CHECK(cable_is_lspace_exact(unknot(), 3, -2) == torus_knot(3, -2).is_lspace);
}

TEST_CASE("cable facts") {
    auto c = cable_knot(torus_knot(2, 3), 2, 5);
    CHECK(c.genus == 2 * 1 + 1 * 4 / 2);
    CHECK(c.is_lspace);
    CHECK_FALSE(c.is_neg_lspace);
    CHECK(c.is_fibered);
    auto n = cable_knot(torus_knot(2, -3), 2, -5);
    CHECK(n.is_neg_lspace);
    CHECK_FALSE(n.is_lspace);
}
