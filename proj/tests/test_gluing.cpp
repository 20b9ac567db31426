#include <random>

#include "doctest.h"
#include "lsat/error.hpp"
#include "lsat/gluing.hpp"

using namespace lsat;

namespace {
SlopeSet S(std::string_view text) { return SlopeSet::parse(text); }
}  // namespace

TEST_CASE("apply") {
    auto h = meridian_longitude_swap();
    CHECK(h.apply(Slope(3, 5)) == Slope(5, 3));
    CHECK(h.apply(Slope::infinity()) == Slope(0, 1));
    CHECK(h.apply(Slope(1, 7)) == Slope(7, 1));
    CHECK(h.apply(Slope(1, 2)) == Slope(2, 1));
    CHECK(h.apply(h.apply(Slope(7, 3))) == Slope(7, 3));
    CHECK(GluingMap::identity().apply(Slope(-4, 9)) == Slope(-4, 9));
    CHECK(h.det() == -1);
    CHECK_THROWS_AS(GluingMap(2, 0, 0, 1), InvalidArgument);
}

TEST_CASE("image of sets under the swap") {
    auto h = meridian_longitude_swap();
    CHECK(image_of_set(h, S("[-inf, 1/7) U (1/2, inf]")) == S("[-inf, 2) U (7, inf]"));
    CHECK(image_of_set(h, SlopeSet::full()).is_full());
    CHECK(image_of_set(h, S("{1/0}")) == S("{0}"));
    CHECK(image_of_set(h, S("QP1 \\ {2}")) == S("QP1 \\ {1/2}"));
}

TEST_CASE("string form") {
    auto m = GluingMap(2, 1, 1, 1);
    CHECK(m.str() == "[[2,1],[1,1]]");
    CHECK(GluingMap::parse(m.str()) == m);
    CHECK(GluingMap::parse(" [[0, 1], [1, 0]] ") == meridian_longitude_swap());
}

TEST_CASE("transport, inverse and composition") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> e(-3, 3);
    std::vector<GluingMap> maps{meridian_longitude_swap(), GluingMap::identity()};
    while (maps.size() < 12) {
        long a = e(rng), b = e(rng), c = e(rng), d = e(rng);
        long det = a * d - b * c;
        if (det == 1 || det == -1) maps.emplace_back(a, b, c, d);
    }
    auto xs = farey_circle_sample(10, 4);
    std::vector<SlopeSet> sets{S("[1/2, 1/7]"), S("(1, inf)"), S("(0, 1], {3}, [5, -2)"),
                               S("QP1 \\ {4/3}"), S("{0}")};
    for (const auto& m : maps) {
        auto inv = inverse(m);
        CHECK(compose(m, inv) == GluingMap::identity());
        for (const auto& n : maps) CHECK(std::abs(compose(m, n).det()) == 1);
        for (const auto& x : xs) {
            CHECK(inv.apply(m.apply(x)) == x);
            CHECK(compose(m, inv).apply(x) == x);
        }
        for (const auto& s : sets) {
            auto img = image_of_set(m, s);
            for (const auto& x : xs) REQUIRE(img.contains(m.apply(x)) == s.contains(x));
        }
    }
}
