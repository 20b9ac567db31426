#include <numeric>

#include "doctest.h"
#include "lsat/error.hpp"
#include "lsat/patterns.hpp"
#include "oracles.hpp"

using namespace lsat;

namespace {

BraidWord W(int strands, std::vector<int> letters) { return BraidWord::from_signed(strands, letters); }

bool same_knot(const KnotFacts& a, const KnotFacts& b) {
    return a.genus == b.genus && a.is_lspace == b.is_lspace && a.is_neg_lspace == b.is_neg_lspace &&
           a.is_fibered == b.is_fibered && a.is_unknot == b.is_unknot;
}

KnotFacts fibered(long genus) { return KnotFacts{"K", genus, false, false, true, false}; }

}  // namespace

TEST_CASE("braid words") {
    auto w = W(4, {2, 1, -3});
    CHECK(w.str() == "2 1 -3");
    CHECK(w.to_signed() == std::vector<int>{2, 1, -3});
    CHECK_THROWS_AS(W(3, {3}), InvalidArgument);
    CHECK_THROWS_AS(W(1, {}), InvalidArgument);
    CHECK_THROWS_AS(W(3, {0}), InvalidArgument);
}

TEST_CASE("full twists") {
    auto w = W(3, {1});
    CHECK(braid_add_full_twists(w, 0) == w);
    auto t = braid_add_full_twists(w, 1);
    CHECK(t.to_signed() == std::vector<int>{1, 2, 1, 2, 1, 2, 1});
    auto back = braid_free_reduce(braid_add_full_twists(braid_add_full_twists(w, -1), 1));
    CHECK(back == braid_free_reduce(w));
    for (int n = -3; n <= 3; ++n) {
        auto b = W(5, {2, 1, -4, 3, 3});
        auto round = braid_add_full_twists(braid_add_full_twists(b, n), -n);
        CHECK(braid_free_reduce(round) == braid_free_reduce(b));
    }
}

TEST_CASE("free reduction") {
    CHECK(braid_free_reduce(W(2, {1, -1})).letters.empty());
    CHECK(braid_free_reduce(W(3, {1, 2, -2, 1})) == W(3, {1, 1}));
    CHECK(braid_free_reduce(W(3, {1, 2, -1})) == W(3, {1, 2, -1}));
    std::vector<std::vector<int>> words{{1}, {1, 2, -1, 3}, {-2, -2, 1, 3, -1}, {3, 2, 1, 1, -2}};
    for (const auto& word : words) {
        auto full = word;
        auto inv = oracle::formal_inverse(word);
        full.insert(full.end(), inv.begin(), inv.end());
        CHECK(braid_free_reduce(W(4, full)).letters.empty());
    }
}

TEST_CASE("braid sign") {
    auto b523 = W(5, {2, 1, 4, 3, 2, 1, 4, 3, 2, 1, 4, 3, 2, 1});
    CHECK(braid_sign(b523) == BraidSign::Positive);
    CHECK(braid_sign(W(3, {-1, -2, -1})) == BraidSign::Negative);
    CHECK(braid_sign(W(3, {1, -2})) == BraidSign::Mixed);
    CHECK(braid_sign(W(3, {1, -1})) == BraidSign::Trivial);
    CHECK(to_string(BraidSign::Mixed) == "Mixed");
}

TEST_CASE("positive braid genus") {
    CHECK(positive_braid_closure_genus(W(2, {1})) == 0);
    CHECK(positive_braid_closure_genus(W(2, {1, 1, 1})) == 1);
    auto b523 = W(5, {2, 1, 4, 3, 2, 1, 4, 3, 2, 1, 4, 3, 2, 1});
    CHECK(positive_braid_closure_genus(b523) == 5);
    CHECK(oracle::seifert_algorithm_genus(5, b523.to_signed()) == 5);
    CHECK(oracle::alexander_half_span(5, b523.to_signed()) == 5);
    CHECK_THROWS_AS(positive_braid_closure_genus(W(2, {1, 1})), NotAKnot);
    CHECK_THROWS_AS(positive_braid_closure_genus(W(3, {1, -2})), NotPositive);
    CHECK(braid_permutation(W(3, {1, 2})) != braid_permutation(W(3, {2, 1})));
    CHECK(braid_closure_is_knot(W(3, {1, 2})));
    CHECK_FALSE(braid_closure_is_knot(W(3, {1})));
}

TEST_CASE("torus patterns") {
    auto p = torus_pattern(2, 3);
    CHECK(p.winding == 2);
    CHECK(p.genus_s3 == 1);
    CHECK(p.has_minimal_meridional_disk);
    CHECK(*p.neg_lspace_threshold == 1);
    CHECK(pattern_twisted_facts(p, -2).is_unknot);
    CHECK(pattern_twisted_facts(p, 5) == torus_knot(2, 13));
    for (long pp = 2; pp <= 5; ++pp) {
        for (long q = -9; q <= 9; ++q) {
            if (q == 0 || std::gcd(pp, q) != 1) continue;
            auto pat = torus_pattern(pp, q);
            for (long n = -10; n <= 10; ++n) {
                if (q + n * pp == 0) continue;
                auto k = pattern_twisted_facts(pat, n);
                CHECK(k == torus_knot(pp, q + n * pp));
                CHECK(k.genus <= genus_twist_bound(pat.genus_s3, pat.winding, n));
            }
        }
    }
}

TEST_CASE("genus twist bound") {
    CHECK(genus_twist_bound(1, 2, -2) == 3);
    CHECK(genus_twist_bound(4, 7, 0) == 4);
}

TEST_CASE("one bridge braids") {
    auto b = one_bridge_braid(5, 2, 3);
    CHECK(b.winding == 5);
    CHECK(b.genus_s3 == 5);
    CHECK(*b.neg_lspace_threshold == 1);
    auto k0 = pattern_twist_query(b, 0);
    CHECK(k0.source == TwistSource::Computed);
    CHECK(k0.facts.is_lspace);
    CHECK(k0.facts.genus == 5);
    const auto& fam = std::get<BraidFamily>(b.twist_family);
    CHECK(braid_sign(braid_free_reduce(braid_add_full_twists(fam.word, 1))) == BraidSign::Positive);
    // One negative full twist cancels the positive tail of the word and
    // leaves a negative word, so the answer is computed.
    auto neg1 = pattern_twist_query(b, -1);
    CHECK(neg1.source == TwistSource::Computed);
    CHECK(neg1.facts.is_neg_lspace);
    auto word_m1 = braid_free_reduce(braid_add_full_twists(fam.word, -1));
    CHECK(braid_sign(word_m1) == BraidSign::Negative);
    CHECK(neg1.facts.genus == oracle::seifert_algorithm_genus(5, word_m1.to_signed()));
    CHECK_THROWS_AS(one_bridge_braid(2, 1, 1), BridgeOutOfRange);
    CHECK_THROWS_AS(one_bridge_braid(5, 4, 1), BridgeOutOfRange);

    // A mixed word (the figure-eight as a 3-braid) needs overrides or tails.
    PatternFacts mixed;
    mixed.name = "M";
    mixed.winding = 3;
    mixed.genus_s3 = 1;
    mixed.has_minimal_meridional_disk = true;
    BraidFamily fam8{W(3, {1, -2, 1, -2}), {}, {}};
    fam8.overrides.emplace(Integer(-1), fibered(2));
    fam8.tails.neg_from = Integer(4);
    mixed.twist_family = fam8;
    CHECK_THROWS_AS(pattern_twist_query(mixed, 0), UnknownTwist);
    try {
        pattern_twist_query(mixed, 0);
    } catch (const UnknownTwist& e) {
        CHECK(e.twist() == "0");
    }
    CHECK(pattern_twist_query(mixed, -1).source == TwistSource::Override);
    auto tail = pattern_twist_query(mixed, -7);
    CHECK(tail.source == TwistSource::TailAssertion);
    CHECK(tail.facts.is_neg_lspace);
    CHECK(tail.facts.genus == genus_twist_bound(1, 3, -7));

    BraidOverrides ov;
    ov.tails.neg_from = Integer(4);
    CHECK(*one_bridge_braid(5, 2, 3, ov).neg_lspace_threshold == 4);

    // Sufficiently negative twisting gives a negative word with computed facts.
    auto far = pattern_twist_query(b, -3);
    CHECK(far.source == TwistSource::Computed);
    CHECK(far.facts.is_neg_lspace);
}

TEST_CASE("genus bound is enforced") {
    std::map<Integer, KnotFacts> tw;
    tw.emplace(Integer(1), fibered(50));
    CHECK_THROWS_AS(table_pattern("P", 2, 1, true, tw, {}), InvalidPattern);
}

TEST_CASE("table patterns") {
    std::map<Integer, KnotFacts> tw;
    tw.emplace(Integer(0), torus_knot(2, 3));
    tw.emplace(Integer(-2), unknot());
    TailAssertions tails;
    tails.neg_from = Integer(3);
    auto p = table_pattern("P", 2, 1, true, tw, tails);
    CHECK(pattern_twist_query(p, -2).source == TwistSource::TableEntry);
    CHECK(pattern_twist_query(p, -3).source == TwistSource::TailAssertion);
    CHECK_THROWS_AS(pattern_twist_query(p, 1), UnknownTwist);
    CHECK_THROWS_AS(pattern_twist_query(p, -1), UnknownTwist);

    std::map<Integer, KnotFacts> bad0;
    bad0.emplace(Integer(0), torus_knot(2, 5));
    CHECK_THROWS_AS(table_pattern("P", 2, 1, true, bad0, {}), InvalidPattern);
    CHECK_THROWS_AS(table_pattern("P", 0, 1, true, {}, {}), InvalidPattern);
}

TEST_CASE("twist composition") {
    std::vector<PatternFacts> pats{torus_pattern(2, 3), torus_pattern(3, -5), one_bridge_braid(5, 2, 3),
                                   one_bridge_braid(4, 1, 2)};
    for (const auto& p : pats) {
        for (long m = -3; m <= 3; ++m) {
            PatternFacts base;
            try {
                base = twist_pattern(p, m);
            } catch (const UnknownTwist&) {
                continue;
            }
            for (long n = -3; n <= 3; ++n) {
                std::optional<KnotFacts> direct, rebased;
                try {
                    direct = pattern_twisted_facts(p, m + n);
                } catch (const UnknownTwist&) {
                }
                try {
                    rebased = pattern_twisted_facts(base, n);
                } catch (const UnknownTwist&) {
                }
                REQUIRE(direct.has_value() == rebased.has_value());
                if (direct) CHECK(same_knot(*direct, *rebased));
            }
        }
    }
}

TEST_CASE("mirror patterns") {
    auto p = torus_pattern(3, 4);
    auto m = mirror_pattern(p);
    for (long n = -4; n <= 4; ++n) {
        CHECK(same_knot(pattern_twisted_facts(m, n), mirror(pattern_twisted_facts(p, -n))));
    }
    auto b = one_bridge_braid(5, 2, 3);
    auto mb = mirror_pattern(b);
    CHECK(pattern_twisted_facts(mb, 0).is_neg_lspace);
    CHECK(pattern_twisted_facts(mb, 0).genus == 5);
}
