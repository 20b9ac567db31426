#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lsat/knot_models.hpp"
#include "lsat/slopes.hpp"

namespace lsat {

// ---------------------------------------------------------------------------
// Braid words
// ---------------------------------------------------------------------------

/// sigma_index^sign, with 1 <= index <= strands - 1 and sign = +-1.
struct BraidLetter {
    int index;
    int sign;
    friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

struct BraidWord {
    int strands = 2;
    std::vector<BraidLetter> letters;

    /// Throws InvalidArgument if strands < 2 or a letter is out of range.
    void validate() const;
    /// Signed generator indices, e.g. "2 1 -3".
    std::string str() const;
    /// Builds a word from signed indices (negative means inverse).
    static BraidWord from_signed(int strands, const std::vector<int>& signed_indices);
    std::vector<int> to_signed() const;

    friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

enum class BraidSign { Positive, Negative, Mixed, Trivial };

std::string to_string(BraidSign s);

/// Appends |n| full twists: (s_{w-1} ... s_1)^{n w} for n > 0, and the formal
/// inverse (s_1^-1 ... s_{w-1}^-1)^{|n| w} for n < 0.
BraidWord braid_add_full_twists(const BraidWord& bw, long n);

/// Cancels adjacent s_i s_i^-1 and s_i^-1 s_i pairs until none remain.
BraidWord braid_free_reduce(const BraidWord& bw);

/// Classifies the freely reduced word by the signs of its letters.
BraidSign braid_sign(const BraidWord& bw);

/// Flips every letter sign.
BraidWord braid_mirror(const BraidWord& bw);

/// Permutation of strand positions induced by the word (0-based).
std::vector<int> braid_permutation(const BraidWord& bw);

/// True iff the closure has a single component.
bool braid_closure_is_knot(const BraidWord& bw);

/// Genus of the closure of a positive braid whose closure is a knot:
/// (letters - strands + 1) / 2. Throws NotPositive or NotAKnot.
Integer positive_braid_closure_genus(const BraidWord& bw);

// ---------------------------------------------------------------------------
// Patterns
// ---------------------------------------------------------------------------

/// Asserted behaviour of P(U, n) far out in either direction.
struct TailAssertions {
    std::optional<Integer> neg_from;  // P(U, n) negative L-space for all n <= -neg_from
    std::optional<Integer> pos_from;  // P(U, n) L-space for all n >= pos_from
};

/// Standard embedding of T(p, q) in the solid torus: P(U, n) = T(p, q + n p).
struct TorusFamily {
    Integer p;
    Integer q;
};

/// 1-bridge braid. Positive twisted words give L-space knots and negative
/// ones negative L-space knots; mixed words need overrides or tails.
struct BraidFamily {
    BraidWord word;
    std::map<Integer, KnotFacts> overrides;
    TailAssertions tails;
};

/// Finite user table of twisted knots, plus explicit tail assertions.
struct TableFamily {
    std::map<Integer, KnotFacts> twists;
    TailAssertions tails;
};

using TwistFamily = std::variant<TorusFamily, BraidFamily, TableFamily>;

struct PatternFacts {
    std::string name;
    Integer winding;    // w(P)
    Integer genus_s3;   // genus of P(U, 0) in S^3
    bool has_minimal_meridional_disk = false;
    TwistFamily twist_family;
    /// N such that P(U, -n) is a negative L-space knot for every n >= N.
    std::optional<Integer> neg_lspace_threshold;

    void validate() const;
};

/// Where an answer about P(U, n) came from.
enum class TwistSource { Computed, TableEntry, Override, TailAssertion };

std::string to_string(TwistSource s);

struct TwistAnswer {
    KnotFacts facts;
    TwistSource source;
};

PatternFacts torus_pattern(const Integer& p, const Integer& q);

struct BraidOverrides {
    std::map<Integer, KnotFacts> twists;
    TailAssertions tails;
};

/// The word (s_b ... s_1)(s_{w-1} ... s_1)^t on w strands, winding w.
/// Requires w >= 3 and 1 <= b <= w - 2. Without an asserted negative tail the
/// threshold is the least N whose twisted reduced word is negative.
PatternFacts one_bridge_braid(long w, long b, long t, const BraidOverrides& overrides = {});

PatternFacts table_pattern(std::string name, const Integer& winding, const Integer& genus_s3,
                           bool has_disk, std::map<Integer, KnotFacts> twists,
                           TailAssertions tails);

/// Facts of P(U, n) together with their provenance. Throws UnknownTwist when
/// the family cannot answer, InvalidPattern when an answer breaks the genus
/// bound.
TwistAnswer pattern_twist_query(const PatternFacts& p, const Integer& n);

KnotFacts pattern_twisted_facts(const PatternFacts& p, const Integer& n);

/// g_p + |n| w (w - 1) / 2: a full twist adds at most w(w-1)/2 to the genus.
Integer genus_twist_bound(const Integer& g_p, const Integer& w, const Integer& n);

/// The pattern re-based at m twists: its P(U, n) is the old P(U, n + m).
PatternFacts twist_pattern(const PatternFacts& p, const Integer& m);

/// The mirror pattern -P, with (-P)(U, n) = -(P(U, -n)).
PatternFacts mirror_pattern(const PatternFacts& p);

}  // namespace lsat
