#pragma once

// Test-only oracles. Each one recomputes a quantity by a route that shares no
// code with the library path it is used to check.

#include <cstdint>
#include <vector>

namespace oracle {

/// A slope as a plain machine pair, den >= 0, infinity = (1, 0).
struct Q {
    std::int64_t p;
    std::int64_t q;
};

/// Raw arc on the extended line, traversed upward from `from` to `to`,
/// wrapping through infinity when `to` is not above `from`.
struct RawArc {
    Q from;
    Q to;
    bool from_closed;
    bool to_closed;
};

/// Membership by comparing positions on the line with infinity on top.
bool raw_contains(const RawArc& arc, Q x);
bool raw_union_contains(const std::vector<RawArc>& arcs, Q x);

/// Every slope with 1 <= den <= max_den and |value| <= height, plus 1/0.
std::vector<Q> farey_sample(std::int64_t max_den, std::int64_t height);

/// True iff every sampled slope lies in one of the two raw arc lists.
bool brute_force_covers(const std::vector<RawArc>& a, const std::vector<RawArc>& b,
                        const std::vector<Q>& sample);

/// Order of the finite abelian group presented by an integer matrix
/// (0 when infinite), via Smith normal form.
std::int64_t presentation_order(std::vector<std::vector<std::int64_t>> m);

/// |H_1| of (p1/q1, p2/q2)-surgery on a two-component link with linking
/// number w, from its surgery presentation matrix.
std::int64_t linking_matrix_order(std::int64_t p1, std::int64_t q1, std::int64_t p2,
                                  std::int64_t q2, std::int64_t w);

/// Seifert's algorithm on the closed braid diagram of a word given by signed
/// generator indices: smooths every crossing, counts Seifert circles and link
/// components by tracing arcs, and returns the genus of the resulting
/// surface (1 - s + c) / 2 for knots, or -1 if the closure is a link.
int seifert_algorithm_genus(int strands, const std::vector<int>& word);

/// Half the span of the Alexander polynomial of a positive braid closure,
/// computed from the unreduced Burau representation. For fibered knots this
/// is the genus.
int alexander_half_span(int strands, const std::vector<int>& positive_word);

/// The formal inverse: letters reversed with signs flipped. By induction on
/// length, word * formal_inverse(word) freely reduces to the empty word.
std::vector<int> formal_inverse(const std::vector<int>& word);

}  // namespace oracle
