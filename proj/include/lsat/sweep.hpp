#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lsat/certifier.hpp"
#include "lsat/knot_models.hpp"

namespace lsat {

struct SweepRow {
    Integer p;
    Integer q;
    std::string companion;
    Verdict sufficient = Verdict::NotCertified;
    bool exact = false;
    bool gap() const { return exact && sufficient != Verdict::Certified; }
};

struct NamedKnot {
    std::string label;
    KnotFacts facts;
};

/// Runs certify_cable over every coprime (p, q) with 2 <= p <= p_max and
/// |q| <= q_max, for each companion. Rows come out ordered by companion
/// (input order), then p, then q, whatever the thread count.
std::vector<SweepRow> cable_sweep(const std::vector<NamedKnot>& companions, long p_max,
                                  long q_max, unsigned threads = 1);

/// CSV with header p,q,companion,sufficient_verdict,exact_verdict,gap_flag.
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace lsat
