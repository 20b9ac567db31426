#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lsat/gluing.hpp"
#include "lsat/knot_models.hpp"
#include "lsat/patterns.hpp"
#include "lsat/projective_sets.hpp"

namespace lsat {

struct LemmaParams {
    Integer a;
    Integer b;
    Integer r;
    friend bool operator==(const LemmaParams& x, const LemmaParams& y) {
        return x.a == y.a && x.b == y.b && x.r == y.r;
    }
};

/// One audited condition. `values` holds every quantity the condition was
/// decided from, as decimal or slope strings, so it can be re-decided later.
struct Check {
    std::string id;
    std::string statement;
    bool pass = false;
    std::vector<std::pair<std::string, std::string>> values;

    const std::string* value(const std::string& key) const;
};

enum class Verdict { Certified, NotCertified, Rejected };

std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

struct Certificate {
    Verdict verdict = Verdict::NotCertified;
    std::string reason;
    std::string failed_condition;
    std::string pattern;
    std::string companion;
    std::optional<LemmaParams> params;
    SlopeSet companion_set;     // strict L-space slopes of the companion exterior
    SlopeSet pattern_side_set;  // guaranteed part of L(M_r), in J-exterior slopes
    SlopeSet glued_image;       // h(interior(pattern_side_set)) on the companion side
    std::string gluing_map;
    std::vector<Check> checks;
    std::vector<std::string> trusted_inputs;

    /// One-line summary, e.g. "CERTIFIED: r=13 surgery is an L-space".
    std::string summary() const;
};

/// |H_1| of (r, s)-surgery on a two-component link with linking number w:
/// |r.num s.num - w^2 r.den s.den|. Zero means positive first Betti number.
Integer homology_order(const Slope& r, const Slope& s, const Integer& w);

/// r - a w^2: the coefficient for which (r, 1/a)-surgery on P u J equals
/// surgery on the a-times negatively twisted pattern.
Integer twisted_surgery_coefficient(const Integer& r, const Integer& a, const Integer& w);

struct LemmaResult {
    std::vector<Check> checks;
    std::optional<SlopeSet> subset;  // closed arc from 1/a through 1/0 to 1/b
    std::string failed_condition;    // first failing id, empty on success
    bool unknown_twist = false;
    std::vector<std::string> trusted_inputs;

    bool ok() const { return failed_condition.empty(); }
};

/// Checks the hypotheses of the surgery lemma for (a, b, r) and, when all of
/// them hold, returns the guaranteed arc of L(M_r). a, b, r must be positive.
LemmaResult check_lemma(const PatternFacts& p, const Integer& a, const Integer& b,
                        const Integer& r);

/// Minimal parameters: a = 2 g_k, the least admissible r, then the least b
/// satisfying the b-inequality and the pattern's negative tail threshold.
LemmaParams choose_lemma_params(const PatternFacts& p, const Integer& g_k);

struct NecessaryResult {
    bool possibly_lspace = true;
    std::string reason;
    std::vector<Check> checks;
};

/// Fiberedness of K and P(U), and nonzero winding: necessary for P(K) to be
/// an L-space knot.
NecessaryResult necessary_check(const PatternFacts& p, const KnotFacts& k);

/// Full pipeline. Never throws for mathematical failures; those become
/// NotCertified or Rejected verdicts with the failing condition id.
Certificate certify_satellite(const PatternFacts& p, const KnotFacts& k);

/// Certifies P(K) as a negative L-space knot by certifying (-P)(-K).
Certificate certify_mirror_satellite(const PatternFacts& p, const KnotFacts& k);

struct TwistSpotCheck {
    Integer n;
    std::optional<bool> family_says_lspace;  // nullopt when the family cannot answer
    bool slope_in_lemma_arc = false;          // 1/(-n) lies in the guaranteed arc
    bool coefficient_positive = false;        // r + n w^2 > 0
};

struct TwistRange {
    Integer n_min;  // P(U, n) is an L-space knot for every n >= n_min
    std::vector<TwistSpotCheck> spot_checks;
};

/// Requires a Certified pipeline (throws NotCertified otherwise). Spot checks
/// n = n_min, ..., n_min + span.
TwistRange certified_twist_range(const PatternFacts& p, const KnotFacts& k, long span = 5);

struct CableComparison {
    Certificate certificate;
    bool exact = false;
    bool gap() const { return exact && certificate.verdict != Verdict::Certified; }
};

/// Runs the pipeline on the (p, q) torus pattern and attaches the exact
/// cabling verdict. Throws std::logic_error if the sufficient test certifies
/// a cable the exact criterion rejects.
CableComparison certify_cable(const KnotFacts& k, const Integer& p, const Integer& q);

struct ReplayResult {
    Verdict verdict = Verdict::NotCertified;
    std::string failed_condition;
    bool reproduced = false;  // every recorded pass flag and the verdict match
    std::vector<std::string> mismatches;
};

/// Re-decides every recorded check from its recorded values alone and
/// recomputes the verdict.
ReplayResult replay_certificate(const Certificate& c);

}  // namespace lsat
