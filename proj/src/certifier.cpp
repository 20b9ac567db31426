#include "lsat/certifier.hpp"

#include <functional>
#include <map>
#include <stdexcept>

#include "lsat/error.hpp"

namespace lsat {

namespace {

const char* kUnknown = "unknown";

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string tri_str(const std::optional<bool>& b) { return b ? bool_str(*b) : kUnknown; }

const std::string& need(const Check& c, const std::string& key) {
    const std::string* v = c.value(key);
    if (!v) throw ParseError("check " + c.id + " is missing value '" + key + "'");
    return *v;
}

Integer int_of(const Check& c, const std::string& key) { return parse_integer(need(c, key)); }

bool true_of(const Check& c, const std::string& key) { return need(c, key) == "true"; }

SlopeSet lemma_arc(const Integer& a, const Integer& b) {
    return SlopeSet::from_arc(Arc::closed(Slope(Integer(1), a), Slope(Integer(1), b)));
}

SlopeSet companion_strict_set(const Integer& genus) {
    return interior(SlopeSet::from_arc(Arc::closed(Slope::integer(2 * genus - 1), Slope::infinity())));
}

// Every check is decided from its recorded values by exactly one rule, both
// when the certificate is produced and when it is replayed.
using Rule = std::function<bool(const Check&)>;

const std::map<std::string, Rule>& rules() {
    static const std::map<std::string, Rule> table = {
        {"necessary.fibered",
         [](const Check& c) {
             return true_of(c, "companion_fibered") && need(c, "pattern_fibered") != "false";
         }},
        {"necessary.winding", [](const Check& c) { return int_of(c, "w") != 0; }},
        {"thm1.1",
         [](const Check& c) {
             return true_of(c, "companion_is_lspace") && !true_of(c, "companion_is_unknot");
         }},
        {"thm1.2", [](const Check& c) { return int_of(c, "w") >= 2 && true_of(c, "has_disk"); }},
        {"thm1.3",
         [](const Check& c) {
             return int_of(c, "n") == -2 * int_of(c, "genus_K") && true_of(c, "is_lspace");
         }},
        {"thm1.4", [](const Check& c) { return need(c, "neg_threshold") != "none"; }},
        {"lem.2", [](const Check& c) { return int_of(c, "w") >= 2; }},
        {"lem.3", [](const Check& c) { return true_of(c, "has_disk"); }},
        {"lem.4",
         [](const Check& c) {
             Integer w = int_of(c, "w");
             return int_of(c, "r") >=
                    2 * int_of(c, "g_P") + int_of(c, "a") * w * (2 * w - 1) - 1;
         }},
        {"lem.5",
         [](const Check& c) {
             // b >= (2g(P) + r - 1) / w, compared without division
             return int_of(c, "b") * int_of(c, "w") >= 2 * int_of(c, "g_P") + int_of(c, "r") - 1;
         }},
        {"lem.6",
         [](const Check& c) { return int_of(c, "n") == -int_of(c, "a") && true_of(c, "is_lspace"); }},
        {"lem.7",
         [](const Check& c) {
             return int_of(c, "n") == -int_of(c, "b") && true_of(c, "is_neg_lspace");
         }},
        {"lem.sandwich",
         [](const Check& c) {
             Integer w2 = int_of(c, "w") * int_of(c, "w");
             Integer r = int_of(c, "r");
             return int_of(c, "a") * w2 < r && r < int_of(c, "b") * w2;
         }},
        {"lem.h1",
         [](const Check& c) {
             Integer a = int_of(c, "a"), b = int_of(c, "b"), r = int_of(c, "r"), w = int_of(c, "w");
             Slope rs = Slope::integer(r);
             Integer at_long = homology_order(rs, Slope(w * w, r), w);
             Integer at_a = homology_order(rs, Slope(Integer(1), a), w);
             Integer at_b = homology_order(rs, Slope(Integer(1), b), w);
             return at_long == 0 && at_long == int_of(c, "order_at_longitude") &&
                    at_a == int_of(c, "order_at_1/a") && at_b == int_of(c, "order_at_1/b") &&
                    at_a == abs(twisted_surgery_coefficient(r, a, w)) &&
                    at_b == abs(twisted_surgery_coefficient(r, b, w));
         }},
        {"lem.rr",
         [](const Check& c) {
             Integer a = int_of(c, "a"), b = int_of(c, "b");
             Slope lon = Slope::parse(need(c, "longitude"));
             SlopeSet arc = SlopeSet::parse(need(c, "lemma_arc"));
             Slope inv_a(Integer(1), a), inv_b(Integer(1), b);
             return arc == lemma_arc(a, b) && rr_shape_check(arc, lon) && lon != inv_a &&
                    lon != inv_b && slope_ccw(inv_b, lon, inv_a);
         }},
        {"hrrw.cover",
         [](const Check& c) {
             SlopeSet companion = SlopeSet::parse(need(c, "companion_strict"));
             SlopeSet pattern = SlopeSet::parse(need(c, "pattern_side_strict"));
             SlopeSet glued = SlopeSet::parse(need(c, "glued_image"));
             GluingMap h = GluingMap::parse(need(c, "gluing_map"));
             return companion == companion_strict_set(int_of(c, "genus_K")) &&
                    glued == image_of_set(h, pattern) && covers_circle(companion, glued);
         }},
    };
    return table;
}

bool decide(const Check& c) {
    auto it = rules().find(c.id);
    if (it == rules().end()) throw ParseError("unknown check id '" + c.id + "'");
    return it->second(c);
}

Check make_check(std::string id, std::string statement,
                 std::vector<std::pair<std::string, std::string>> values) {
    Check c{std::move(id), std::move(statement), false, std::move(values)};
    c.pass = decide(c);
    return c;
}

struct TwistLookup {
    std::optional<KnotFacts> facts;
    std::string unknown_reason;
};

TwistLookup lookup(const PatternFacts& p, const Integer& n, std::vector<std::string>& trusted) {
    try {
        auto ans = pattern_twist_query(p, n);
        if (ans.source != TwistSource::Computed) {
            trusted.push_back(ans.facts.name + ": " + to_string(ans.source) + " (lspace=" +
                              bool_str(ans.facts.is_lspace) +
                              ", neg_lspace=" + bool_str(ans.facts.is_neg_lspace) + ")");
        }
        return {ans.facts, {}};
    } catch (const UnknownTwist& e) {
        return {std::nullopt, std::string("UnknownTwist: ") + e.what()};
    }
}

std::optional<bool> flag(const TwistLookup& t, bool KnotFacts::*member) {
    if (!t.facts) return std::nullopt;
    return (*t.facts).*member;
}

void note_failure(std::string& failed, const Check& c) {
    if (failed.empty() && !c.pass) failed = c.id;
}

}  // namespace

const std::string* Check::value(const std::string& key) const {
    for (const auto& [k, v] : values) {
        if (k == key) return &v;
    }
    return nullptr;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Certified:
            return "CERTIFIED";
        case Verdict::NotCertified:
            return "NOT_CERTIFIED";
        case Verdict::Rejected:
            return "REJECTED";
    }
    return "?";
}

Verdict verdict_from_string(const std::string& s) {
    if (s == "CERTIFIED") return Verdict::Certified;
    if (s == "NOT_CERTIFIED") return Verdict::NotCertified;
    if (s == "REJECTED") return Verdict::Rejected;
    throw ParseError("unknown verdict '" + s + "'");
}

std::string Certificate::summary() const {
    switch (verdict) {
        case Verdict::Certified:
            return "CERTIFIED: r=" + params->r.get_str() + " surgery is an L-space";
        case Verdict::NotCertified:
            return "NOT CERTIFIED: " + failed_condition + ": " + reason;
        case Verdict::Rejected:
            return "REJECTED: " + failed_condition + ": " + reason;
    }
    return "?";
}

Integer homology_order(const Slope& r, const Slope& s, const Integer& w) {
    return abs(r.num() * s.num() - w * w * r.den() * s.den());
}

Integer twisted_surgery_coefficient(const Integer& r, const Integer& a, const Integer& w) {
    return r - a * w * w;
}

LemmaResult check_lemma(const PatternFacts& p, const Integer& a, const Integer& b,
                        const Integer& r) {
    if (a <= 0 || b <= 0 || r <= 0) {
        throw InvalidArgument("lemma parameters must be positive: a=" + a.get_str() +
                              " b=" + b.get_str() + " r=" + r.get_str());
    }
    LemmaResult out;
    const Integer& w = p.winding;
    const Integer& g = p.genus_s3;
    const std::string sw = w.get_str(), sg = g.get_str();
    const std::string sa = a.get_str(), sb = b.get_str(), sr = r.get_str();

    out.checks.push_back(make_check("lem.2", "|lk(P, J)| = w >= 2", {{"w", sw}}));
    out.checks.push_back(make_check("lem.3",
                                    "J bounds a disk meeting P in exactly w points",
                                    {{"has_disk", bool_str(p.has_minimal_meridional_disk)}}));
    out.checks.push_back(make_check("lem.4", "r >= 2g(P) + a w (2w - 1) - 1",
                                    {{"r", sr}, {"g_P", sg}, {"a", sa}, {"w", sw}}));
    out.checks.push_back(make_check("lem.5", "b w >= 2g(P) + r - 1",
                                    {{"b", sb}, {"g_P", sg}, {"r", sr}, {"w", sw}}));

    const Integer neg_a = -a, neg_b = -b;
    auto at_a = lookup(p, neg_a, out.trusted_inputs);
    auto at_b = lookup(p, neg_b, out.trusted_inputs);
    out.unknown_twist = !at_a.facts || !at_b.facts;
    out.checks.push_back(make_check(
        "lem.6", "P(U, -a) is an L-space knot",
        {{"n", neg_a.get_str()}, {"a", sa}, {"is_lspace", tri_str(flag(at_a, &KnotFacts::is_lspace))}}));
    out.checks.push_back(make_check("lem.7", "P(U, -b) is a negative L-space knot",
                                    {{"n", neg_b.get_str()},
                                     {"b", sb},
                                     {"is_neg_lspace", tri_str(flag(at_b, &KnotFacts::is_neg_lspace))}}));
    out.checks.push_back(make_check("lem.sandwich", "a w^2 < r < b w^2",
                                    {{"a", sa}, {"b", sb}, {"r", sr}, {"w", sw}}));

    for (const auto& c : out.checks) note_failure(out.failed_condition, c);
    if (!out.ok()) return out;

    const Slope rs = Slope::integer(r);
    const Slope longitude(w * w, r);
    out.checks.push_back(make_check(
        "lem.h1",
        "H_1 is infinite at s = w^2/r, and |H_1| = |r - a w^2|, |r - b w^2| at s = 1/a, 1/b",
        {{"a", sa},
         {"b", sb},
         {"r", sr},
         {"w", sw},
         {"order_at_longitude", homology_order(rs, longitude, w).get_str()},
         {"order_at_1/a", homology_order(rs, Slope(Integer(1), a), w).get_str()},
         {"order_at_1/b", homology_order(rs, Slope(Integer(1), b), w).get_str()}}));
    const SlopeSet arc = lemma_arc(a, b);
    out.checks.push_back(make_check(
        "lem.rr", "the closed arc from 1/a through 1/0 to 1/b avoids the rational longitude w^2/r",
        {{"a", sa}, {"b", sb}, {"longitude", longitude.str()}, {"lemma_arc", arc.str()}}));
    for (const auto& c : out.checks) note_failure(out.failed_condition, c);
    if (out.ok()) out.subset = arc;
    return out;
}

LemmaParams choose_lemma_params(const PatternFacts& p, const Integer& g_k) {
    if (g_k <= 0) throw InvalidArgument("companion genus must be positive");
    if (p.winding <= 0) throw InvalidArgument("pattern winding must be positive");
    if (!p.neg_lspace_threshold) throw NoThreshold();
    const Integer& w = p.winding;
    const Integer& g = p.genus_s3;
    LemmaParams out;
    out.a = 2 * g_k;
    out.r = 2 * g + out.a * w * (2 * w - 1) - 1;
    if (out.r < 1) out.r = 1;
    out.b = ceil_div(2 * g + out.r - 1, w);
    if (out.b < *p.neg_lspace_threshold) out.b = *p.neg_lspace_threshold;
    if (out.b < 1) out.b = 1;
    return out;
}

NecessaryResult necessary_check(const PatternFacts& p, const KnotFacts& k) {
    NecessaryResult out;
    std::vector<std::string> ignored;
    auto base = lookup(p, Integer(0), ignored);
    out.checks.push_back(make_check(
        "necessary.fibered", "K and P(U) are fibered",
        {{"companion_fibered", bool_str(k.is_fibered)},
         {"pattern_fibered", tri_str(flag(base, &KnotFacts::is_fibered))}}));
    out.checks.push_back(
        make_check("necessary.winding", "w(P) != 0", {{"w", p.winding.get_str()}}));
    for (const auto& c : out.checks) {
        if (!c.pass) {
            out.possibly_lspace = false;
            out.reason = c.id == "necessary.winding"
                             ? "winding number zero: P(K) is not fibered"
                             : (!k.is_fibered ? "companion is not fibered"
                                              : "P(U) is not fibered");
            break;
        }
    }
    return out;
}

Certificate certify_satellite(const PatternFacts& p, const KnotFacts& k) {
    k.validate();
    p.validate();
    Certificate cert;
    cert.pattern = p.name;
    cert.companion = k.name;
    const GluingMap h = meridian_longitude_swap();
    cert.gluing_map = h.str();
    cert.trusted_inputs.push_back("companion " + k.name + ": genus=" + k.genus.get_str() +
                                  ", is_lspace=" + bool_str(k.is_lspace) +
                                  ", is_fibered=" + bool_str(k.is_fibered));
    cert.trusted_inputs.push_back("pattern " + p.name + ": winding=" + p.winding.get_str() +
                                  ", minimal meridional disk=" +
                                  bool_str(p.has_minimal_meridional_disk));

    auto necessary = necessary_check(p, k);
    cert.checks = necessary.checks;
    if (!necessary.possibly_lspace) {
        cert.verdict = Verdict::Rejected;
        cert.reason = necessary.reason;
        for (const auto& c : cert.checks) note_failure(cert.failed_condition, c);
        return cert;
    }

    if (!k.is_unknot && (k.is_lspace || k.is_neg_lspace)) {
        cert.companion_set = interior(lspace_slope_set(k));
    }

    const Integer n3 = -2 * k.genus;
    auto at_n3 = lookup(p, n3, cert.trusted_inputs);
    std::vector<Check> thm = {
        make_check("thm1.1", "K is a nontrivial L-space knot",
                   {{"companion_is_lspace", bool_str(k.is_lspace)},
                    {"companion_is_unknot", bool_str(k.is_unknot)}}),
        make_check("thm1.2", "w(P) >= 2 and a meridional disk meets P in exactly w(P) points",
                   {{"w", p.winding.get_str()},
                    {"has_disk", bool_str(p.has_minimal_meridional_disk)}}),
        make_check("thm1.3", "P(U, -2g(K)) is an L-space knot",
                   {{"n", n3.get_str()},
                    {"genus_K", k.genus.get_str()},
                    {"is_lspace", tri_str(flag(at_n3, &KnotFacts::is_lspace))}}),
        make_check("thm1.4", "P(U, -n) is a negative L-space knot for all n >= N",
                   {{"neg_threshold",
                     p.neg_lspace_threshold ? p.neg_lspace_threshold->get_str() : "none"}}),
    };
    cert.checks.insert(cert.checks.end(), thm.begin(), thm.end());
    if (p.neg_lspace_threshold && !std::holds_alternative<TorusFamily>(p.twist_family)) {
        const auto* braid = std::get_if<BraidFamily>(&p.twist_family);
        const bool derived = braid && !braid->tails.neg_from;
        cert.trusted_inputs.push_back("P(U, -n) negative L-space for n >= " +
                                      p.neg_lspace_threshold->get_str() +
                                      (derived ? " (negative reduced braid words)"
                                               : " (tail assertion)"));
    }
    for (const auto& c : thm) note_failure(cert.failed_condition, c);
    if (!cert.failed_condition.empty()) {
        cert.verdict = Verdict::NotCertified;
        if (cert.failed_condition == "thm1.3" && !at_n3.facts) {
            cert.reason = at_n3.unknown_reason;
        } else {
            for (const auto& c : thm) {
                if (c.id == cert.failed_condition) cert.reason = c.statement + " fails";
            }
        }
        return cert;
    }

    const LemmaParams params = choose_lemma_params(p, k.genus);
    cert.params = params;
    auto lemma = check_lemma(p, params.a, params.b, params.r);
    cert.checks.insert(cert.checks.end(), lemma.checks.begin(), lemma.checks.end());
    cert.trusted_inputs.insert(cert.trusted_inputs.end(), lemma.trusted_inputs.begin(),
                               lemma.trusted_inputs.end());
    if (!lemma.ok()) {
        cert.verdict = Verdict::NotCertified;
        cert.failed_condition = lemma.failed_condition;
        cert.reason = lemma.unknown_twist ? "UnknownTwist: a lemma twist query has no answer"
                                          : "lemma hypothesis fails";
        return cert;
    }

    cert.pattern_side_set = *lemma.subset;
    const SlopeSet pattern_strict = interior(cert.pattern_side_set);
    cert.glued_image = image_of_set(h, pattern_strict);
    auto cover = make_check("hrrw.cover",
                            "every slope is strict on the companion side or its image is strict "
                            "on the pattern side",
                            {{"genus_K", k.genus.get_str()},
                             {"companion_strict", cert.companion_set.str()},
                             {"pattern_side_strict", pattern_strict.str()},
                             {"gluing_map", h.str()},
                             {"glued_image", cert.glued_image.str()}});
    const auto report = cover_report(cert.companion_set, cert.glued_image);
    cover.values.emplace_back("cells_checked", std::to_string(report.cells_checked));
    if (report.uncovered) cover.values.emplace_back("uncovered", report.uncovered->str());
    cert.checks.push_back(cover);
    if (!cover.pass) {
        cert.verdict = Verdict::NotCertified;
        cert.failed_condition = cover.id;
        cert.reason = "the two strict slope sets leave a slope uncovered";
        return cert;
    }
    cert.verdict = Verdict::Certified;
    cert.reason = "P(K) is an L-space knot; r=" + params.r.get_str() + " surgery is an L-space";
    return cert;
}

Certificate certify_mirror_satellite(const PatternFacts& p, const KnotFacts& k) {
    Certificate c = certify_satellite(mirror_pattern(p), mirror(k));
    c.trusted_inputs.push_back("mirror run: a certificate here makes P(K) a negative L-space knot");
    return c;
}

TwistRange certified_twist_range(const PatternFacts& p, const KnotFacts& k, long span) {
    const Certificate cert = certify_satellite(p, k);
    if (cert.verdict != Verdict::Certified) throw NotCertified(cert.summary());
    TwistRange out;
    out.n_min = -2 * k.genus;
    const auto& params = *cert.params;
    const Integer w2 = p.winding * p.winding;
    for (long i = 0; i <= span; ++i) {
        TwistSpotCheck spot;
        spot.n = out.n_min + i;
        try {
            spot.family_says_lspace = pattern_twisted_facts(p, spot.n).is_lspace;
        } catch (const UnknownTwist&) {
        }
        const Slope s = spot.n == 0 ? Slope::infinity() : Slope(Integer(1), Integer(-spot.n));
        spot.slope_in_lemma_arc = cert.pattern_side_set.contains(s);
        spot.coefficient_positive = params.r + spot.n * w2 > 0;
        out.spot_checks.push_back(spot);
    }
    return out;
}

CableComparison certify_cable(const KnotFacts& k, const Integer& p, const Integer& q) {
    CableComparison out;
    out.exact = cable_is_lspace_exact(k, p, q);  // validates p > 1 and gcd
    out.certificate = certify_satellite(torus_pattern(p, q), k);
    if (out.certificate.verdict == Verdict::Certified && !out.exact) {
        throw std::logic_error("sufficient test certified " + k.name + "_{" + p.get_str() + "," +
                               q.get_str() + "} but the exact criterion rejects it");
    }
    return out;
}

ReplayResult replay_certificate(const Certificate& c) {
    ReplayResult out;
    std::string failed_necessary, failed_other;
    bool cover_passed = false;
    for (const auto& check : c.checks) {
        bool pass = decide(check);
        if (pass != check.pass) {
            out.mismatches.push_back(check.id + ": recorded " + bool_str(check.pass) +
                                     ", recomputed " + bool_str(pass));
        }
        if (!pass) {
            auto& slot = check.id.rfind("necessary.", 0) == 0 ? failed_necessary : failed_other;
            if (slot.empty()) slot = check.id;
        }
        if (check.id == "hrrw.cover" && pass) cover_passed = true;
    }
    if (!failed_necessary.empty()) {
        out.verdict = Verdict::Rejected;
        out.failed_condition = failed_necessary;
    } else if (!failed_other.empty()) {
        out.verdict = Verdict::NotCertified;
        out.failed_condition = failed_other;
    } else if (cover_passed) {
        out.verdict = Verdict::Certified;
    } else {
        out.verdict = Verdict::NotCertified;
        out.failed_condition = "hrrw.cover";
    }
    if (out.verdict != c.verdict) {
        out.mismatches.push_back("verdict: recorded " + to_string(c.verdict) + ", recomputed " +
                                 to_string(out.verdict));
    }
    if (out.verdict != Verdict::Certified && out.failed_condition != c.failed_condition) {
        out.mismatches.push_back("failed condition: recorded " + c.failed_condition +
                                 ", recomputed " + out.failed_condition);
    }
    out.reproduced = out.mismatches.empty();
    return out;
}

}  // namespace lsat
