#include "lsat/patterns.hpp"

#include <algorithm>
#include <limits>

#include "lsat/error.hpp"

namespace lsat {

// ---------------------------------------------------------------------------
// Braid words
// ---------------------------------------------------------------------------

void BraidWord::validate() const {
    if (strands < 2) throw InvalidArgument("a braid needs at least 2 strands");
    for (const auto& l : letters) {
        if (l.index < 1 || l.index > strands - 1 || (l.sign != 1 && l.sign != -1)) {
            throw InvalidArgument("braid letter " + std::to_string(l.sign * l.index) +
                                  " out of range for " + std::to_string(strands) + " strands");
        }
    }
}

std::string BraidWord::str() const {
    std::string out;
    for (const auto& l : letters) {
        if (!out.empty()) out += ' ';
        out += std::to_string(l.sign * l.index);
    }
    return out;
}

BraidWord BraidWord::from_signed(int strands, const std::vector<int>& signed_indices) {
    BraidWord bw{strands, {}};
    for (int s : signed_indices) {
        if (s == 0) throw InvalidArgument("braid letter 0 is not a generator");
        bw.letters.push_back({s > 0 ? s : -s, s > 0 ? 1 : -1});
    }
    bw.validate();
    return bw;
}

std::vector<int> BraidWord::to_signed() const {
    std::vector<int> out;
    out.reserve(letters.size());
    for (const auto& l : letters) out.push_back(l.sign * l.index);
    return out;
}

std::string to_string(BraidSign s) {
    switch (s) {
        case BraidSign::Positive:
            return "Positive";
        case BraidSign::Negative:
            return "Negative";
        case BraidSign::Mixed:
            return "Mixed";
        case BraidSign::Trivial:
            return "Trivial";
    }
    return "?";
}

BraidWord braid_add_full_twists(const BraidWord& bw, long n) {
    BraidWord out = bw;
    const int w = bw.strands;
    const long reps = (n < 0 ? -n : n) * w;
    out.letters.reserve(bw.letters.size() + static_cast<std::size_t>(reps) * (w - 1));
    for (long r = 0; r < reps; ++r) {
        if (n > 0) {
            for (int i = w - 1; i >= 1; --i) out.letters.push_back({i, 1});
        } else {
            for (int i = 1; i <= w - 1; ++i) out.letters.push_back({i, -1});
        }
    }
    return out;
}

BraidWord braid_free_reduce(const BraidWord& bw) {
    BraidWord out{bw.strands, {}};
    out.letters.reserve(bw.letters.size());
    for (const auto& l : bw.letters) {
        if (!out.letters.empty() && out.letters.back().index == l.index &&
            out.letters.back().sign == -l.sign) {
            out.letters.pop_back();
        } else {
            out.letters.push_back(l);
        }
    }
    return out;
}

BraidSign braid_sign(const BraidWord& bw) {
    const auto reduced = braid_free_reduce(bw);
    if (reduced.letters.empty()) return BraidSign::Trivial;
    bool pos = false, neg = false;
    for (const auto& l : reduced.letters) (l.sign > 0 ? pos : neg) = true;
    if (pos && neg) return BraidSign::Mixed;
    return pos ? BraidSign::Positive : BraidSign::Negative;
}

BraidWord braid_mirror(const BraidWord& bw) {
    BraidWord out = bw;
    for (auto& l : out.letters) l.sign = -l.sign;
    return out;
}

std::vector<int> braid_permutation(const BraidWord& bw) {
    std::vector<int> perm(static_cast<std::size_t>(bw.strands));
    for (int i = 0; i < bw.strands; ++i) perm[static_cast<std::size_t>(i)] = i;
    for (const auto& l : bw.letters) {
        std::swap(perm[static_cast<std::size_t>(l.index - 1)],
                  perm[static_cast<std::size_t>(l.index)]);
    }
    return perm;
}

bool braid_closure_is_knot(const BraidWord& bw) {
    const auto perm = braid_permutation(bw);
    int x = perm[0];
    int len = 1;
    while (x != 0) {
        x = perm[static_cast<std::size_t>(x)];
        ++len;
    }
    return len == bw.strands;
}

Integer positive_braid_closure_genus(const BraidWord& bw) {
    bw.validate();
    auto sign = braid_sign(bw);
    if (sign != BraidSign::Positive && sign != BraidSign::Trivial) throw NotPositive();
    if (!braid_closure_is_knot(bw)) throw NotAKnot();
    const long crossings = static_cast<long>(bw.letters.size());
    return Integer((crossings - bw.strands + 1) / 2);
}

// ---------------------------------------------------------------------------
// Patterns
// ---------------------------------------------------------------------------

namespace {

long to_long(const Integer& n, const char* what) {
    if (!n.fits_slong_p()) throw InvalidArgument(std::string(what) + " out of range: " + n.get_str());
    return n.get_si();
}

std::string twisted_name(const std::string& pattern, const Integer& n) {
    return pattern + "(U," + n.get_str() + ")";
}

std::optional<KnotFacts> tail_answer(const std::string& name, const TailAssertions& tails,
                                     const Integer& n, const Integer& genus_bound) {
    KnotFacts k;
    k.name = twisted_name(name, n);
    k.genus = genus_bound;
    k.is_fibered = true;
    if (tails.neg_from && n <= -*tails.neg_from) {
        k.is_neg_lspace = true;
        return k;
    }
    if (tails.pos_from && n >= *tails.pos_from) {
        k.is_lspace = true;
        return k;
    }
    return std::nullopt;
}

KnotFacts braid_word_facts(const BraidWord& word, const std::string& name) {
    const auto reduced = braid_free_reduce(word);
    const auto sign = braid_sign(reduced);
    if (sign == BraidSign::Trivial) throw NotAKnot();
    const bool negative = sign == BraidSign::Negative;
    Integer genus = positive_braid_closure_genus(negative ? braid_mirror(reduced) : reduced);
    if (genus == 0) {
        KnotFacts u = unknot();
        u.name = name;
        return u;
    }
    KnotFacts k;
    k.name = name;
    k.genus = genus;
    k.is_lspace = !negative;
    k.is_neg_lspace = negative;
    k.is_fibered = true;
    return k;
}

std::map<Integer, KnotFacts> shift_keys(const std::map<Integer, KnotFacts>& m, const Integer& by) {
    std::map<Integer, KnotFacts> out;
    for (const auto& [n, k] : m) out.emplace(Integer(n + by), k);
    return out;
}

std::map<Integer, KnotFacts> mirror_table(const std::map<Integer, KnotFacts>& m) {
    std::map<Integer, KnotFacts> out;
    for (const auto& [n, k] : m) out.emplace(Integer(-n), mirror(k));
    return out;
}

TailAssertions shift_tails(const TailAssertions& t, const Integer& m) {
    TailAssertions out;
    if (t.neg_from) out.neg_from = Integer(*t.neg_from + m);
    if (t.pos_from) out.pos_from = Integer(*t.pos_from - m);
    return out;
}

TailAssertions mirror_tails(const TailAssertions& t) { return {t.pos_from, t.neg_from}; }

std::optional<Integer> threshold_from(const TailAssertions& t) {
    if (!t.neg_from) return std::nullopt;
    return *t.neg_from < 0 ? Integer(0) : *t.neg_from;
}

// Least N >= 0 whose N negative full twists leave a negative reduced word.
// Appending further inverse twists to a negative word cancels nothing, so
// every n >= N then stays negative.
std::optional<Integer> braid_threshold(const BraidFamily& fam) {
    if (fam.tails.neg_from) return threshold_from(fam.tails);
    const auto w = static_cast<std::size_t>(fam.word.strands);
    const auto limit = static_cast<long>(fam.word.letters.size() / (w * (w - 1))) + 2;
    for (long n = 0; n <= limit; ++n) {
        if (braid_sign(braid_add_full_twists(fam.word, -n)) == BraidSign::Negative) return Integer(n);
    }
    return std::nullopt;
}

Integer torus_threshold(const Integer& p, const Integer& q) {
    // P(U, -N) = T(p, q - N p) is a negative L-space knot iff q - N p <= 1.
    Integer n = ceil_div(q - 1, p);
    return n < 0 ? Integer(0) : n;
}

}  // namespace

void PatternFacts::validate() const {
    if (winding < 0) throw InvalidPattern(name + ": winding number must be nonnegative");
    if (genus_s3 < 0) throw InvalidPattern(name + ": genus must be nonnegative");
    if (has_minimal_meridional_disk && winding < 1) {
        throw InvalidPattern(name + ": a minimal meridional disk forces winding >= 1");
    }
    if (neg_lspace_threshold && *neg_lspace_threshold < 0) {
        throw InvalidPattern(name + ": negative tail threshold must be nonnegative");
    }
    if (const auto* table = std::get_if<TableFamily>(&twist_family)) {
        for (const auto& [n, k] : table->twists) {
            k.validate();
            if (k.genus > genus_twist_bound(genus_s3, winding, n)) {
                throw InvalidPattern(name + ": entry " + n.get_str() +
                                     " exceeds the twisting genus bound");
            }
        }
        if (auto it = table->twists.find(Integer(0));
            it != table->twists.end() && it->second.genus != genus_s3) {
            throw InvalidPattern(name + ": entry 0 disagrees with genus_s3");
        }
    }
}

std::string to_string(TwistSource s) {
    switch (s) {
        case TwistSource::Computed:
            return "computed";
        case TwistSource::TableEntry:
            return "table entry";
        case TwistSource::Override:
            return "override";
        case TwistSource::TailAssertion:
            return "tail assertion";
    }
    return "?";
}

PatternFacts torus_pattern(const Integer& p, const Integer& q) {
    KnotFacts k0 = torus_knot(p, q);  // validates p >= 2 and coprimality
    PatternFacts pat;
    pat.name = "T(" + p.get_str() + "," + q.get_str() + ")";
    pat.winding = p;
    pat.genus_s3 = k0.genus;
    pat.has_minimal_meridional_disk = true;
    pat.twist_family = TorusFamily{p, q};
    pat.neg_lspace_threshold = torus_threshold(p, q);
    return pat;
}

PatternFacts one_bridge_braid(long w, long b, long t, const BraidOverrides& overrides) {
    if (w < 3) throw BridgeOutOfRange("1-bridge braid needs w >= 3, got " + std::to_string(w));
    if (b < 1 || b > w - 2) {
        throw BridgeOutOfRange("bridge parameter b = " + std::to_string(b) +
                               " outside 1.." + std::to_string(w - 2));
    }
    if (w > std::numeric_limits<int>::max()) throw InvalidArgument("too many strands");
    BraidWord word{static_cast<int>(w), {}};
    for (long i = b; i >= 1; --i) word.letters.push_back({static_cast<int>(i), 1});
    const long reps = t < 0 ? -t : t;
    for (long r = 0; r < reps; ++r) {
        if (t > 0) {
            for (long i = w - 1; i >= 1; --i) word.letters.push_back({static_cast<int>(i), 1});
        } else {
            for (long i = 1; i <= w - 1; ++i) word.letters.push_back({static_cast<int>(i), -1});
        }
    }

    PatternFacts pat;
    pat.name = "B(" + std::to_string(w) + "," + std::to_string(b) + "," + std::to_string(t) + ")";
    pat.winding = w;
    pat.has_minimal_meridional_disk = true;
    BraidFamily fam{word, overrides.twists, overrides.tails};
    pat.neg_lspace_threshold = braid_threshold(fam);
    pat.twist_family = std::move(fam);
    const auto reduced = braid_free_reduce(word);
    const auto sign = braid_sign(reduced);
    if (sign == BraidSign::Positive || sign == BraidSign::Negative) {
        pat.genus_s3 = braid_word_facts(word, pat.name).genus;
    } else if (auto it = overrides.twists.find(Integer(0)); it != overrides.twists.end()) {
        pat.genus_s3 = it->second.genus;
    } else {
        throw UnknownTwist("0");
    }
    pat.validate();
    return pat;
}

PatternFacts table_pattern(std::string name, const Integer& winding, const Integer& genus_s3,
                           bool has_disk, std::map<Integer, KnotFacts> twists,
                           TailAssertions tails) {
    PatternFacts pat;
    pat.name = std::move(name);
    pat.winding = winding;
    pat.genus_s3 = genus_s3;
    pat.has_minimal_meridional_disk = has_disk;
    pat.neg_lspace_threshold = threshold_from(tails);
    pat.twist_family = TableFamily{std::move(twists), std::move(tails)};
    pat.validate();
    return pat;
}

Integer genus_twist_bound(const Integer& g_p, const Integer& w, const Integer& n) {
    if (w < 0) throw InvalidArgument("winding number must be nonnegative");
    return g_p + abs(n) * w * (w - 1) / 2;
}

TwistAnswer pattern_twist_query(const PatternFacts& p, const Integer& n) {
    const Integer bound = genus_twist_bound(p.genus_s3, p.winding, n);
    const std::string name = twisted_name(p.name, n);
    TwistAnswer answer = std::visit(
        [&](const auto& fam) -> TwistAnswer {
            using F = std::decay_t<decltype(fam)>;
            if constexpr (std::is_same_v<F, TorusFamily>) {
                return {torus_knot(fam.p, fam.q + n * fam.p), TwistSource::Computed};
            } else if constexpr (std::is_same_v<F, BraidFamily>) {
                const long twists = to_long(n, "twist count");
                const auto word = braid_free_reduce(braid_add_full_twists(fam.word, twists));
                const auto sign = braid_sign(word);
                if (sign == BraidSign::Positive || sign == BraidSign::Negative) {
                    return {braid_word_facts(word, name), TwistSource::Computed};
                }
                if (auto it = fam.overrides.find(n); it != fam.overrides.end()) {
                    return {it->second, TwistSource::Override};
                }
                if (auto tail = tail_answer(p.name, fam.tails, n, bound)) {
                    return {*tail, TwistSource::TailAssertion};
                }
                throw UnknownTwist(n.get_str());
            } else {
                if (auto it = fam.twists.find(n); it != fam.twists.end()) {
                    return {it->second, TwistSource::TableEntry};
                }
                if (auto tail = tail_answer(p.name, fam.tails, n, bound)) {
                    return {*tail, TwistSource::TailAssertion};
                }
                throw UnknownTwist(n.get_str());
            }
        },
        p.twist_family);
    answer.facts.validate();
    if (answer.facts.genus > bound) {
        throw InvalidPattern(name + " has genus " + answer.facts.genus.get_str() +
                             " above the twisting bound " + bound.get_str());
    }
    return answer;
}

KnotFacts pattern_twisted_facts(const PatternFacts& p, const Integer& n) {
    return pattern_twist_query(p, n).facts;
}

PatternFacts twist_pattern(const PatternFacts& p, const Integer& m) {
    PatternFacts out = p;
    out.name = twisted_name(p.name, m);
    out.genus_s3 = pattern_twisted_facts(p, m).genus;
    std::visit(
        [&](auto& fam) {
            using F = std::decay_t<decltype(fam)>;
            if constexpr (std::is_same_v<F, TorusFamily>) {
                fam.q += m * fam.p;
                out.neg_lspace_threshold = torus_threshold(fam.p, fam.q);
            } else if constexpr (std::is_same_v<F, BraidFamily>) {
                fam.word = braid_free_reduce(braid_add_full_twists(fam.word, to_long(m, "twist")));
                fam.overrides = shift_keys(fam.overrides, -m);
                fam.tails = shift_tails(fam.tails, m);
                out.neg_lspace_threshold = braid_threshold(fam);
            } else {
                fam.twists = shift_keys(fam.twists, -m);
                fam.tails = shift_tails(fam.tails, m);
                out.neg_lspace_threshold = threshold_from(fam.tails);
            }
        },
        out.twist_family);
    return out;
}

PatternFacts mirror_pattern(const PatternFacts& p) {
    PatternFacts out = p;
    out.name = "-" + p.name;
    std::visit(
        [&](auto& fam) {
            using F = std::decay_t<decltype(fam)>;
            if constexpr (std::is_same_v<F, TorusFamily>) {
                fam.q = -fam.q;
                out.neg_lspace_threshold = torus_threshold(fam.p, fam.q);
            } else if constexpr (std::is_same_v<F, BraidFamily>) {
                fam.word = braid_mirror(fam.word);
                fam.overrides = mirror_table(fam.overrides);
                fam.tails = mirror_tails(fam.tails);
                out.neg_lspace_threshold = braid_threshold(fam);
            } else {
                fam.twists = mirror_table(fam.twists);
                fam.tails = mirror_tails(fam.tails);
                out.neg_lspace_threshold = threshold_from(fam.tails);
            }
        },
        out.twist_family);
    return out;
}

}  // namespace lsat
