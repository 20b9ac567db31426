#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "lsat/certifier.hpp"
#include "lsat/error.hpp"
#include "lsat/io.hpp"
#include "lsat/sweep.hpp"

using namespace lsat;

namespace {

constexpr int kCertified = 0;
constexpr int kNotCertified = 1;
constexpr int kRejected = 2;
constexpr int kInputError = 3;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int exit_code(Verdict v) {
    switch (v) {
        case Verdict::Certified:
            return kCertified;
        case Verdict::NotCertified:
            return kNotCertified;
        case Verdict::Rejected:
            return kRejected;
    }
    return kInputError;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

// "@path" reads the description from a file; anything else is inline JSON or
// a companion shortcut.
Json description(const std::string& arg) {
    if (!arg.empty() && arg[0] == '@') return Json::parse(read_file(arg.substr(1)));
    return parse_json_argument(arg);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw InputError("cannot write " + out_path);
    out << text;
}

void report_failure(const Certificate& c) {
    if (c.verdict != Verdict::Certified) {
        std::cerr << "lsat: failed condition " << c.failed_condition << ": " << c.reason << '\n';
    }
}

// certify ---------------------------------------------------------------------

struct CertifyOptions {
    std::string pattern, companion, out, replay, format = "text";
    bool mirror = false;
};

int run_replay(const CertifyOptions& o) {
    Certificate c = certificate_from_json(Json::parse(read_file(o.replay)));
    ReplayResult r = replay_certificate(c);
    if (o.format == "json") {
        Json j{{"reproduced", r.reproduced},
               {"verdict", to_string(r.verdict)},
               {"failed_condition", r.failed_condition},
               {"mismatches", r.mismatches}};
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << (r.reproduced ? "REPLAY OK: " : "REPLAY MISMATCH: ") << to_string(r.verdict);
        if (!r.failed_condition.empty()) std::cout << " (" << r.failed_condition << ")";
        std::cout << '\n';
    }
    for (const auto& m : r.mismatches) std::cerr << "lsat: " << m << '\n';
    if (!r.reproduced) return kNotCertified;
    return exit_code(r.verdict);
}

int run_certify(const CertifyOptions& o) {
    if (!o.replay.empty()) return run_replay(o);
    if (o.pattern.empty() || o.companion.empty()) {
        throw InputError("certify needs --pattern and --companion (or --replay)");
    }
    PatternFacts p = pattern_from_json(description(o.pattern));
    KnotFacts k = knot_from_json(description(o.companion));
    Certificate c = o.mirror ? certify_mirror_satellite(p, k) : certify_satellite(p, k);
    const std::string json = certificate_to_json(c).dump(2) + "\n";
    if (o.format == "json") {
        emit(json, o.out);
        if (!o.out.empty()) std::cout << c.summary() << '\n';
    } else {
        std::cout << c.summary() << '\n';
        if (!o.out.empty()) emit(json, o.out);
    }
    report_failure(c);
    return exit_code(c.verdict);
}

// cable -----------------------------------------------------------------------

struct CableOptions {
    std::string companion, p, q, out, format = "text";
};

int run_cable(const CableOptions& o) {
    KnotFacts k = knot_from_json(description(o.companion));
    CableComparison cmp = certify_cable(k, parse_integer(o.p), parse_integer(o.q));
    const Certificate& c = cmp.certificate;
    if (o.format == "json") {
        Json j{{"companion", k.name},
               {"p", o.p},
               {"q", o.q},
               {"sufficient_verdict", to_string(c.verdict)},
               {"exact_verdict", cmp.exact ? "LSPACE" : "NOT_LSPACE"},
               {"gap", cmp.gap()},
               {"certificate", certificate_to_json(c)}};
        emit(j.dump(2) + "\n", o.out);
    } else {
        std::cout << c.summary() << '\n'
                  << "exact criterion: " << (cmp.exact ? "LSPACE" : "NOT_LSPACE") << '\n';
        if (cmp.gap()) std::cout << "gap: the exact criterion holds but the sufficient test does not apply\n";
        if (!o.out.empty()) emit(certificate_to_json(c).dump(2) + "\n", o.out);
    }
    report_failure(c);
    return exit_code(c.verdict);
}

// sweep -----------------------------------------------------------------------

struct SweepOptions {
    long p_max = 12, q_max = 120;
    std::vector<std::string> companions;
    unsigned threads = 0;
    std::string out, format = "csv";
};

int run_sweep(const SweepOptions& o) {
    if (o.p_max < 2 || o.q_max < 1) throw InputError("sweep bounds must be positive (--p-max >= 2)");
    std::vector<NamedKnot> comps;
    for (const auto& c : o.companions) comps.push_back({c, knot_from_json(description(c))});
    if (comps.empty()) comps.push_back({"trefoil", torus_knot(2, 3)});
    unsigned threads = o.threads ? o.threads : std::max(1u, std::thread::hardware_concurrency());
    auto rows = cable_sweep(comps, o.p_max, o.q_max, threads);
    std::string text;
    if (o.format == "csv") {
        text = sweep_csv(rows);
    } else if (o.format == "json") {
        Json arr = Json::array();
        for (const auto& r : rows) {
            arr.push_back(Json{{"p", r.p.get_str()},
                               {"q", r.q.get_str()},
                               {"companion", r.companion},
                               {"sufficient_verdict", to_string(r.sufficient)},
                               {"exact_verdict", r.exact ? "LSPACE" : "NOT_LSPACE"},
                               {"gap_flag", r.gap()}});
        }
        text = arr.dump(2) + "\n";
    } else {
        std::ostringstream s;
        std::size_t certified = 0, exact = 0, gaps = 0;
        for (const auto& r : rows) {
            certified += r.sufficient == Verdict::Certified;
            exact += r.exact;
            gaps += r.gap();
            if (r.gap()) s << "gap  " << r.companion << "  p=" << r.p << "  q=" << r.q << '\n';
        }
        s << rows.size() << " cells, " << certified << " certified, " << exact
          << " L-space by the exact criterion, " << gaps << " gaps\n";
        text = s.str();
    }
    emit(text, o.out);
    return 0;
}

// set-algebra -----------------------------------------------------------------

struct SetOptions {
    std::vector<std::string> union_args, covers_args, contains_args;
    std::string interior_arg, format = "text";
};

int run_sets(const SetOptions& o) {
    const int chosen = !o.union_args.empty() + !o.covers_args.empty() + !o.contains_args.empty() +
                       !o.interior_arg.empty();
    if (chosen != 1) throw InputError("choose exactly one of --union, --interior, --covers, --contains");
    auto print = [&](const std::string& text, const Json& j) {
        if (o.format == "json") {
            std::cout << j.dump() << '\n';
        } else {
            std::cout << text << '\n';
        }
    };
    if (!o.union_args.empty()) {
        SlopeSet acc;
        for (const auto& s : o.union_args) acc = set_union(acc, SlopeSet::parse(s));
        print(acc.str(), Json{{"union", acc.str()}});
        return 0;
    }
    if (!o.interior_arg.empty()) {
        auto s = interior(SlopeSet::parse(o.interior_arg));
        print(s.str(), Json{{"interior", s.str()}});
        return 0;
    }
    if (!o.covers_args.empty()) {
        auto a = SlopeSet::parse(o.covers_args.at(0));
        auto b = SlopeSet::parse(o.covers_args.at(1));
        auto r = cover_report(a, b);
        if (r.covered) {
            print("FULL", Json{{"covered", true}, {"cells_checked", r.cells_checked}});
            return 0;
        }
        print("UNCOVERED " + r.uncovered->str(),
              Json{{"covered", false}, {"uncovered", r.uncovered->str()}, {"cells_checked", r.cells_checked}});
        return 1;
    }
    auto s = SlopeSet::parse(o.contains_args.at(0));
    bool in = s.contains(Slope::parse(o.contains_args.at(1)));
    print(in ? "true" : "false", Json{{"contains", in}});
    return in ? 0 : 1;
}

// oracle ----------------------------------------------------------------------

struct OracleOptions {
    long max_den = 50;
    long height = 50;
    int trials = 200;
    unsigned seed = 1;
    std::string format = "text";
};

Slope random_slope(std::mt19937& rng) {
    std::uniform_int_distribution<long> den(0, 12);
    std::uniform_int_distribution<long> num(-40, 40);
    long q = den(rng);
    return q == 0 ? Slope::infinity() : Slope(num(rng), q);
}

SlopeSet random_set(std::mt19937& rng) {
    std::bernoulli_distribution coin(0.5);
    std::vector<Arc> arcs;
    const int n = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < n; ++i) {
        Slope a = random_slope(rng), b = random_slope(rng);
        arcs.push_back(a == b ? Arc::point(a) : Arc{a, b, coin(rng), coin(rng)});
    }
    return SlopeSet::from_arcs(arcs);
}

int run_oracle(const OracleOptions& o) {
    if (o.max_den < 1) throw InputError("--max-den must be at least 1");
    const auto sample = farey_circle_sample(o.max_den, o.height);
    std::mt19937 rng(o.seed);
    std::vector<std::string> discrepancies;
    int covered = 0;
    for (int t = 0; t < o.trials; ++t) {
        SlopeSet a = random_set(rng), b = random_set(rng);
        const bool exact = covers_circle(a, b);
        bool sampled = true;
        for (const auto& x : sample) {
            if (!a.contains(x) && !b.contains(x)) {
                sampled = false;
                break;
            }
        }
        covered += exact;
        if (exact != sampled) {
            discrepancies.push_back("covers(" + a.str() + " ; " + b.str() + "): endpoint " +
                                    (exact ? "true" : "false") + ", Farey " + (sampled ? "true" : "false"));
        }
    }
    if (o.format == "json") {
        Json j{{"trials", o.trials},
               {"max_den", o.max_den},
               {"sample_size", sample.size()},
               {"covered", covered},
               {"discrepancies", discrepancies}};
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << o.trials << " random pairs, " << sample.size() << " Farey slopes (max_den "
                  << o.max_den << "), " << covered << " covered, " << discrepancies.size()
                  << " discrepancies\n";
        for (const auto& d : discrepancies) std::cout << "  " << d << '\n';
    }
    return discrepancies.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact certifier for satellite L-space knots"};
    app.require_subcommand(1);
    const std::vector<std::string> text_json{"text", "json"};

    CertifyOptions co;
    auto* certify = app.add_subcommand("certify", "Certify P(K) as an L-space knot");
    certify->add_option("--pattern", co.pattern, "Pattern JSON, or @file");
    certify->add_option("--companion", co.companion, "Companion JSON, shortcut, or @file");
    certify->add_option("--out", co.out, "Write the certificate JSON here");
    certify->add_option("--replay", co.replay, "Re-decide a saved certificate");
    certify->add_option("--format", co.format)->check(CLI::IsMember(text_json));
    certify->add_flag("--mirror", co.mirror, "Certify P(K) as a negative L-space knot");

    CableOptions ca;
    auto* cable = app.add_subcommand("cable", "Compare the sufficient test with the exact cabling criterion");
    cable->add_option("--companion", ca.companion, "Companion JSON or shortcut")->required();
    cable->add_option("--p", ca.p, "Longitudinal winding p > 1")->required();
    cable->add_option("--q", ca.q, "Cabling parameter q")->required();
    cable->add_option("--out", ca.out);
    cable->add_option("--format", ca.format)->check(CLI::IsMember(text_json));

    SweepOptions so;
    auto* sweep = app.add_subcommand("sweep", "Sweep cables over a (p, q) box");
    sweep->add_option("--p-max", so.p_max);
    sweep->add_option("--q-max", so.q_max);
    sweep->add_option("--companion", so.companions, "Repeatable; JSON or shortcut");
    sweep->add_option("--threads", so.threads);
    sweep->add_option("--out", so.out);
    sweep->add_option("--format", so.format)->check(CLI::IsMember({"text", "json", "csv"}));

    SetOptions se;
    auto* sets = app.add_subcommand("set-algebra", "Union, interior and cover tests on slope sets");
    sets->add_option("--union", se.union_args)->expected(2, 16)->allow_extra_args(false);
    sets->add_option("--interior", se.interior_arg);
    sets->add_option("--covers", se.covers_args)->expected(2)->allow_extra_args(false);
    sets->add_option("--contains", se.contains_args, "SET SLOPE")->expected(2)->allow_extra_args(false);
    sets->add_option("--format", se.format)->check(CLI::IsMember(text_json));

    OracleOptions oo;
    auto* orc = app.add_subcommand("oracle", "Cross-check the cover test against Farey sampling");
    orc->add_option("--max-den", oo.max_den);
    orc->add_option("--height", oo.height);
    orc->add_option("--trials", oo.trials);
    orc->add_option("--seed", oo.seed);
    orc->add_option("--format", oo.format)->check(CLI::IsMember(text_json));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kInputError;
    }

    try {
        if (*certify) return run_certify(co);
        if (*cable) return run_cable(ca);
        if (*sweep) return run_sweep(so);
        if (*sets) return run_sets(se);
        if (*orc) return run_oracle(oo);
    } catch (const InputError& e) {
        std::cerr << "lsat: " << e.what() << '\n';
    } catch (const Json::exception& e) {
        std::cerr << "lsat: malformed JSON: " << e.what() << '\n';
    } catch (const Error& e) {
        std::cerr << "lsat: " << e.what() << '\n';
    } catch (const std::exception& e) {
        std::cerr << "lsat: internal error: " << e.what() << '\n';
    }
    return kInputError;
}
