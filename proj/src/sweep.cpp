#include "lsat/sweep.hpp"

#include <exception>
#include <numeric>
#include <sstream>
#include <thread>

#include "lsat/error.hpp"

namespace lsat {

std::vector<SweepRow> cable_sweep(const std::vector<NamedKnot>& companions, long p_max,
                                  long q_max, unsigned threads) {
    if (p_max < 2 || q_max < 1) throw InvalidArgument("sweep bounds must be positive (p_max >= 2)");
    std::vector<SweepRow> rows;
    for (const auto& c : companions) {
        for (long p = 2; p <= p_max; ++p) {
            for (long q = -q_max; q <= q_max; ++q) {
                if (std::gcd(p, q) != 1) continue;
                rows.push_back(SweepRow{Integer(p), Integer(q), c.label});
            }
        }
    }
    std::vector<const KnotFacts*> facts(rows.size());
    {
        std::size_t i = 0;
        for (const auto& c : companions) {
            for (long p = 2; p <= p_max; ++p) {
                for (long q = -q_max; q <= q_max; ++q) {
                    if (std::gcd(p, q) == 1) facts[i++] = &c.facts;
                }
            }
        }
    }
    if (threads == 0) threads = 1;
    std::vector<std::exception_ptr> errors(threads);
    auto work = [&](std::size_t start) {
        try {
            for (std::size_t i = start; i < rows.size(); i += threads) {
                auto cmp = certify_cable(*facts[i], rows[i].p, rows[i].q);
                rows[i].sufficient = cmp.certificate.verdict;
                rows[i].exact = cmp.exact;
            }
        } catch (...) {
            errors[start] = std::current_exception();
        }
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work, t);
        work(0);
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    out << "p,q,companion,sufficient_verdict,exact_verdict,gap_flag\n";
    for (const auto& r : rows) {
        std::string label = r.companion;
        if (label.find_first_of(",\"") != std::string::npos) label = '"' + label + '"';
        out << r.p.get_str() << ',' << r.q.get_str() << ',' << label << ','
            << to_string(r.sufficient) << ',' << (r.exact ? "LSPACE" : "NOT_LSPACE") << ','
            << (r.gap() ? 1 : 0) << '\n';
    }
    return out.str();
}

}  // namespace lsat
