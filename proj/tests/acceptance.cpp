#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>

#include "ihxlab/enumerate.hpp"
#include "ihxlab/relations.hpp"
#include "ihxlab/symplectic.hpp"
#include "ihxlab/verify.hpp"

using namespace ihxlab;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
    bool pass = true;
    std::string detail;

    void need(bool ok, const std::string& what) {
        if (!ok) {
            if (pass) detail = "first failure: " + what;
            pass = false;
        }
    }
};

Outcome from_suite(const SuiteReport& r) {
    Outcome o;
    for (const auto& c : r.checks) o.need(c.pass, c.name + " (" + c.detail + ")");
    if (o.pass) o.detail = std::to_string(r.checks.size()) + " checks";
    return o;
}

std::vector<std::size_t> quotients(const std::string& specs, std::uint32_t from, std::uint32_t to,
                                   bool connected = false) {
    std::vector<std::size_t> q;
    for (std::uint32_t m = from; m <= to; ++m) {
        q.push_back(quotient_rank(m, parse_relation_specs(specs), connected).quotient_dimension);
    }
    return q;
}

std::string join(const std::vector<std::size_t>& v) {
    std::string s;
    for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
}

Outcome criterion1(bool stretch) {
    Outcome o;
    auto t = Clock::now();
    auto q = quotients("ihx,loop", 1, 4);
    const double secs = seconds_since(t);
    o.need(q == std::vector<std::size_t>(4, 0), "ihx,loop quotients " + join(q));
    o.need(secs < 300, "runtime " + std::to_string(secs) + "s");
    if (o.pass) o.detail = "quotients m=1..4: " + join(q);
    if (stretch) {
        auto s = quotients("ihx,loop", 5, 6);
        o.detail += "; stretch m=5,6: " + join(s) + (s == std::vector<std::size_t>{0, 0} ? " (met)" : " (not met)");
    }
    return o;
}

Outcome criterion2() {
    Outcome o;
    auto q = quotients("ih,loop", 1, 4);
    o.need(q == std::vector<std::size_t>(4, 0), "ih,loop quotients " + join(q));
    if (o.pass) o.detail = "quotients m=1..4: " + join(q);
    return o;
}

Outcome criterion3() {
    Outcome o;
    auto q = quotients("ih0,loop", 1, 5);
    o.need(q == std::vector<std::size_t>{1, 2, 3, 5, 7}, "ih0,loop quotients " + join(q));
    auto c = quotients("ih0,loop", 1, 5, true);
    o.need(c == std::vector<std::size_t>(5, 1), "connected quotients " + join(c));
    std::size_t graphs = 0;
    for (std::uint32_t m = 1; m <= 5; ++m) {
        for (const auto& cl : connected_classes(m)) {
            if (cl.has_loop) continue;
            ++graphs;
            auto nf = reduce_to_E_normal_form(GraphPolynomial::of(cl.representative));
            o.need(nf == ENormalForm{{{m}, 1}}, "E normal form of " + cl.cls.encoding);
        }
    }
    if (o.pass) {
        o.detail = "quotients " + join(q) + "; connected " + join(c) + "; " + std::to_string(graphs) +
                   " connected loop-free graphs reduce to E_m";
    }
    return o;
}

Outcome criterion4() {
    Outcome o;
    auto t = Clock::now();
    auto a = verify_decomposition(2, "1.3");
    auto b = verify_decomposition(6, "1.1");
    const double secs = seconds_since(t);
    o.need(a.total == 190 && a.holds(), "g=2 total " + a.total.get_str());
    o.need(b.total == 21528 && b.holds(), "g=6 total " + b.total.get_str());
    o.need(secs < 1, "runtime " + std::to_string(secs) + "s");
    if (o.pass) o.detail = "totals " + a.total.get_str() + " and " + b.total.get_str();
    return o;
}

Outcome timed(const std::function<SuiteReport()>& run, double limit) {
    auto t = Clock::now();
    auto o = from_suite(run());
    const double secs = seconds_since(t);
    o.need(secs < limit, "runtime " + std::to_string(secs) + "s");
    return o;
}

Outcome criterion8(bool stretch) {
    Outcome o = from_suite(graph_invariant_suite(false));
    if (stretch) {
        auto s = graph_invariant_suite(true);
        bool met = s.passed();
        o.detail += met ? "; stretch met" : "; stretch not met";
    }
    return o;
}

Outcome criterion10() {
    SuiteReport r{"ideal-membership", {}};
    r.append(wheel_permutation_suite(5));
    r.append(wheel_vanishing_suite(4));
    r.append(double_pentagon_suite());
    return from_suite(r);
}

} // namespace

int main(int argc, char** argv) {
    bool stretch = true;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--no-stretch") == 0) stretch = false;
    }
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"ihx-loop-quotient-vanishes", [&] { return criterion1(stretch); }},
        {"ih-loop-quotient-vanishes", criterion2},
        {"ih0-loop-quotient-counts", criterion3},
        {"decomposition-sums", criterion4},
        {"invariant-graph-count-agreement", [] { return timed(invariant_count_suite, 60); }},
        {"alpha-properties", [] { return timed([] { return alpha_property_suite(10, 1); }, 600); }},
        {"cf-identity", [] { return from_suite(cf_suite()); }},
        {"graph-rank-equals-invariants", [&] { return criterion8(stretch); }},
        {"highest-weight-vectors", [] { return from_suite(highest_weight_suite(4, 5)); }},
        {"ideal-membership", criterion10},
        {"girth-moore-bound", [] { return from_suite(girth_suite(12)); }},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        failed += o.pass ? 0 : 1;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << " " << criteria[i].first << "  "
                  << o.detail << std::endl;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
