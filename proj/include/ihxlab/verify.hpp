#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ihxlab/symplectic.hpp"

namespace ihxlab {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<Check> checks;

    void add(std::string name, bool pass, std::string detail = {});
    void append(const SuiteReport& other);
    bool passed() const;
    /// One `PASS|FAIL <name> <detail>` line per check.
    std::string to_text() const;
};

/// Girth of every connected loop-free class up to max_vertices against the
/// Moore bound; the claimed constants are checked against the Petersen graph.
SuiteReport girth_suite(std::uint32_t max_vertices = 12);

/// Permuted-wheel relations w_s - sgn(s) w_id + (smaller wheels) in the IHX ideal.
SuiteReport wheel_permutation_suite(std::uint32_t max_legs = 5);
/// n-wheels in the IHX + loop ideal, with checked certificates.
SuiteReport wheel_vanishing_suite(std::uint32_t max_legs = 4);
SuiteReport double_pentagon_suite();
/// Quotient ranks for ihx/ih/ih0 with loop up to max_degree and E_m normal forms.
SuiteReport rank_suite(std::uint32_t max_degree = 4);

SuiteReport invariant_count_suite();
SuiteReport alpha_property_suite(std::uint32_t orderings = 10, std::uint64_t seed = 1);
SuiteReport cf_suite();
/// Highest-weight checks at genus; the Lambda^4 H -> Lambda^2 U embedding is
/// checked at max(genus, embed_genus), the first genus where it holds.
SuiteReport highest_weight_suite(std::uint32_t genus = 4, std::uint32_t embed_genus = 5);

struct IdealQuotient {
    std::size_t ambient_invariants = 0;
    std::size_t ideal_invariants = 0;
    std::size_t quotient() const { return ambient_invariants - ideal_invariants; }
};
/// Invariants of Lambda^{2m} Sym^3 H modulo the ideal generated by Im f_IHX.
IdealQuotient ihx_ideal_quotient(std::uint32_t genus, std::uint32_t m);
SuiteReport graph_invariant_suite(bool stretch);

/// graphs, relations, symplectic or all.
SuiteReport run_suite(const std::string& name);

} // namespace ihxlab
