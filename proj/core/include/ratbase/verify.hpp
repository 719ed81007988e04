#pragma once

#include "ratbase/base.hpp"
#include "ratbase/spans.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ratbase {

/// Outcome of one verification campaign. Deterministic given base and
/// bounds; `first_counterexample` is the smallest-index violation.
struct SuiteReport {
    std::string suite;
    Int p;
    Int q;
    std::vector<std::pair<std::string, std::string>> params;
    long long checks = 0;
    long long violations = 0;
    std::string first_counterexample;
    std::vector<std::pair<std::string, std::string>> info;
    std::string replay;

    bool passed() const { return violations == 0; }
};

/// Sequentiality and input-completeness: the substitution rule yields
/// exactly one candidate per (state, input letter).
SuiteReport verify_unique_candidate(const RationalBase& base, const Int& n_max);

/// The closed-form step agrees with the substitution rule everywhere.
SuiteReport verify_step_equivalence(const RationalBase& base, const Int& n_max);

/// The transducer image of the minimal word of n is the minimal word of
/// n+1, on k-letter prefixes.
SuiteReport verify_successor_image(const RationalBase& base, const Int& n_max,
                                   std::size_t k);

/// Finite-run version: prefix pairs label runs from state 0 (forward), plus
/// a bounded search illustrating the converse; search misses are reported
/// but are not violations.
SuiteReport verify_finite_runs(const RationalBase& base, const Int& n_max,
                               std::size_t k, const Int& budget,
                               long converse_samples);

/// Every span-word prefix is accepted by the balanced automaton.
SuiteReport verify_span_acceptance(const RationalBase& base, const Int& n_max,
                                   std::size_t k);

/// Span-word factorisation through the transducer image, plus the exhaustive
/// digit identity to_maximal(c) - b = a over every replacement pair.
SuiteReport verify_span_factorisation_suite(const RationalBase& base,
                                            const Int& n_max, std::size_t k);

/// Randomised campaign over the shift relation.
SuiteReport verify_shift_relation(const RationalBase& base, long samples,
                                  long n_bound, std::size_t len_bound);

/// Balanced-unreachable witness: existence and exhaustive confirmation.
SuiteReport verify_unreachable_witness(const RationalBase& base, const Int& n);

/// Value witnesses for balanced-accepted words (p < 2q-1): equal value,
/// equal length, accepted by the tree automaton.
SuiteReport verify_value_witness(const RationalBase& base, long samples,
                                 std::size_t len_bound);

/// Span topology report: shrinking max-gap for p < 2q, certified span-free
/// interval for p > 2q.
SuiteReport verify_density(const RationalBase& base, const Int& n_max);

/// The underlying input graph of the transducer has exactly the edges of
/// the balanced automaton.
SuiteReport verify_graph_coincidence(const RationalBase& base,
                                     const Int& n_max);

namespace detail {

struct Violation {
    Int n;
    std::string message;
};

/// Scans n in [0, n_max] sharded over worker threads; returns the violation
/// with the smallest n, if any. The check must be pure.
std::optional<Violation> scan_range(
    const Int& n_max,
    const std::function<std::optional<std::string>(const Int&)>& check);

} // namespace detail

} // namespace ratbase
