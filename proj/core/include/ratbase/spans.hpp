#pragma once

#include "ratbase/automaton.hpp"
#include "ratbase/base.hpp"
#include "ratbase/interval.hpp"
#include "ratbase/stream.hpp"
#include "ratbase/words.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace ratbase {

/// Digit range an infinite word's unread tail is known to stay inside.
struct DigitBounds {
    Digit lo;
    Digit hi;
};

DigitBounds minimal_bounds(const RationalBase& base);
DigitBounds maximal_bounds(const RationalBase& base);
DigitBounds canonical_bounds(const RationalBase& base);
DigitBounds balanced_bounds(const RationalBase& base);

/// Real value of an infinite word a_1 a_2 ...: the j-th letter weighs
/// (q/p)^j, the reading "after the decimal point". Truncation after k
/// letters gives partial sum + the exact geometric tail range of the given
/// digit bounds, hence a rigorous enclosure of the real value.
RatInterval rho_enclosure(const RationalBase& base, const DigitWord& prefix,
                          const DigitBounds& tail);

/// Partial sum alone (the first |prefix| weighted digits).
Rat rho_partial(const RationalBase& base, const DigitWord& prefix);

/// Exact width of the tail range after k letters: (hi-lo) * (q/p)^k * q/(p-q).
Rat rho_tail_width(const RationalBase& base, std::size_t k,
                   const DigitBounds& tail);

/// Greatest integer congruent to x mod q and strictly smaller than p;
/// always a maximal letter.
Digit max_letter(const RationalBase& base, const Int& x);

/// Maps a minimal letter a to max_letter(a + p). Applied digit-wise it turns
/// the minimal word of n+1 into the maximal word of n. Throws DigitNotInAq.
Digit to_maximal(const RationalBase& base, const Digit& a);

/// Digit-wise difference of the maximal and minimal words of a node, a word
/// over the balanced alphabet. Each step also exposes both walker states.
class SpanWord {
public:
    SpanWord(const RationalBase& base, State n);

    struct Item {
        Digit digit;
        State min_state;
        State max_state;
    };

    Item next();
    DigitWord take(std::size_t k);

private:
    RationalBase base_;
    State min_state_;
    State max_state_;
};

/// Enclosure of span(n), the real width of the subtree of node n: value of
/// the span-word, truncated at depth k. Cross-computed as the difference of
/// the maximal- and minimal-word enclosures; the two routes must agree.
struct SpanValue {
    State n;
    std::size_t k;
    RatInterval enclosure;
};

SpanValue span(const RationalBase& base, const State& n, std::size_t k);

/// Enclosure midpoint only, single route; the workhorse for bulk scans.
Rat span_midpoint(const RationalBase& base, const State& n, std::size_t k);

/// Whether the k-prefix of the span-word of n is accepted by the balanced
/// automaton (run from state 0 exists).
bool span_prefix_accepted(const RationalBase& base, const State& n,
                          std::size_t k);

/// One instance of the span-word factorisation: with w the k-prefix of the
/// minimal word of n and w' its transducer image from state 0, the word
/// to_maximal(w') - w digit-wise must be accepted by the balanced automaton
/// and equal the span-word prefix.
struct SpanFactorisationCheck {
    bool accepted;
    bool equals_span_word;
    bool holds() const { return accepted && equals_span_word; }
};

SpanFactorisationCheck check_span_factorisation(const RationalBase& base,
                                                const State& n, std::size_t k);

/// Smallest n <= budget whose span-word starts with u, where u must be
/// accepted by the balanced automaton (else NotAccepted is thrown).
/// Empty result: nothing within budget.
std::optional<State> prefix_extension_search(const RationalBase& base,
                                             const DigitWord& u,
                                             const Int& budget);

/// For p < 2q-1: a word over A_p accepted by the tree automaton with the
/// same length and the same value as u (u accepted by the balanced
/// automaton). The witness is the value's representation padded with
/// leading zeros. Throws PreconditionViolated / NotAccepted.
DigitWord value_witness(const RationalBase& base, const DigitWord& u);

/// One row of the span table (CSV schema: n, k, span_lo, span_hi,
/// spanword_prefix).
struct SpanRow {
    State n;
    std::size_t k;
    Rat lo;
    Rat hi;
    DigitWord prefix;
};

/// Where the span values sit in the ambient interval [0, rho(maximal word
/// of 0)]. For p < 2q the set is dense and the report carries the largest
/// gap between consecutive span midpoints (shrinking as n_max grows). For
/// p > 2q it is nowhere dense and the report carries a certified open
/// interval, derived from a balanced-unreachable state, holding no span
/// midpoint at all.
struct DensityReport {
    bool dense; // p < 2q
    std::size_t k;
    Rat ambient_hi;

    // dense case
    Rat max_gap;

    // sparse case
    State witness;
    std::optional<RatInterval> certificate;
    long midpoints_inside = 0;

    std::vector<SpanRow> rows;
};

DensityReport density_report(const RationalBase& base, const Int& n_max,
                             bool collect_rows = false);

/// Depth at which span enclosures get narrower than the ambient interval
/// scaled by `relative` (e.g. 1/10^6).
std::size_t depth_for_relative_width(const RationalBase& base,
                                     const Rat& relative);

/// Largest gap between consecutive sorted span midpoints of n <= n_max
/// (0 included as the left anchor), at truncation depth k.
Rat max_span_gap(const RationalBase& base, const Int& n_max, std::size_t k);

} // namespace ratbase
