#pragma once

#include "ratbase/automaton.hpp"
#include "ratbase/base.hpp"
#include "ratbase/stream.hpp"
#include "ratbase/words.hpp"

#include <utility>
#include <vector>

namespace ratbase {

/// Offset of a balanced digit from the centre of B, in [-(q-1), q-1].
Int centre_offset(const RationalBase& base, const Digit& a);

/// Label replacement: the pairs (b, c) over A_q x A_q whose difference c - b
/// is the centre offset of a. Sorted by input letter; q - |offset| pairs.
/// Throws DigitNotInB outside the balanced alphabet.
std::vector<std::pair<Digit, Digit>> replacement_pairs(const RationalBase& base,
                                                       const Digit& a);

struct TransducerStep {
    Digit output;
    State target;
};

/// Letter-to-letter sequential transducer over A_q x A_q that turns the
/// minimal word of n into the minimal word of n+1. Its underlying input
/// automaton has exactly the transition graph of the balanced automaton;
/// the labels are replaced through replacement_pairs.
class SuccessorTransducer {
public:
    explicit SuccessorTransducer(RationalBase base) : base_(std::move(base)) {}

    const RationalBase& base() const { return base_; }

    /// Production path, O(1) big-integer steps:
    ///   output = (b - (n+1)p) mod q,  target = ceil(((n+1)p - b)/q - 1).
    /// Total for every b in A_q. Throws DigitNotInAq.
    TransducerStep step(const State& n, const Digit& b) const;

    /// Definitional path: scans balanced digits a with a live transition and
    /// a replacement pair consuming b. Exactly one candidate must exist;
    /// throws InternalInconsistency otherwise. Kept as the oracle the closed
    /// form is checked against.
    TransducerStep step_by_substitution(const State& n, const Digit& b) const;

    /// All candidates the substitution rule yields, for checking that there
    /// is exactly one.
    std::vector<TransducerStep> substitution_candidates(const State& n,
                                                        const Digit& b) const;

    /// Runs a finite word over A_q; output has the same length.
    std::pair<DigitWord, State> apply(const State& start,
                                      const DigitWord& input) const;

    /// Lazily maps an infinite word over A_q; emitted state is the
    /// transducer state after each step.
    DigitStream apply_stream(DigitStream input, State start = State(0)) const;

private:
    RationalBase base_;
};

/// Outcome of one instance of the shift relation: whenever u leads n to m in
/// the tree automaton and (u|v) leads i to j in the transducer, v must lead
/// n+i+1 to m+j+1 in the tree automaton.
struct ShiftCheck {
    bool hypothesis_holds; // u runs from n in the tree and defines (v, j)
    bool holds;            // the shifted run exists and lands on m+j+1
    State m;
    State j;
    DigitWord v;
    std::string detail;
};

ShiftCheck check_shift_relation(const RationalBase& base, const State& n,
                                const State& i, const DigitWord& u);

} // namespace ratbase
