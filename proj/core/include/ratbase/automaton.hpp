#pragma once

#include "ratbase/base.hpp"
#include "ratbase/numeration.hpp"
#include "ratbase/stream.hpp"
#include "ratbase/words.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace ratbase {

/// Set of states reachable in exactly i steps, which is a contiguous run of
/// integers wherever the per-depth slices of the automaton are contiguous.
struct StateInterval {
    State lo;
    State hi;

    Int size() const { return hi - lo + 1; }
    bool contains(const State& s) const { return lo <= s && s <= hi; }
    bool operator==(const StateInterval& o) const {
        return lo == o.lo && hi == o.hi;
    }
};

struct Edge {
    Digit digit;
    State target;
};

/// Deterministic automaton on state set N with the division transition rule,
/// restricted to a contiguous digit alphabet. Never materialized: transitions
/// are computed on demand, state 0 is initial, every state is accepting.
///
/// Two instances matter:
///   tree()     - canonical alphabet A_p; the representation tree of the
///                integers plus a 0-loop on state 0
///   balanced() - balanced alphabet B; drops the low canonical digits when
///                p > 2q-1 (a forest) and adds negative digits when
///                p < 2q-1 (a DAG); coincides with tree() when p = 2q-1
class LazyAutomaton {
public:
    static LazyAutomaton tree(const RationalBase& base) {
        return LazyAutomaton(base, base.canonical_lo(), base.canonical_hi());
    }

    static LazyAutomaton balanced(const RationalBase& base) {
        return LazyAutomaton(base, base.balanced_lo(), base.balanced_hi());
    }

    const RationalBase& base() const { return base_; }
    const Digit& alphabet_lo() const { return alpha_lo_; }
    const Digit& alphabet_hi() const { return alpha_hi_; }

    /// Transition by one digit; empty when the digit is outside the alphabet
    /// or the division rule does not apply.
    std::optional<State> step(const State& state, const Digit& a) const;

    /// All outgoing edges of a state, in increasing digit order. Non-empty
    /// for every state.
    std::vector<Edge> successors(const State& state) const;

    Edge min_successor(const State& state) const;
    Edge max_successor(const State& state) const;

    /// Runs the word from `start`; the end state if every step is defined.
    std::optional<State> run(const State& start, const DigitWord& word) const;

    /// Endpoint-following computation of the depth-i slice: i minimal steps
    /// from lo, i maximal steps from hi. Equals the exact reachable set
    /// whenever the slices are contiguous (the tree automaton always; the
    /// balanced one for p < 2q).
    StateInterval reachable_interval(const State& state, unsigned depth) const;

    /// Exact reachable set at the given depth by breadth-first search.
    /// Exponential in depth; meant for oracle checks at desk scale.
    std::vector<State> reachable_set(const State& state, unsigned depth) const;

    /// Enumerates edges between states <= max_state, sources in increasing
    /// order. With a depth bound, only states within that distance from the
    /// initial state are visited.
    void for_each_edge(
        const Int& max_state, std::optional<unsigned> depth_bound,
        const std::function<void(const State&, const Digit&, const State&)>& fn)
        const;

private:
    LazyAutomaton(const RationalBase& base, Int lo, Int hi)
        : base_(base), alpha_lo_(std::move(lo)), alpha_hi_(std::move(hi)) {}

    RationalBase base_;
    Digit alpha_lo_;
    Digit alpha_hi_;
};

/// The unique infinite word over the minimal alphabet A_q readable from
/// `start` in the tree automaton, digit by digit.
DigitStream minimal_word(const RationalBase& base, State start);

/// Counterpart over the maximal alphabet [p-q, p-1].
DigitStream maximal_word(const RationalBase& base, State start);

/// For p > 2q: a state m > 0, congruent to 0 mod p, reachable from n in the
/// tree automaton in exactly p+1 steps but from nowhere in the balanced one
/// (its only incoming digit is 0, which the balanced alphabet lacks).
/// Verified by exhaustive search when the depth permits. Throws
/// PreconditionViolated when p <= 2q.
State find_balanced_unreachable(const RationalBase& base, const State& n);

} // namespace ratbase
