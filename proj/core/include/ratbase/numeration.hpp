#pragma once

#include "ratbase/base.hpp"
#include "ratbase/words.hpp"

#include <optional>

namespace ratbase {

/// Exact value of a word: digit i from the right contributes
/// (a_i / q) * (p/q)^i. Defined over any integer digits, so values of
/// arbitrary words are rationals, not necessarily integers.
Rat evaluate(const RationalBase& base, const DigitWord& word);

/// The representation of n >= 0: the unique word over A_p without a leading
/// zero whose value is n (empty for n = 0). Produced by the modified
/// Euclidean division q*N_i = p*N_{i+1} + a_i.
DigitWord represent(const RationalBase& base, const Int& n);

/// Partial transition function: (n*p + a)/q when q divides n*p + a and the
/// quotient is a natural number, nothing otherwise. Defined for any integer
/// digit a, not only canonical ones.
std::optional<State> transition(const RationalBase& base, const State& n,
                                const Digit& a);

} // namespace ratbase
