#pragma once

#include "ratbase/integers.hpp"

#include <string>
#include <vector>

namespace ratbase {

/// One digit of a word. Alphabet membership is a per-operation check, not a
/// property of the value: the balanced alphabet may contain negative digits.
using Digit = Int;

/// Finite word, most-significant digit first.
using DigitWord = std::vector<Digit>;

/// Automaton state (a natural number).
using State = Int;

/// Comma-separated signed decimals; the empty word prints as U+03B5.
std::string format_word(const DigitWord& word);

/// Accepted forms:
///   - "" / "eps" / the U+03B5 glyph: the empty word
///   - comma-separated signed decimals: "2,1,2" or "-1,0,3"
///   - compact digit string ("212"), only when p <= 10 and every
///     character is an ASCII digit
/// Throws ParseError on anything else.
DigitWord parse_word(const std::string& text, const Int& p);

} // namespace ratbase
