#pragma once

// Shared fixtures for the test suites: the desk-scale base set and
// independent oracles kept deliberately separate from the library's own
// computation paths.

#include "ratbase/base.hpp"
#include "ratbase/integers.hpp"
#include "ratbase/words.hpp"

#include <random>
#include <utility>
#include <vector>

namespace testutil {

using ratbase::Digit;
using ratbase::DigitWord;
using ratbase::Int;
using ratbase::Rat;
using ratbase::RationalBase;
using ratbase::State;

inline std::vector<std::pair<int, int>> base_pairs() {
    return {{3, 2}, {4, 3}, {5, 2}, {5, 3}, {7, 3}, {7, 4}, {10, 3}};
}

inline std::vector<RationalBase> test_bases() {
    std::vector<RationalBase> bases;
    for (auto [p, q] : base_pairs()) bases.emplace_back(Int(p), Int(q));
    return bases;
}

/// Value of a word by the defining sum with explicit powers, no Horner:
/// digit i from the right contributes (a_i/q) * (p/q)^i.
inline Rat direct_value(const RationalBase& base, const DigitWord& word) {
    Rat total(0);
    for (std::size_t j = 0; j < word.size(); ++j) {
        unsigned long i = static_cast<unsigned long>(word.size() - 1 - j);
        Rat weight = ratbase::pow_rat(base.ratio(), i);
        total += ratbase::make_rat(word[j], base.q()) * weight;
    }
    return total;
}

/// Real value of a finite prefix with explicit powers: letter j (1-indexed)
/// weighs (q/p)^j.
inline Rat direct_real_value(const RationalBase& base, const DigitWord& prefix) {
    Rat total(0);
    for (std::size_t j = 0; j < prefix.size(); ++j) {
        Rat weight = ratbase::pow_rat(base.inverse_ratio(),
                                      static_cast<unsigned long>(j + 1));
        total += Rat(prefix[j]) * weight;
    }
    return total;
}

/// Step-by-step divisibility oracle for the unique letter of a state inside
/// a digit range [lo, hi] spanning at most q values of one residue.
inline std::pair<Digit, State> scan_step(const RationalBase& base,
                                         const State& state, const Int& lo,
                                         const Int& hi) {
    for (Int a = lo; a <= hi; ++a) {
        Int t = state * base.p() + a;
        if (t >= 0 && mpz_divisible_p(t.get_mpz_t(), base.q().get_mpz_t()))
            return {a, Int(t / base.q())};
    }
    throw std::logic_error("no letter in range");
}

inline std::pair<Digit, State> scan_minimal_step(const RationalBase& base,
                                                 const State& state) {
    return scan_step(base, state, Int(0), Int(base.q() - 1));
}

inline std::pair<Digit, State> scan_maximal_step(const RationalBase& base,
                                                 const State& state) {
    return scan_step(base, state, Int(base.p() - base.q()),
                     Int(base.p() - 1));
}

/// Prefix of the minimal/maximal word derived purely from the scan oracle.
inline DigitWord scan_extremal_prefix(const RationalBase& base, State state,
                                      std::size_t k, bool maximal) {
    DigitWord word;
    for (std::size_t i = 0; i < k; ++i) {
        auto [digit, next] = maximal ? scan_maximal_step(base, state)
                                     : scan_minimal_step(base, state);
        word.push_back(digit);
        state = next;
    }
    return word;
}

inline std::mt19937_64 rng(std::uint64_t seed = 42) {
    return std::mt19937_64(seed);
}

} // namespace testutil
