#pragma once

#include "ratbase/integers.hpp"

namespace ratbase {

/// A number system with base p/q: co-prime integers p > q > 1.
///
/// The base owns its digit alphabets, all of which are contiguous integer
/// ranges:
///   canonical alphabet  A_p = [0, p-1]
///   minimal alphabet    A_q = [0, q-1]
///   maximal alphabet          [p-q, p-1]
///   balanced alphabet   B   = [p-2q+1, p-1], 2q-1 digits centred on p-q
///
/// B keeps the top 2q-1 canonical digits when p > 2q-1 and extends below
/// zero when p < 2q-1; its largest digit is always p-1.
class RationalBase {
public:
    /// Validates p > q > 1 and gcd(p, q) = 1; throws OrderViolation or
    /// NotCoprime otherwise.
    RationalBase(Int p, Int q);

    const Int& p() const { return p_; }
    const Int& q() const { return q_; }

    /// p/q as an exact rational.
    Rat ratio() const { return make_rat(p_, q_); }
    /// q/p, the weight ratio of consecutive fractional digits.
    Rat inverse_ratio() const { return make_rat(q_, p_); }

    Int canonical_lo() const { return 0; }
    Int canonical_hi() const { return p_ - 1; }
    Int minimal_lo() const { return 0; }
    Int minimal_hi() const { return q_ - 1; }
    Int maximal_lo() const { return p_ - q_; }
    Int maximal_hi() const { return p_ - 1; }
    Int balanced_lo() const { return p_ - 2 * q_ + 1; }
    Int balanced_hi() const { return p_ - 1; }
    /// Centre of the balanced alphabet.
    Int balanced_centre() const { return p_ - q_; }

    bool in_canonical(const Int& d) const { return 0 <= d && d < p_; }
    bool in_minimal(const Int& d) const { return 0 <= d && d < q_; }
    bool in_maximal(const Int& d) const { return p_ - q_ <= d && d < p_; }
    bool in_balanced(const Int& d) const { return balanced_lo() <= d && d < p_; }

    /// The unique digit a in A_q with q | (n*p + a).
    Int minimal_letter(const Int& state) const {
        return mod_floor(-state * p_, q_);
    }

    /// The unique digit a in [p-q, p-1] with q | (n*p + a).
    Int maximal_letter(const Int& state) const {
        return (p_ - 1) - mod_floor((p_ - 1) + state * p_, q_);
    }

    bool operator==(const RationalBase& other) const {
        return p_ == other.p_ && q_ == other.q_;
    }

private:
    Int p_;
    Int q_;
};

} // namespace ratbase
