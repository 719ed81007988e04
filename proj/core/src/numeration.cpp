#include "ratbase/numeration.hpp"

#include "ratbase/error.hpp"

#include <algorithm>

namespace ratbase {

Rat evaluate(const RationalBase& base, const DigitWord& word) {
    // Horner form of the defining sum: value(u.a) = value(u)*(p/q) + a/q.
    Rat value(0);
    const Rat ratio = base.ratio();
    for (const Digit& a : word) {
        value *= ratio;
        value += make_rat(a, base.q());
    }
    return value;
}

DigitWord represent(const RationalBase& base, const Int& n) {
    if (n < 0)
        throw Error(ErrorKind::PreconditionViolated,
                    "represent requires n >= 0, got " + n.get_str());
    DigitWord digits; // built least-significant first
    Int current = n;
    while (current > 0) {
        Int t = base.q() * current;
        digits.push_back(mod_floor(t, base.p()));
        current = floor_div(t, base.p());
    }
    std::reverse(digits.begin(), digits.end());
    return digits;
}

std::optional<State> transition(const RationalBase& base, const State& n,
                                const Digit& a) {
    Int num = n * base.p() + a;
    if (num < 0 || mod_floor(num, base.q()) != 0) return std::nullopt;
    return floor_div(num, base.q());
}

} // namespace ratbase
