#include "ratbase/transducer.hpp"

#include "ratbase/error.hpp"
#include "ratbase/numeration.hpp"

#include <memory>

namespace ratbase {

Int centre_offset(const RationalBase& base, const Digit& a) {
    if (!base.in_balanced(a))
        throw Error(ErrorKind::DigitNotInB,
                    "digit " + a.get_str() + " outside balanced alphabet");
    return a - base.balanced_centre();
}

std::vector<std::pair<Digit, Digit>> replacement_pairs(const RationalBase& base,
                                                       const Digit& a) {
    Int offset = centre_offset(base, a);
    std::vector<std::pair<Digit, Digit>> pairs;
    Digit b = offset < 0 ? Digit(-offset) : Digit(0);
    for (; b < base.q(); ++b) {
        Digit c = b + offset;
        if (c < 0 || c >= base.q()) break;
        pairs.emplace_back(b, c);
    }
    return pairs;
}

TransducerStep SuccessorTransducer::step(const State& n, const Digit& b) const {
    if (!base_.in_minimal(b))
        throw Error(ErrorKind::DigitNotInAq,
                    "digit " + b.get_str() + " outside minimal alphabet");
    Int shifted = (n + 1) * base_.p();
    Digit output = mod_floor(b - shifted, base_.q());
    // ceil(x/q - 1) = ceil((x - q)/q), exact integer division throughout
    State target = ceil_div(shifted - b - base_.q(), base_.q());
    return {std::move(output), std::move(target)};
}

std::vector<TransducerStep> SuccessorTransducer::substitution_candidates(
    const State& n, const Digit& b) const {
    if (!base_.in_minimal(b))
        throw Error(ErrorKind::DigitNotInAq,
                    "digit " + b.get_str() + " outside minimal alphabet");
    std::vector<TransducerStep> found;
    for (Digit a = base_.balanced_lo(); a <= base_.balanced_hi(); ++a) {
        auto next = transition(base_, n, a);
        if (!next) continue;
        Digit c = b + (a - base_.balanced_centre());
        if (c < 0 || c >= base_.q()) continue;
        found.push_back({std::move(c), std::move(*next)});
    }
    return found;
}

TransducerStep SuccessorTransducer::step_by_substitution(const State& n,
                                                         const Digit& b) const {
    auto found = substitution_candidates(n, b);
    if (found.size() != 1)
        throw Error(ErrorKind::InternalInconsistency,
                    "expected one candidate at state " + n.get_str() +
                        ", input " + b.get_str() + ", found " +
                        std::to_string(found.size()));
    return found.front();
}

std::pair<DigitWord, State> SuccessorTransducer::apply(
    const State& start, const DigitWord& input) const {
    DigitWord output;
    output.reserve(input.size());
    State state = start;
    for (const Digit& b : input) {
        TransducerStep s = step(state, b);
        output.push_back(std::move(s.output));
        state = std::move(s.target);
    }
    return {std::move(output), std::move(state)};
}

DigitStream SuccessorTransducer::apply_stream(DigitStream input,
                                              State start) const {
    auto in = std::make_shared<DigitStream>(std::move(input));
    return DigitStream(
        [transducer = *this, in, state = std::move(start)]() mutable {
            TransducerStep s = transducer.step(state, in->next().digit);
            state = std::move(s.target);
            return StreamItem{std::move(s.output), state};
        });
}

ShiftCheck check_shift_relation(const RationalBase& base, const State& n,
                                const State& i, const DigitWord& u) {
    ShiftCheck result{false, false, State(0), State(0), {}, ""};
    const LazyAutomaton tree = LazyAutomaton::tree(base);
    auto m = tree.run(n, u);
    if (!m) {
        result.detail = "u does not label a path from n";
        return result;
    }
    result.hypothesis_holds = true;
    result.m = *m;
    SuccessorTransducer transducer(base);
    auto [v, j] = transducer.apply(i, u);
    result.v = v;
    result.j = j;
    auto shifted = tree.run(n + i + 1, v);
    if (!shifted) {
        result.detail = "v does not label a path from n+i+1";
        return result;
    }
    result.holds = (*shifted == result.m + j + 1);
    if (!result.holds)
        result.detail = "run of v ends at " + shifted->get_str() +
                        ", expected " + Int(result.m + j + 1).get_str();
    return result;
}

} // namespace ratbase
