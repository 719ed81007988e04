#include "ratbase/spans.hpp"

#include "ratbase/error.hpp"
#include "ratbase/numeration.hpp"
#include "ratbase/transducer.hpp"

#include <algorithm>

namespace ratbase {

DigitBounds minimal_bounds(const RationalBase& base) {
    return {base.minimal_lo(), base.minimal_hi()};
}
DigitBounds maximal_bounds(const RationalBase& base) {
    return {base.maximal_lo(), base.maximal_hi()};
}
DigitBounds canonical_bounds(const RationalBase& base) {
    return {base.canonical_lo(), base.canonical_hi()};
}
DigitBounds balanced_bounds(const RationalBase& base) {
    return {base.balanced_lo(), base.balanced_hi()};
}

Rat rho_partial(const RationalBase& base, const DigitWord& prefix) {
    Rat sum(0);
    Rat weight(1);
    const Rat step = base.inverse_ratio();
    for (const Digit& a : prefix) {
        weight *= step;
        sum += Rat(a) * weight;
    }
    return sum;
}

namespace {

/// Sum of (q/p)^j for j > k: (q/p)^k * q/(p-q).
Rat tail_unit(const RationalBase& base, std::size_t k) {
    return pow_rat(base.inverse_ratio(), static_cast<unsigned long>(k)) *
           make_rat(base.q(), base.p() - base.q());
}

} // namespace

RatInterval rho_enclosure(const RationalBase& base, const DigitWord& prefix,
                          const DigitBounds& tail) {
    Rat partial = rho_partial(base, prefix);
    Rat unit = tail_unit(base, prefix.size());
    return RatInterval(partial + Rat(tail.lo) * unit,
                       partial + Rat(tail.hi) * unit);
}

Rat rho_tail_width(const RationalBase& base, std::size_t k,
                   const DigitBounds& tail) {
    return Rat(tail.hi - tail.lo) * tail_unit(base, k);
}

Digit max_letter(const RationalBase& base, const Int& x) {
    return (base.p() - 1) - mod_floor(base.p() - 1 - x, base.q());
}

Digit to_maximal(const RationalBase& base, const Digit& a) {
    if (!base.in_minimal(a))
        throw Error(ErrorKind::DigitNotInAq,
                    "digit " + a.get_str() + " outside minimal alphabet");
    return max_letter(base, a + base.p());
}

SpanWord::SpanWord(const RationalBase& base, State n)
    : base_(base), min_state_(n), max_state_(std::move(n)) {}

SpanWord::Item SpanWord::next() {
    Digit lo = base_.minimal_letter(min_state_);
    Digit hi = base_.maximal_letter(max_state_);
    min_state_ = *transition(base_, min_state_, lo);
    max_state_ = *transition(base_, max_state_, hi);
    return {hi - lo, min_state_, max_state_};
}

DigitWord SpanWord::take(std::size_t k) {
    DigitWord word;
    word.reserve(k);
    for (std::size_t i = 0; i < k; ++i) word.push_back(next().digit);
    return word;
}

SpanValue span(const RationalBase& base, const State& n, std::size_t k) {
    if (n < 0)
        throw Error(ErrorKind::PreconditionViolated, "span requires n >= 0");
    DigitWord min_prefix = minimal_word(base, n).take(k);
    DigitWord max_prefix = maximal_word(base, n).take(k);
    DigitWord difference(k);
    for (std::size_t i = 0; i < k; ++i)
        difference[i] = max_prefix[i] - min_prefix[i];

    RatInterval direct = rho_enclosure(base, difference, balanced_bounds(base));

    // Same value as the difference of the two word enclosures; the routes
    // must coincide exactly.
    RatInterval max_enc = rho_enclosure(base, max_prefix, maximal_bounds(base));
    RatInterval min_enc = rho_enclosure(base, min_prefix, minimal_bounds(base));
    RatInterval subtracted(max_enc.lo - min_enc.hi, max_enc.hi - min_enc.lo);
    if (!(direct == subtracted))
        throw Error(ErrorKind::InternalInconsistency,
                    "span enclosure routes disagree at n=" + n.get_str());
    return {n, k, direct};
}

Rat span_midpoint(const RationalBase& base, const State& n, std::size_t k) {
    SpanWord sw(base, n);
    Rat partial = rho_partial(base, sw.take(k));
    DigitBounds b = balanced_bounds(base);
    return partial + Rat(b.lo + b.hi) / 2 * tail_unit(base, k);
}

bool span_prefix_accepted(const RationalBase& base, const State& n,
                          std::size_t k) {
    SpanWord sw(base, n);
    return LazyAutomaton::balanced(base).run(State(0), sw.take(k)).has_value();
}

SpanFactorisationCheck check_span_factorisation(const RationalBase& base,
                                                const State& n,
                                                std::size_t k) {
    DigitWord w = minimal_word(base, n).take(k);
    SuccessorTransducer transducer(base);
    auto [image, end] = transducer.apply(State(0), w);
    (void)end;
    DigitWord lifted(k);
    for (std::size_t i = 0; i < k; ++i)
        lifted[i] = to_maximal(base, image[i]) - w[i];

    SpanFactorisationCheck check{};
    check.accepted =
        LazyAutomaton::balanced(base).run(State(0), lifted).has_value();
    SpanWord sw(base, n);
    check.equals_span_word = (lifted == sw.take(k));
    return check;
}

std::optional<State> prefix_extension_search(const RationalBase& base,
                                             const DigitWord& u,
                                             const Int& budget) {
    if (!LazyAutomaton::balanced(base).run(State(0), u))
        throw Error(ErrorKind::NotAccepted,
                    "word rejected by the balanced automaton: " +
                        format_word(u));
    for (State n = 0; n <= budget; ++n) {
        SpanWord sw(base, n);
        if (sw.take(u.size()) == u) return n;
    }
    return std::nullopt;
}

DigitWord value_witness(const RationalBase& base, const DigitWord& u) {
    if (!(base.p() < 2 * base.q() - 1))
        throw Error(ErrorKind::PreconditionViolated,
                    "value witness requires p < 2q-1");
    auto end = LazyAutomaton::balanced(base).run(State(0), u);
    if (!end)
        throw Error(ErrorKind::NotAccepted,
                    "word rejected by the balanced automaton: " +
                        format_word(u));
    // The end state of the run is the value of the word.
    DigitWord core = represent(base, *end);
    if (core.size() > u.size())
        throw Error(ErrorKind::InternalInconsistency,
                    "representation longer than the accepted word");
    DigitWord witness(u.size() - core.size(), Digit(0));
    witness.insert(witness.end(), core.begin(), core.end());
    return witness;
}

std::size_t depth_for_relative_width(const RationalBase& base,
                                     const Rat& relative) {
    // A positive lower bound on the ambient interval's length, i.e. on the
    // real value of the maximal word of 0.
    DigitWord prefix = maximal_word(base, State(0)).take(32);
    Rat ambient_lo = rho_enclosure(base, prefix, maximal_bounds(base)).lo;
    Rat target = ambient_lo * relative;
    DigitBounds b = balanced_bounds(base);
    std::size_t k = 0;
    while (rho_tail_width(base, k, b) >= target) ++k;
    return k;
}

namespace {

std::vector<Rat> sorted_midpoints(const RationalBase& base, const Int& n_max,
                                  std::size_t k) {
    std::vector<Rat> mids;
    for (State n = 0; n <= n_max; ++n)
        mids.push_back(span_midpoint(base, n, k));
    std::sort(mids.begin(), mids.end());
    return mids;
}

} // namespace

Rat max_span_gap(const RationalBase& base, const Int& n_max, std::size_t k) {
    std::vector<Rat> mids = sorted_midpoints(base, n_max, k);
    Rat gap(0);
    Rat prev(0); // spans are non-negative; anchor the scan at 0
    for (const Rat& m : mids) {
        Rat diff = m - prev;
        if (diff > gap) gap = diff;
        prev = m;
    }
    return gap;
}

DensityReport density_report(const RationalBase& base, const Int& n_max,
                             bool collect_rows) {
    DensityReport report{};
    report.dense = (base.p() < 2 * base.q());
    report.k = depth_for_relative_width(base, make_rat(Int(1), Int(1000000)));

    DigitWord ambient_prefix = maximal_word(base, State(0)).take(report.k);
    report.ambient_hi =
        rho_enclosure(base, ambient_prefix, maximal_bounds(base)).hi;

    if (collect_rows) {
        report.rows.reserve(mpz_class(n_max + 1).get_ui());
        for (State n = 0; n <= n_max; ++n) {
            SpanValue sv = span(base, n, report.k);
            SpanWord sw(base, n);
            report.rows.push_back(
                {n, report.k, sv.enclosure.lo, sv.enclosure.hi,
                 sw.take(report.k)});
        }
    }

    if (report.dense) {
        report.max_gap = max_span_gap(base, n_max, report.k);
        return report;
    }

    // Nowhere-dense side: branches through a balanced-unreachable state m
    // fill a sub-interval of the ambient interval that no span value enters.
    report.witness = find_balanced_unreachable(base, State(0));
    DigitWord stem = represent(base, report.witness);

    std::size_t cert_k = std::max(report.k, stem.size() + 8);
    while (true) {
        DigitWord lo_word = stem;
        for (const Digit& d :
             minimal_word(base, report.witness).take(cert_k - stem.size()))
            lo_word.push_back(d);
        DigitWord hi_word = stem;
        for (const Digit& d :
             maximal_word(base, report.witness).take(cert_k - stem.size()))
            hi_word.push_back(d);
        RatInterval lo_enc = rho_enclosure(base, lo_word, minimal_bounds(base));
        RatInterval hi_enc = rho_enclosure(base, hi_word, maximal_bounds(base));
        if (lo_enc.hi < hi_enc.lo) {
            // Inner approximation: certainly inside the true open interval.
            report.certificate = RatInterval(lo_enc.hi, hi_enc.lo);
            break;
        }
        cert_k *= 2;
        if (cert_k > 1u << 20)
            throw Error(ErrorKind::InternalInconsistency,
                        "certificate interval failed to separate");
    }

    for (State n = 0; n <= n_max; ++n)
        if (report.certificate->contains_strictly(
                span_midpoint(base, n, report.k)))
            ++report.midpoints_inside;
    return report;
}

} // namespace ratbase
