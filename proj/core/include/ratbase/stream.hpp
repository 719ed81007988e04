#pragma once

#include "ratbase/words.hpp"

#include <functional>
#include <utility>

namespace ratbase {

/// One step of an infinite word: the emitted digit and the state the
/// generating automaton sits in after reading it.
struct StreamItem {
    Digit digit;
    State state;
};

/// Infinite digit word, generated one letter at a time. A stream is a
/// single-consumer sequential cursor; independent streams may run in
/// parallel, one stream must not be advanced concurrently.
class DigitStream {
public:
    explicit DigitStream(std::function<StreamItem()> next)
        : next_(std::move(next)) {}

    StreamItem next() { return next_(); }

    /// The next k digits.
    DigitWord take(std::size_t k) {
        DigitWord word;
        word.reserve(k);
        for (std::size_t i = 0; i < k; ++i) word.push_back(next_().digit);
        return word;
    }

    /// The next k (digit, state) steps.
    std::vector<StreamItem> take_items(std::size_t k) {
        std::vector<StreamItem> items;
        items.reserve(k);
        for (std::size_t i = 0; i < k; ++i) items.push_back(next_());
        return items;
    }

private:
    std::function<StreamItem()> next_;
};

} // namespace ratbase
