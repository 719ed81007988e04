#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "ratbase/automaton.hpp"
#include "ratbase/error.hpp"

#include <algorithm>
#include <set>

using namespace ratbase;

TEST_CASE("tree automaton successors") {
    RationalBase b32(Int(3), Int(2));
    auto tree = LazyAutomaton::tree(b32);

    auto edges = tree.successors(State(0));
    REQUIRE(edges.size() == 2);
    CHECK(edges[0].digit == 0);
    CHECK(edges[0].target == 0); // the 0-loop on the initial state
    CHECK(edges[1].digit == 2);
    CHECK(edges[1].target == 1);

    // oracle: the representation of 3 labels a run from 0
    DigitWord w = represent(b32, Int(3));
    CHECK(format_word(w) == "2,1,0");
    CHECK(tree.run(State(0), w) == State(3));

    for (const auto& base : testutil::test_bases())
        CHECK(LazyAutomaton::tree(base).step(State(0), Digit(0)) == State(0));
}

TEST_CASE("run of a word") {
    RationalBase b32(Int(3), Int(2));
    auto tree = LazyAutomaton::tree(b32);
    CHECK(tree.run(State(0), represent(b32, Int(2))) == State(2));
    CHECK_FALSE(tree.run(State(0), {Digit(1)}).has_value());

    RationalBase b43(Int(4), Int(3));
    auto balanced = LazyAutomaton::balanced(b43);
    CHECK(balanced.run(State(1), {Digit(-1)}) == State(1));
}

TEST_CASE("balanced automaton edge changes") {
    // p > 2q-1: low canonical digits disappear
    RationalBase b73(Int(7), Int(3));
    auto balanced73 = LazyAutomaton::balanced(b73);
    for (State s = 0; s <= 300; ++s)
        for (const Edge& e : balanced73.successors(s)) CHECK(e.digit >= 2);
    CHECK_FALSE(balanced73.step(State(3), Digit(0)).has_value());
    CHECK(LazyAutomaton::tree(b73).step(State(3), Digit(0)).has_value());

    // p < 2q-1: new negative digits appear
    RationalBase b43(Int(4), Int(3));
    auto balanced43 = LazyAutomaton::balanced(b43);
    bool saw_negative = false;
    for (State s = 0; s <= 50 && !saw_negative; ++s)
        for (const Edge& e : balanced43.successors(s))
            if (e.digit < 0) saw_negative = true;
    CHECK(saw_negative);

    // p = 2q-1: same automaton, transition for transition
    RationalBase b32(Int(3), Int(2));
    auto tree32 = LazyAutomaton::tree(b32);
    auto balanced32 = LazyAutomaton::balanced(b32);
    for (State s = 0; s <= 1000; ++s) {
        auto a = tree32.successors(s);
        auto b = balanced32.successors(s);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].digit == b[i].digit);
            CHECK(a[i].target == b[i].target);
        }
    }
}

TEST_CASE("successor counts") {
    for (const auto& base : testutil::test_bases()) {
        auto tree = LazyAutomaton::tree(base);
        auto balanced = LazyAutomaton::balanced(base);
        for (State s = 0; s <= 400; ++s) {
            // exactly one minimal and one maximal letter in the tree
            int minimal = 0, maximal = 0;
            for (const Edge& e : tree.successors(s)) {
                if (base.in_minimal(e.digit)) ++minimal;
                if (base.in_maximal(e.digit)) ++maximal;
            }
            CHECK(minimal == 1);
            CHECK(maximal == 1);

            std::size_t expected =
                mod_floor(s + 1, base.q()) == 0 ? 1u : 2u;
            CHECK(balanced.successors(s).size() == expected);
        }
    }
}

TEST_CASE("determinism of the transition function") {
    for (const auto& base : testutil::test_bases()) {
        auto tree = LazyAutomaton::tree(base);
        for (State s = 0; s <= 200; ++s) {
            std::set<Digit> digits;
            for (const Edge& e : tree.successors(s)) {
                CHECK(digits.insert(e.digit).second);
                CHECK(tree.step(s, e.digit) == e.target);
            }
        }
    }
}

TEST_CASE("minimal word stream") {
    RationalBase b32(Int(3), Int(2));

    // n = 0 stays on the 0-loop
    auto zeros = minimal_word(b32, State(0)).take_items(10);
    for (const auto& item : zeros) {
        CHECK(item.digit == 0);
        CHECK(item.state == 0);
    }
    CHECK(zeros.front().digit != 1);

    // n = 1: digits and visited states, against the scan oracle
    auto items = minimal_word(b32, State(1)).take_items(8);
    DigitWord digits;
    for (const auto& item : items) digits.push_back(item.digit);
    CHECK(format_word(digits) == "1,0,1,1,0,0,0,1");
    std::vector<long> states{2, 3, 5, 8, 12, 18, 27, 41};
    for (std::size_t i = 0; i < items.size(); ++i)
        CHECK(items[i].state == states[i]);
    CHECK(digits == testutil::scan_extremal_prefix(b32, State(1), 8, false));
}

TEST_CASE("maximal word stream") {
    RationalBase b32(Int(3), Int(2));
    auto items = maximal_word(b32, State(0)).take_items(5);
    DigitWord digits;
    for (const auto& item : items) digits.push_back(item.digit);
    CHECK(format_word(digits) == "2,1,2,2,1");
    std::vector<long> states{1, 2, 4, 7, 11};
    for (std::size_t i = 0; i < items.size(); ++i)
        CHECK(items[i].state == states[i]);

    RationalBase b73(Int(7), Int(3));
    CHECK(maximal_word(b73, State(0)).next().digit == 6);

    for (const auto& base : testutil::test_bases())
        CHECK(maximal_word(base, State(17)).take(40) ==
              testutil::scan_extremal_prefix(base, State(17), 40, true));
}

TEST_CASE("stream prefixes label runs") {
    for (const auto& base : testutil::test_bases()) {
        auto tree = LazyAutomaton::tree(base);
        for (long n : {0L, 1L, 9L, 57L}) {
            auto items = minimal_word(base, State(n)).take_items(24);
            DigitWord prefix;
            for (const auto& item : items) prefix.push_back(item.digit);
            auto end = tree.run(State(n), prefix);
            REQUIRE(end.has_value());
            CHECK(*end == items.back().state);
        }
    }
}

TEST_CASE("reachable interval") {
    RationalBase b32(Int(3), Int(2));
    auto tree = LazyAutomaton::tree(b32);
    CHECK(tree.reachable_interval(State(5), 0) == StateInterval{State(5), State(5)});
    CHECK(tree.reachable_interval(State(0), 1) == StateInterval{State(0), State(1)});

    // the endpoint computation matches exhaustive search
    for (const auto& base : testutil::test_bases()) {
        auto t = LazyAutomaton::tree(base);
        for (unsigned depth = 0; depth <= 8; ++depth) {
            StateInterval iv = t.reachable_interval(State(0), depth);
            auto set = t.reachable_set(State(0), depth);
            REQUIRE(!set.empty());
            CHECK(set.front() == iv.lo);
            CHECK(set.back() == iv.hi);
            CHECK(Int(set.size()) == iv.size());
        }
    }

    // also contiguous for the balanced automaton when p < 2q
    for (auto [p, q] : {std::pair<int, int>{3, 2}, {4, 3}, {5, 3}, {7, 4}}) {
        RationalBase base{Int(p), Int(q)};
        auto balanced = LazyAutomaton::balanced(base);
        for (unsigned depth = 0; depth <= 8; ++depth) {
            StateInterval iv = balanced.reachable_interval(State(2), depth);
            auto set = balanced.reachable_set(State(2), depth);
            CHECK(Int(set.size()) == iv.size());
            CHECK(set.front() == iv.lo);
            CHECK(set.back() == iv.hi);
        }
    }

    // strict growth of the slices for p > 2q
    RationalBase b73(Int(7), Int(3));
    auto t73 = LazyAutomaton::tree(b73);
    Int previous = -1;
    for (unsigned depth = 0; depth <= 20; ++depth) {
        Int size = t73.reachable_interval(State(0), depth).size();
        CHECK(size > previous);
        previous = size;
    }
}

TEST_CASE("balanced-unreachable witness") {
    RationalBase b73(Int(7), Int(3));
    State m = find_balanced_unreachable(b73, State(0));
    CHECK(mod_floor(m, Int(7)) == 0);
    CHECK(m > 0);
    // in the depth-8 slice of the tree automaton
    auto slice = LazyAutomaton::tree(b73).reachable_set(State(0), 8);
    CHECK(std::binary_search(slice.begin(), slice.end(), m));
    // unreachable in the balanced automaton at any depth up to p+1
    auto balanced = LazyAutomaton::balanced(b73);
    std::set<State> level{State(0)};
    for (int d = 0; d < 8; ++d) {
        std::set<State> next;
        for (const State& s : level)
            for (const Edge& e : balanced.successors(s)) next.insert(e.target);
        CHECK(next.count(m) == 0);
        level = std::move(next);
    }

    RationalBase b52(Int(5), Int(2));
    CHECK(find_balanced_unreachable(b52, State(1)) > 0);

    RationalBase b43(Int(4), Int(3));
    CHECK_THROWS_AS(find_balanced_unreachable(b43, State(0)), Error);
}

TEST_CASE("accepted words are representations") {
    // words accepted from 0 without a leading zero are exactly the
    // representations of their end states
    for (const auto& base : testutil::test_bases()) {
        auto tree = LazyAutomaton::tree(base);
        for (Int n = 0; n <= 200; ++n)
            CHECK(tree.run(State(0), represent(base, n)) == n);

        struct Item {
            State state;
            DigitWord word;
        };
        std::vector<Item> frontier{{State(0), {}}};
        for (int depth = 0; depth < 5; ++depth) {
            std::vector<Item> next;
            for (const auto& item : frontier) {
                for (const Edge& e : tree.successors(item.state)) {
                    if (item.word.empty() && e.digit == 0) continue;
                    Item extended{e.target, item.word};
                    extended.word.push_back(e.digit);
                    CHECK(extended.word == represent(base, e.target));
                    next.push_back(std::move(extended));
                }
            }
            frontier = std::move(next);
        }
    }
}
