#pragma once

#include "ratbase/automaton.hpp"
#include "ratbase/base.hpp"

#include <optional>
#include <string>

namespace ratbase {

struct DotOptions {
    /// Include states <= max_state; negative renders header and footer only.
    long long max_state = 40;
    /// Only states within this distance of state 0, when set.
    std::optional<unsigned> depth = std::nullopt;
    /// Drop the 0-labelled loop on state 0 (tree view).
    bool skip_zero_loop = false;
    std::string graph_name = "ratbase";
};

/// Graphviz rendering of an automaton: one node per state with its decimal
/// label, one edge per transition labelled by the digit.
std::string to_dot(const LazyAutomaton& automaton, const DotOptions& options);

/// Graphviz rendering of the successor transducer: edges grouped per target
/// with "b|c" pair lists as labels.
std::string transducer_to_dot(const RationalBase& base,
                              const DotOptions& options);

struct FractalOptions {
    long long max_state = 200;
    double width = 840;
    double row_height = 36;
    double margin = 20;
};

/// SVG drawing of the representation tree as a fractal object: node n sits
/// at x = n * (q/p)^d and y = d, with d the length of its representation.
std::string fractal_svg(const RationalBase& base, const FractalOptions& options);

} // namespace ratbase
