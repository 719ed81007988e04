#include "ratbase/export.hpp"

#include "ratbase/numeration.hpp"
#include "ratbase/spans.hpp"
#include "ratbase/transducer.hpp"

#include <map>
#include <sstream>

namespace ratbase {

namespace {

std::string node_line(const State& s) {
    return "  \"" + s.get_str() + "\";\n";
}

} // namespace

std::string to_dot(const LazyAutomaton& automaton, const DotOptions& options) {
    std::ostringstream out;
    out << "digraph \"" << options.graph_name << "\" {\n";
    out << "  rankdir=LR;\n  node [shape=circle];\n";
    if (options.max_state >= 0) {
        Int bound(static_cast<long>(options.max_state));
        for (State s = 0; s <= bound; ++s) out << node_line(s);
        automaton.for_each_edge(
            bound, options.depth,
            [&](const State& src, const Digit& digit, const State& dst) {
                if (options.skip_zero_loop && src == 0 && dst == 0 && digit == 0)
                    return;
                out << "  \"" << src.get_str() << "\" -> \"" << dst.get_str()
                    << "\" [label=\"" << digit.get_str() << "\"];\n";
            });
    }
    out << "}\n";
    return out.str();
}

std::string transducer_to_dot(const RationalBase& base,
                              const DotOptions& options) {
    std::ostringstream out;
    out << "digraph \"" << options.graph_name << "\" {\n";
    out << "  rankdir=LR;\n  node [shape=circle];\n";
    if (options.max_state >= 0) {
        Int bound(static_cast<long>(options.max_state));
        SuccessorTransducer transducer(base);
        for (State s = 0; s <= bound; ++s) out << node_line(s);
        for (State s = 0; s <= bound; ++s) {
            // One edge per target, labelled with every b|c pair it carries.
            std::map<State, std::string> grouped;
            for (Digit b = 0; b < base.q(); ++b) {
                TransducerStep st = transducer.step(s, b);
                if (st.target > bound) continue;
                std::string& label = grouped[st.target];
                if (!label.empty()) label += ", ";
                label += b.get_str() + "|" + st.output.get_str();
            }
            for (const auto& [target, label] : grouped)
                out << "  \"" << s.get_str() << "\" -> \"" << target.get_str()
                    << "\" [label=\"" << label << "\"];\n";
        }
    }
    out << "}\n";
    return out.str();
}

std::string fractal_svg(const RationalBase& base,
                        const FractalOptions& options) {
    std::ostringstream out;
    // Scale x by the ambient interval: every node value fits under the real
    // value of the maximal word of 0.
    DigitWord ambient = maximal_word(base, State(0)).take(48);
    double x_max =
        rho_enclosure(base, ambient, maximal_bounds(base)).hi.get_d();
    if (x_max <= 0) x_max = 1;

    struct Point {
        double x;
        double y;
    };
    std::vector<Point> points;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    double max_y = 0;
    const double usable = options.width - 2 * options.margin;
    if (options.max_state >= 0) {
        Int bound(static_cast<long>(options.max_state));
        Rat shrink = base.inverse_ratio();
        for (State n = 0; n <= bound; ++n) {
            std::size_t depth = represent(base, n).size();
            Rat x = Rat(n) * pow_rat(shrink, depth);
            double px = options.margin + x.get_d() / x_max * usable;
            double py = options.margin + double(depth) * options.row_height;
            points.push_back({px, py});
            max_y = std::max(max_y, py);
            if (n > 0) {
                Int parent = floor_div(base.q() * n, base.p());
                edges.emplace_back(parent.get_ui(), points.size() - 1);
            }
        }
    }

    double height = max_y + options.margin;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
        << options.width << "\" height=\"" << height << "\" viewBox=\"0 0 "
        << options.width << " " << height << "\">\n";
    for (const auto& [from, to] : edges)
        out << "  <line x1=\"" << points[from].x << "\" y1=\"" << points[from].y
            << "\" x2=\"" << points[to].x << "\" y2=\"" << points[to].y
            << "\" stroke=\"#888\" stroke-width=\"0.6\"/>\n";
    for (std::size_t i = 0; i < points.size(); ++i)
        out << "  <circle cx=\"" << points[i].x << "\" cy=\"" << points[i].y
            << "\" r=\"2.2\" fill=\"#234\"><title>" << i
            << "</title></circle>\n";
    out << "</svg>\n";
    return out.str();
}

} // namespace ratbase
