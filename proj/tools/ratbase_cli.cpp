// Command-line front end: representations, extremal words, the successor
// transducer, verification campaigns and graph/fractal exporters.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
// 3 I/O error.

#include "ratbase/automaton.hpp"
#include "ratbase/error.hpp"
#include "ratbase/export.hpp"
#include "ratbase/numeration.hpp"
#include "ratbase/spans.hpp"
#include "ratbase/transducer.hpp"
#include "ratbase/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

using json = nlohmann::json;
using namespace ratbase;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct Options {
    long p = 0;
    long q = 0;
    std::string n = "0";
    std::size_t depth = 64;
    std::string budget = "100000";
    long samples = 1000;
    bool states = false;
    bool roundtrip = false;
    bool inject_mismatch = false;
    bool no_zero_loop = false;
    long max_state = 40;
    std::string format;
    std::string output;
    std::string word;
    std::string value;
    std::string suite;
    std::string object;
};

Int parse_natural(const std::string& text, const char* what) {
    for (std::size_t i = 0; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw Error(ErrorKind::ParseError,
                        std::string(what) + " must be a non-negative integer, got '" +
                            text + "'");
    if (text.empty())
        throw Error(ErrorKind::ParseError, std::string(what) + " is empty");
    return Int(text, 10);
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::Io, "cannot open '" + path + "'");
    out << content;
    if (!out) throw Error(ErrorKind::Io, "write failed for '" + path + "'");
}

std::string csv_quote(const std::string& field) {
    bool needs = field.find_first_of(",\"\r\n") != std::string::npos;
    if (!needs) return field;
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

int cmd_repr(const Options& opt) {
    RationalBase base(Int(opt.p), Int(opt.q));
    Int n = parse_natural(opt.value, "n");
    DigitWord word = represent(base, n);
    std::string out = format_word(word) + "\n";
    if (opt.roundtrip)
        out += "value: " + to_string(evaluate(base, word)) + "\n";
    write_output(opt.output, out);
    return kExitOk;
}

int cmd_eval(const Options& opt) {
    RationalBase base(Int(opt.p), Int(opt.q));
    DigitWord word = parse_word(opt.word, base.p());
    Rat value = evaluate(base, word);
    std::string out = to_string(value) + "\n";
    if (opt.roundtrip) {
        if (value.get_den() == 1 && value >= 0)
            out += "representation: " +
                   format_word(represent(base, value.get_num())) + "\n";
        else
            out += "representation: none (value is not a natural number)\n";
    }
    write_output(opt.output, out);
    return kExitOk;
}

std::string states_line(const std::vector<StreamItem>& items) {
    std::string line = "states: ";
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) line += ',';
        line += items[i].state.get_str();
    }
    return line + "\n";
}

int cmd_extremal_word(const Options& opt, bool maximal) {
    RationalBase base(Int(opt.p), Int(opt.q));
    Int n = parse_natural(opt.n, "n");
    DigitStream stream =
        maximal ? maximal_word(base, n) : minimal_word(base, n);
    auto items = stream.take_items(opt.depth);
    DigitWord word;
    for (const auto& item : items) word.push_back(item.digit);
    std::string out = format_word(word) + "\n";
    if (opt.states) out += states_line(items);
    write_output(opt.output, out);
    return kExitOk;
}

int cmd_spanword(const Options& opt) {
    RationalBase base(Int(opt.p), Int(opt.q));
    Int n = parse_natural(opt.n, "n");
    SpanWord sw(base, n);
    DigitWord word;
    std::string min_states, max_states;
    for (std::size_t i = 0; i < opt.depth; ++i) {
        SpanWord::Item item = sw.next();
        word.push_back(item.digit);
        if (i) {
            min_states += ',';
            max_states += ',';
        }
        min_states += item.min_state.get_str();
        max_states += item.max_state.get_str();
    }
    std::string out = format_word(word) + "\n";
    if (opt.states)
        out += "min-states: " + min_states + "\nmax-states: " + max_states + "\n";
    write_output(opt.output, out);
    return kExitOk;
}

int cmd_transduce(const Options& opt) {
    RationalBase base(Int(opt.p), Int(opt.q));
    Int n = parse_natural(opt.n, "n");
    SuccessorTransducer transducer(base);
    DigitWord input = minimal_word(base, n).take(opt.depth);
    DigitWord image = transducer.apply(State(0), input).first;
    DigitWord expected = minimal_word(base, n + 1).take(opt.depth);
    if (opt.inject_mismatch && !image.empty())
        image[0] = mod_floor(image[0] + 1, base.q());
    bool match = (image == expected);
    std::string out;
    out += "input:    " + format_word(input) + "\n";
    out += "image:    " + format_word(image) + "\n";
    out += "expected: " + format_word(expected) + "\n";
    out += match ? "MATCH\n" : "MISMATCH\n";
    write_output(opt.output, out);
    return match ? kExitOk : kExitViolation;
}

json report_to_json(const SuiteReport& report) {
    json j;
    j["schema"] = 1;
    j["suite"] = report.suite;
    j["p"] = report.p.get_str();
    j["q"] = report.q.get_str();
    json params = json::object();
    for (const auto& [key, value] : report.params) params[key] = value;
    j["params"] = params;
    j["checks"] = report.checks;
    j["violations"] = report.violations;
    if (report.first_counterexample.empty())
        j["first_counterexample"] = nullptr;
    else
        j["first_counterexample"] = report.first_counterexample;
    json info = json::object();
    for (const auto& [key, value] : report.info) info[key] = value;
    j["info"] = info;
    j["replay"] = report.replay;
    return j;
}

std::string replay_line(const Options& opt) {
    std::string line = "ratbase verify " + opt.suite + " -p " +
                       std::to_string(opt.p) + " -q " + std::to_string(opt.q);
    line += " --n-max " + opt.n;
    line += " -k " + std::to_string(opt.depth);
    line += " --budget " + opt.budget;
    line += " --samples " + std::to_string(opt.samples);
    return line;
}

int cmd_verify(const Options& opt, bool n_given) {
    RationalBase base(Int(opt.p), Int(opt.q));
    Int budget = parse_natural(opt.budget, "budget");

    // Per-suite default ranges, sized to finish comfortably on a laptop.
    auto pick_n = [&](const char* fallback) {
        return n_given ? parse_natural(opt.n, "n-max") : Int(fallback);
    };

    SuiteReport report;
    if (opt.suite == "seqic") {
        report = verify_unique_candidate(base, pick_n("10000"));
    } else if (opt.suite == "dpq-caract-equiv") {
        report = verify_step_equivalence(base, pick_n("10000"));
    } else if (opt.suite == "mpq-correct") {
        report = verify_successor_image(base, pick_n("1000"), opt.depth);
    } else if (opt.suite == "mpq-cc") {
        report = verify_finite_runs(base, pick_n("1000"), opt.depth, budget,
                                    std::min(opt.samples, 20L));
    } else if (opt.suite == "that-complete") {
        report = verify_span_acceptance(base, pick_n("1000"), opt.depth);
    } else if (opt.suite == "dpq-to-spq") {
        report = verify_span_factorisation_suite(base, pick_n("500"), opt.depth);
    } else if (opt.suite == "shift") {
        report = verify_shift_relation(base, opt.samples, 500, 12);
    } else if (opt.suite == "cantor") {
        report = verify_unreachable_witness(base, pick_n("0"));
    } else if (opt.suite == "val-equal") {
        report = verify_value_witness(base, opt.samples, 10);
    } else if (opt.suite == "density") {
        if (opt.format == "csv") {
            DensityReport density =
                density_report(base, pick_n("10000"), /*collect_rows=*/true);
            std::string csv = "n,k,span_lo,span_hi,spanword_prefix\r\n";
            for (const SpanRow& row : density.rows) {
                csv += row.n.get_str() + "," + std::to_string(row.k) + "," +
                       csv_quote(to_string(row.lo)) + "," +
                       csv_quote(to_string(row.hi)) + "," +
                       csv_quote(format_word(row.prefix)) + "\r\n";
            }
            write_output(opt.output, csv);
            return kExitOk;
        }
        report = verify_density(base, pick_n("10000"));
    } else {
        throw Error(ErrorKind::ParseError, "unknown suite '" + opt.suite + "'");
    }

    report.replay = replay_line(opt);
    write_output(opt.output, report_to_json(report).dump(2) + "\n");
    return report.passed() ? kExitOk : kExitViolation;
}

int cmd_export(const Options& opt, bool depth_given) {
    RationalBase base(Int(opt.p), Int(opt.q));
    std::string format = opt.format;
    if (format.empty()) format = (opt.object == "fractal") ? "svg" : "dot";

    std::string content;
    if (opt.object == "fractal") {
        if (format != "svg")
            throw Error(ErrorKind::ParseError,
                        "fractal export supports only --format svg");
        FractalOptions fractal;
        fractal.max_state = opt.max_state;
        content = fractal_svg(base, fractal);
    } else {
        if (format != "dot")
            throw Error(ErrorKind::ParseError,
                        "graph exports support only --format dot");
        DotOptions dot;
        dot.max_state = opt.max_state;
        dot.skip_zero_loop = opt.no_zero_loop;
        if (depth_given) dot.depth = static_cast<unsigned>(opt.depth);
        if (opt.object == "tree") {
            dot.graph_name = "tree_" + std::to_string(opt.p) + "_" +
                             std::to_string(opt.q);
            content = to_dot(LazyAutomaton::tree(base), dot);
        } else if (opt.object == "that") {
            dot.graph_name = "balanced_" + std::to_string(opt.p) + "_" +
                             std::to_string(opt.q);
            content = to_dot(LazyAutomaton::balanced(base), dot);
        } else if (opt.object == "transducer") {
            dot.graph_name = "transducer_" + std::to_string(opt.p) + "_" +
                             std::to_string(opt.q);
            content = transducer_to_dot(base, dot);
        } else {
            throw Error(ErrorKind::ParseError,
                        "unknown export object '" + opt.object + "'");
        }
    }
    write_output(opt.output, content);
    return kExitOk;
}

void add_base_options(CLI::App* cmd, Options& opt) {
    cmd->add_option("-p", opt.p, "numerator of the base")->required();
    cmd->add_option("-q", opt.q, "denominator of the base")->required();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic in rational base number systems"};
    app.require_subcommand(1);
    Options opt;

    auto* repr = app.add_subcommand("repr", "representation of an integer");
    add_base_options(repr, opt);
    repr->add_option("n", opt.value, "the integer to represent")->required();
    repr->add_flag("--roundtrip", opt.roundtrip, "also print the value");

    auto* eval = app.add_subcommand("eval", "value of a digit word");
    add_base_options(eval, opt);
    eval->add_option("word", opt.word,
                     "comma-separated digits; '' or 'eps' for the empty word");
    eval->add_flag("--roundtrip", opt.roundtrip,
                   "also print the representation of the value");

    auto add_word_options = [&](CLI::App* cmd) {
        add_base_options(cmd, opt);
        cmd->add_option("-n,--n-max", opt.n, "node");
        cmd->add_option("-k,--depth", opt.depth, "number of letters");
        cmd->add_flag("--states", opt.states, "also print visited states");
    };
    auto* minw = app.add_subcommand("minword", "minimal word of a node");
    add_word_options(minw);
    auto* maxw = app.add_subcommand("maxword", "maximal word of a node");
    add_word_options(maxw);
    auto* spanw = app.add_subcommand("spanword", "span-word of a node");
    add_word_options(spanw);

    auto* transduce = app.add_subcommand(
        "transduce", "transducer image of a minimal word vs the successor's");
    add_base_options(transduce, opt);
    transduce->add_option("-n,--n-max", opt.n, "node");
    transduce->add_option("-k,--depth", opt.depth, "prefix length");
    transduce->add_flag("--inject-mismatch", opt.inject_mismatch,
                        "corrupt the image first (negative control)");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    add_base_options(verify, opt);
    verify
        ->add_option("suite", opt.suite,
                     "one of: mpq-correct mpq-cc that-complete dpq-to-spq "
                     "seqic dpq-caract-equiv shift cantor val-equal density")
        ->required();
    auto* verify_n = verify->add_option("-n,--n-max", opt.n, "range bound");
    verify->add_option("-k,--depth", opt.depth, "prefix length");
    verify->add_option("--budget", opt.budget, "search budget");
    verify->add_option("--samples", opt.samples, "random sample count");
    verify->add_option("--format", opt.format, "json (default) or csv");

    auto* exporter = app.add_subcommand("export", "write DOT or SVG");
    add_base_options(exporter, opt);
    exporter
        ->add_option("object", opt.object,
                     "one of: tree that transducer fractal")
        ->required();
    exporter->add_option("--max-state", opt.max_state,
                         "largest state to include; -1 for none");
    auto* export_depth =
        exporter->add_option("-k,--depth", opt.depth,
                             "only states within this distance of state 0");
    exporter->add_option("--format", opt.format, "dot or svg");
    exporter->add_flag("--no-zero-loop", opt.no_zero_loop,
                       "omit the 0-loop on state 0 (tree view)");

    for (auto* cmd : {repr, eval, minw, maxw, spanw, transduce, verify, exporter})
        cmd->add_option("-o", opt.output, "write to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (repr->parsed()) return cmd_repr(opt);
        if (eval->parsed()) return cmd_eval(opt);
        if (minw->parsed()) return cmd_extremal_word(opt, false);
        if (maxw->parsed()) return cmd_extremal_word(opt, true);
        if (spanw->parsed()) return cmd_spanword(opt);
        if (transduce->parsed()) return cmd_transduce(opt);
        if (verify->parsed()) return cmd_verify(opt, verify_n->count() > 0);
        if (exporter->parsed())
            return cmd_export(opt, export_depth->count() > 0);
    } catch (const Error& e) {
        std::cerr << e.kind_name() << ": " << e.what() << "\n";
        switch (e.kind()) {
            case ErrorKind::Io:
                return kExitIo;
            case ErrorKind::InternalInconsistency:
                return kExitViolation;
            default:
                return kExitUsage;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitViolation;
    }
    return kExitUsage;
}
