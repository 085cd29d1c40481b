// affperm: command-line front end for affine permutations, their core tuples
// and the Bruhat order.
//
// Exit codes: 0 success / comparable, 1 check failure or I/O error,
// 2 usage or validation error, 3 incomparable, 4 guard exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <affperm/affperm.hpp>
#include <affperm/json.hpp>

namespace {

using namespace affperm;
using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;
constexpr int exit_incomparable = 3;
constexpr int exit_guard = 4;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string hook_cells(const RimHook& hook) {
    std::string s;
    for (const Node& n : hook.nodes) {
        if (!s.empty()) s += ' ';
        s += "(" + std::to_string(n.row) + "," + std::to_string(n.col) + ")";
    }
    return s;
}

std::string format_step(const std::string& tag, const RimHookStep& s) {
    return tag + ": charge " + std::to_string(s.target_charge - 1) + " -> " + std::to_string(s.target_charge) +
           ", hand residue " + std::to_string(s.addition.hand_residue) + ", hook " + hook_cells(s.addition.hook) +
           ", mu = " + to_string(s.addition.after) + ", strip first column -> " + to_string(s.result);
}

json step_json(const RimHookStep& s) {
    json cells = json::array();
    for (const Node& n : s.addition.hook.nodes) cells.push_back(node_json(n));
    return {{"target_charge", s.target_charge},
            {"hand_residue", s.addition.hand_residue},
            {"hook", cells},
            {"hand", node_json(s.addition.hook.hand)},
            {"foot", node_json(s.addition.hook.foot)},
            {"before", s.addition.before},
            {"mu", s.addition.after},
            {"after", s.result}};
}

Abacus parse_abacus(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
        return j.get<Abacus>();
    } catch (const json::exception& err) {
        throw ParseError(0, std::string("abacus must be {\"floor\": int, \"high_beads\": [int,...]}: ") + err.what());
    }
}

// ---- convert ----------------------------------------------------------------

struct ConvertArgs {
    int e = 0;
    std::string from, to, input;
    Int charge = 0;
    bool as_json = false;
};

int run_convert(const ConvertArgs& a) {
    std::optional<AffinePermutation> w;
    std::optional<Abacus> abacus;
    if (a.from == "word") w = word_to_permutation(a.e, parse_word(a.input, a.e));
    else if (a.from == "window") w = parse_window(a.input, a.e);
    else if (a.from == "abacus") abacus = parse_abacus(a.input);
    else abacus = from_partition(parse_partition(a.input, a.charge));

    // A core determines its Grassmannian element; a permutation determines its core at --charge.
    if (abacus) {
        check_modulus(a.e);
        if (a.to != "abacus" && a.to != "partition") {
            if (!is_e_core(*abacus, a.e))
                throw DomainError("input is not a core for e = " + std::to_string(a.e) + ", so it has no window");
            w = grassmannian_from_core(*abacus, a.e);
        }
    } else if (a.to == "abacus" || a.to == "partition" || a.to == "all") {
        check_charge(a.e, a.charge);
        abacus = core_abacus_from_window(*w, a.charge);
    }

    const bool all = a.to == "all";
    json out;
    if (all || a.to == "window") {
        if (a.as_json) out["window"] = w->window();
        else std::cout << (all ? "window: " : "") << to_string(*w) << "\n";
    }
    if (all || a.to == "word") {
        const auto word = reduced_word(*w);
        if (a.as_json) out["word"] = word.letters;
        else std::cout << (all ? "word: " : "") << to_string(word) << "\n";
    }
    if (all || a.to == "abacus") {
        if (a.as_json) out["abacus"] = *abacus;
        else std::cout << (all ? "abacus: " : "") << json(*abacus).dump() << "\n" << render_abacus(*abacus);
    }
    if (all || a.to == "partition") {
        const auto p = to_partition(*abacus);
        if (a.as_json) out["partition"] = p;
        else std::cout << (all ? "partition: " : "") << to_string(p) << " charge " << p.charge() << "\n";
    }
    if (all || a.to == "cores") {
        const auto t = core_tuple(*w);
        if (a.as_json) out["cores"] = t;
        else std::cout << (all ? "cores: " : "") << to_string(t) << "\n";
    }
    if (a.as_json) std::cout << (all ? out : out.begin().value()).dump() << "\n";
    return exit_ok;
}

// ---- cores ------------------------------------------------------------------

struct CoresArgs {
    int e = 0;
    std::string window;
    std::optional<Int> charge;
    bool explain = false;
    bool as_json = false;
};

int run_cores(const CoresArgs& a) {
    const auto w = parse_window(a.window, a.e);
    if (a.charge) check_charge(a.e, *a.charge);
    if (a.as_json) {
        json out = a.charge ? json(core_from_window(w, *a.charge)) : json(core_tuple(w));
        if (a.explain) {
            const auto trace = explain_rimhook(w);
            json steps = json::array();
            for (const auto& s : trace.steps) steps.push_back(step_json(s));
            out["steps"] = steps;
            out["wrap"] = step_json(trace.wrap);
        }
        std::cout << out.dump() << "\n";
        return exit_ok;
    }
    if (a.charge) std::cout << to_string(core_from_window(w, *a.charge)) << "\n";
    else std::cout << to_string(core_tuple(w)) << "\n";
    if (a.explain) {
        const auto trace = explain_rimhook(w);
        std::cout << "lambda^(0) = " << to_string(trace.start) << "\n";
        for (std::size_t k = 0; k < trace.steps.size(); ++k)
            std::cout << format_step("step " + std::to_string(k + 1), trace.steps[k]) << "\n";
        std::cout << format_step("wrap", trace.wrap) << "\n";
    }
    return exit_ok;
}

// ---- compare ----------------------------------------------------------------

struct CompareArgs {
    int e = 0;
    std::string first, second;
    bool oracle = false;
    std::optional<Int> charge;
    Int max_length = 14;
    bool as_json = false;
};

int run_compare(const CompareArgs& a) {
    const auto w = parse_window(a.first, a.e);
    const auto v = parse_window(a.second, a.e);
    ComparisonResult result;
    if (a.oracle) {
        OracleOptions opts{a.max_length};
        const bool le = subword_oracle(w, v, opts);
        const bool ge = subword_oracle(v, w, opts);
        result.relation = le && ge ? Relation::equal : le ? Relation::less : ge ? Relation::greater : Relation::incomparable;
    } else if (a.charge) {
        result = grassmannian_compare(w, v, *a.charge);
    } else {
        result = bruhat_compare(w, v);
    }
    if (a.as_json) {
        json wit = json::array();
        for (const auto& c : result.witness)
            wit.push_back({{"charge", c.charge}, {"first_in_second", c.first_in_second}, {"second_in_first", c.second_in_first}});
        std::cout << json{{"relation", to_string(result.relation)}, {"witness", wit}}.dump() << "\n";
    } else {
        std::cout << to_string(result.relation) << "\n";
        for (const auto& c : result.witness)
            std::cout << "charge " << c.charge << ": first in second " << (c.first_in_second ? "yes" : "no")
                      << ", second in first " << (c.second_in_first ? "yes" : "no") << "\n";
    }
    return result.relation == Relation::incomparable ? exit_incomparable : exit_ok;
}

// ---- project ----------------------------------------------------------------

int run_project(int e, const std::string& window, Int charge, bool as_json) {
    const auto w = parse_window(window, e);
    const auto p = grassmannian_project(w, charge);
    if (as_json) std::cout << window_json(p).dump() << "\n";
    else std::cout << to_string(p) << "\n";
    return exit_ok;
}

// ---- ball / check -----------------------------------------------------------

struct BallArgs {
    int e = 0;
    Int radius = 0;
    std::optional<std::string> dot;
    bool labels = false;
    bool check = false;
    bool as_json = false;
    std::size_t max_elements = 200000;
    Int max_length = 14;
};

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open " + path + " for writing");
    f << text;
    if (!f) throw IoError("failed writing " + path);
}

int run_ball(const BallArgs& a) {
    const auto ball = build_ball(a.e, a.radius, {a.max_elements});
    if (a.dot) write_text(*a.dot, hasse_dot(ball, a.labels));
    if (!a.check) {
        if (!a.dot || *a.dot != "-")
            std::cout << ball.size() << " elements, " << ball.covers.size() << " covers\n";
        return exit_ok;
    }
    const auto report = check_lattice_isomorphism(ball, {a.max_length});
    if (a.as_json) {
        std::cout << report_json(report).dump() << "\n";
    } else {
        std::cout << ball.size() << " elements, " << report.pairs_checked << " pairs checked, "
                  << (report.injective ? "injective" : "NOT injective") << "\n";
        for (const auto& d : report.discrepancies)
            std::cout << "discrepancy: " << to_string(d.first) << " <= " << to_string(d.second) << " fast="
                      << d.fast << " oracle=" << d.oracle << "\n";
        std::cout << report.discrepancies.size() << " discrepancies\n";
    }
    return report.ok() ? exit_ok : exit_failure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Affine permutations, core tuples and the strong Bruhat order"};
    app.require_subcommand(1);

    ConvertArgs conv;
    auto* convert = app.add_subcommand("convert", "Convert between words, windows, abaci and partitions");
    convert->add_option("--e", conv.e, "Rank e of the affine symmetric group")->required();
    convert->add_option("--from", conv.from, "Input format")
        ->required()
        ->check(CLI::IsMember({"word", "window", "abacus", "partition"}));
    convert->add_option("--to", conv.to, "Output format")
        ->required()
        ->check(CLI::IsMember({"word", "window", "abacus", "partition", "cores", "all"}));
    convert->add_option("--charge", conv.charge, "Charge of a partition input, or of the core to output");
    convert->add_flag("--json", conv.as_json, "Emit JSON");
    convert->add_option("input", conv.input, "Value to convert")->required();

    CoresArgs cores;
    auto* cores_cmd = app.add_subcommand("cores", "Core tuple of a window");
    cores_cmd->add_option("--e", cores.e, "Rank e")->required();
    cores_cmd->add_option("--charge", cores.charge, "Print only the core of this charge");
    cores_cmd->add_flag("--explain", cores.explain, "Replay the rim-hook construction step by step");
    cores_cmd->add_flag("--json", cores.as_json, "Emit JSON");
    cores_cmd->add_option("window", cores.window, "Window, e.g. [0,3,1,6]")->required();

    CompareArgs cmp;
    auto* compare = app.add_subcommand("compare", "Compare two windows in the strong Bruhat order");
    compare->add_option("--e", cmp.e, "Rank e")->required();
    compare->add_flag("--oracle", cmp.oracle, "Use the reduced-word subword oracle instead of core tuples");
    compare->add_option("--charge", cmp.charge, "Compare Grassmannian elements through the core of this charge");
    compare->add_option("--max-length", cmp.max_length, "Oracle length guard");
    compare->add_flag("--json", cmp.as_json, "Emit JSON");
    compare->add_option("first", cmp.first, "First window")->required();
    compare->add_option("second", cmp.second, "Second window")->required();

    int proj_e = 0;
    Int proj_charge = 0;
    std::string proj_window;
    bool proj_json = false;
    auto* project = app.add_subcommand("project", "Minimal coset representative (affine Grassmannian projection)");
    project->add_option("--e", proj_e, "Rank e")->required();
    project->add_option("--charge", proj_charge, "Charge c of the projection");
    project->add_flag("--json", proj_json, "Emit JSON");
    project->add_option("window", proj_window, "Window")->required();

    BallArgs ball;
    std::string dot_path;
    auto* ball_cmd = app.add_subcommand("ball", "Enumerate the ball of given length radius");
    ball_cmd->add_option("--e", ball.e, "Rank e")->required();
    ball_cmd->add_option("--radius", ball.radius, "Maximal length")->required();
    auto* dot_opt = ball_cmd->add_option("--dot", dot_path, "Write the Hasse diagram as DOT (to stdout if no file)")
                        ->expected(0, 1);
    ball_cmd->add_flag("--labels", ball.labels, "Label DOT nodes with core tuples too");
    ball_cmd->add_flag("--check", ball.check, "Check core inclusion against the subword oracle");
    ball_cmd->add_flag("--json", ball.as_json, "Emit the check report as JSON");
    ball_cmd->add_option("--max-elements", ball.max_elements, "Ball size guard");
    ball_cmd->add_option("--max-length", ball.max_length, "Oracle length guard");

    BallArgs chk;
    auto* check_cmd = app.add_subcommand("check", "Check the order isomorphism on a ball and print a report");
    check_cmd->add_option("--e", chk.e, "Rank e")->required();
    check_cmd->add_option("--radius", chk.radius, "Maximal length")->required();
    check_cmd->add_flag("--json", chk.as_json, "Emit JSON");
    check_cmd->add_option("--max-elements", chk.max_elements, "Ball size guard");
    check_cmd->add_option("--max-length", chk.max_length, "Oracle length guard");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& err) {
        return app.exit(err);
    } catch (const CLI::CallForAllHelp& err) {
        return app.exit(err);
    } catch (const CLI::ParseError& err) {
        app.exit(err);
        return exit_usage;
    }

    try {
        if (*convert) return run_convert(conv);
        if (*cores_cmd) return run_cores(cores);
        if (*compare) return run_compare(cmp);
        if (*project) return run_project(proj_e, proj_window, proj_charge, proj_json);
        if (*ball_cmd) {
            if (dot_opt->count() > 0) ball.dot = dot_path.empty() ? "-" : dot_path;
            return run_ball(ball);
        }
        if (*check_cmd) {
            chk.check = true;
            return run_ball(chk);
        }
    } catch (const GuardExceeded& err) {
        std::cerr << "error: " << err.what() << "\n";
        return exit_guard;
    } catch (const IoError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return exit_failure;
    } catch (const affperm::Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
