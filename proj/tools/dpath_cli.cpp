#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "dpath/approx.hpp"
#include "dpath/greedy.hpp"
#include "dpath/io.hpp"
#include "dpath/oracle.hpp"
#include "dpath/reductions.hpp"
#include "dpath/window_dp.hpp"

namespace {

constexpr int kFeasible = 0;
constexpr int kInfeasible = 1;
constexpr int kError = 2;

// Output sink: a file when --out is given, stdout otherwise.
struct Sink {
    std::ofstream file;
    std::ostream& stream;

    explicit Sink(const std::string& path)
        : file(path.empty() ? std::ofstream() : std::ofstream(path)),
          stream(path.empty() ? std::cout : file) {
        if (!path.empty() && !file) throw dpath::Error("cannot write '" + path + "'");
    }
};

void print_pairs(std::ostream& out, const std::vector<int>& values) {
    for (size_t i = 0; i < values.size(); ++i) out << i + 1 << ' ' << values[i] << '\n';
}

int report(std::ostream& out, const std::optional<dpath::Coloring>& solution) {
    if (!solution) {
        out << "infeasible\n";
        return kInfeasible;
    }
    print_pairs(out, solution->colors);
    return kFeasible;
}

int run_solve(const std::string& file, const std::string& algo, int budget, Sink& sink) {
    std::ostream& out = sink.stream;
    dpath::Instance inst = dpath::parse_instance_file(file);
    dpath::OracleOptions opts;
    opts.max_free = budget;
    opts.max_word_length = budget;
    if (auto* dped = std::get_if<dpath::DPEDInstance>(&inst)) {
        if (algo == "oracle") return report(out, dpath::oracle_dped(*dped, opts));
        if (algo == "greedy") return report(out, dpath::solve_greedy(*dped));
        if (algo == "dp") return report(out, dpath::solve_dped_dp(*dped));
        if (algo == "fpt") return report(out, dpath::solve_dped_fpt(*dped));
        if (algo == "approx") {
            auto result = dpath::solve_approx(*dped);
            print_pairs(out, result.coloring.colors);
            out << "error " << result.report.achieved_error << " bound " << result.report.bound
                << '\n';
            return kFeasible;
        }
        throw dpath::SemanticError("algorithm '" + algo + "' does not apply to this instance");
    }
    if (auto* dpe = std::get_if<dpath::DpeInstance>(&inst)) {
        auto red = dpath::reduce_dpe_to_dped(*dpe);
        std::optional<dpath::Coloring> solution;
        if (algo == "oracle")
            solution = dpath::oracle_dped(red.instance, opts);
        else if (algo == "dp")
            solution = dpath::solve_dped_dp(red.instance);
        else if (algo == "fpt")
            solution = dpath::solve_dped_fpt(red.instance);
        else
            throw dpath::SemanticError("algorithm '" + algo + "' does not apply to this instance");
        if (!solution) return report(out, std::nullopt);
        return report(out, dpath::lift_dped_to_dpe(red, *solution));
    }
    if (auto* lcd = std::get_if<dpath::LCDInstance>(&inst)) {
        if (algo == "oracle") return report(out, dpath::oracle_lcd(*lcd, opts));
        if (algo == "dlc") return report(out, dpath::solve_dlc_dp(*lcd));
        throw dpath::SemanticError("algorithm '" + algo + "' does not apply to this instance");
    }
    if (auto* mss = std::get_if<dpath::MssInstance>(&inst)) {
        if (algo != "oracle")
            throw dpath::SemanticError("algorithm '" + algo + "' does not apply to this instance");
        return report(out, dpath::oracle_lcd(dpath::reduce_mss_to_lcd(*mss), opts));
    }
    if (auto* pce = std::get_if<dpath::UnitIntervalPce>(&inst)) {
        if (algo != "oracle")
            throw dpath::SemanticError("algorithm '" + algo + "' does not apply to this instance");
        auto dpe_red = dpath::reduce_pce_to_dpe(*pce);
        auto dped_red = dpath::reduce_dpe_to_dped(dpe_red.instance);
        auto solution = dpath::oracle_dped(dped_red.instance, opts);
        if (!solution) return report(out, std::nullopt);
        auto lifted = dpath::lift_dped_to_dpe(dped_red, *solution);
        dpath::Coloring result;
        for (int pos : dpe_red.representative_positions)
            result.colors.push_back(lifted.colors[pos - 1]);
        return report(out, result);
    }
    const auto& nfaq = std::get<dpath::NfaQuery>(inst);
    std::optional<std::vector<int>> word;
    if (algo == "oracle") {
        word = dpath::oracle_cmpl(nfaq.nfa, nfaq.query.target, nfaq.query.constraints, opts);
    } else if (algo == "fpt") {
        auto cmpl = dpath::build_cmpl_automaton(nfaq.nfa, nfaq.query);
        auto encoded = dpath::decide_parikh_membership(cmpl.nfa, cmpl.target);
        if (encoded) {
            word.emplace();
            for (size_t i = 0; i < encoded->size(); i += 2) word->push_back((*encoded)[i]);
        }
    } else {
        throw dpath::SemanticError("algorithm '" + algo + "' does not apply to this instance");
    }
    if (!word) {
        out << "infeasible\n";
        return kInfeasible;
    }
    print_pairs(out, *word);
    return kFeasible;
}

// Coloring files hold one `vertex value` pair per line, as written by solve.
std::vector<int> read_solution(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw dpath::ParseError(0, "cannot open '" + file + "'");
    std::vector<std::pair<int, int>> pairs;
    int v, x;
    while (in >> v >> x) pairs.emplace_back(v, x);
    if (!in.eof()) throw dpath::ParseError(0, "coloring must be `vertex value` pairs");
    std::vector<int> values(pairs.size(), 0);
    for (const auto& [pos, value] : pairs) {
        if (pos < 1 || pos > static_cast<int>(pairs.size()) || values[pos - 1] != 0)
            throw dpath::ParseError(0, "coloring positions must be 1..n, each once");
        values[pos - 1] = value;
    }
    return values;
}

// First violated requirement of a solution, as a message.
std::optional<std::string> first_violation(const dpath::Instance& inst,
                                           const std::vector<int>& colors) {
    struct Check {
        const std::vector<int>& colors;

        std::optional<std::string> sized(int n) const {
            if (static_cast<int>(colors.size()) != n)
                return "solution has " + std::to_string(colors.size()) + " colors, expected " +
                       std::to_string(n);
            return std::nullopt;
        }

        std::optional<std::string> in_range(int c) const {
            for (size_t v = 0; v < colors.size(); ++v)
                if (colors[v] < 1 || colors[v] > c)
                    return "color at position " + std::to_string(v + 1) + " is out of range";
            return std::nullopt;
        }

        std::optional<std::string> distance(const dpath::PathTopology& topology, int d) const {
            for (int p = 0; p < topology.num_paths(); ++p) {
                int s = topology.starts[p], len = topology.lengths[p];
                for (int v = s; v < s + len; ++v)
                    for (int u = v + 1; u <= std::min(s + len - 1, v + d); ++u)
                        if (colors[u - 1] == colors[v - 1])
                            return "positions " + std::to_string(v) + " and " +
                                   std::to_string(u) + " share color " +
                                   std::to_string(colors[v - 1]);
            }
            return std::nullopt;
        }

        std::optional<std::string> extends(const std::vector<int>& precoloring) const {
            for (size_t v = 0; v < precoloring.size(); ++v)
                if (precoloring[v] != 0 && colors[v] != precoloring[v])
                    return "position " + std::to_string(v + 1) + " overrides the precoloring";
            return std::nullopt;
        }

        std::optional<std::string> demands(const std::vector<int>& demands,
                                           const std::vector<int>& precoloring) const {
            std::vector<int> fresh(demands.size(), 0);
            for (size_t v = 0; v < colors.size(); ++v)
                if (precoloring.empty() || precoloring[v] == 0) ++fresh[colors[v] - 1];
            for (size_t a = 0; a < demands.size(); ++a)
                if (fresh[a] != demands[a])
                    return "color " + std::to_string(a + 1) + " is used " +
                           std::to_string(fresh[a]) + " times, demanded " +
                           std::to_string(demands[a]);
            return std::nullopt;
        }
    };
    Check check{colors};

    if (const auto* dped = std::get_if<dpath::DPEDInstance>(&inst)) {
        if (auto m = check.sized(dped->topology.n)) return m;
        if (auto m = check.in_range(dped->num_colors)) return m;
        if (auto m = check.extends(dped->precoloring)) return m;
        if (auto m = check.distance(dped->topology, dped->d)) return m;
        return check.demands(dped->demands, dped->precoloring);
    }
    if (const auto* dpe = std::get_if<dpath::DpeInstance>(&inst)) {
        if (auto m = check.sized(dpe->topology.n)) return m;
        if (auto m = check.in_range(dpe->num_colors)) return m;
        if (auto m = check.extends(dpe->precoloring)) return m;
        return check.distance(dpe->topology, dpe->d);
    }
    if (const auto* lcd = std::get_if<dpath::LCDInstance>(&inst)) {
        if (auto m = check.sized(lcd->topology.n)) return m;
        if (auto m = check.in_range(lcd->num_colors)) return m;
        for (size_t v = 0; v < colors.size(); ++v)
            if (!std::binary_search(lcd->lists[v].begin(), lcd->lists[v].end(), colors[v]))
                return "color at position " + std::to_string(v + 1) + " is not in the list";
        if (auto m = check.distance(lcd->topology, lcd->d)) return m;
        if (lcd->has_demands()) return check.demands(lcd->demands, {});
        return std::nullopt;
    }
    if (const auto* nfaq = std::get_if<dpath::NfaQuery>(&inst)) {
        const auto& nfa = nfaq->nfa;
        std::vector<int> counts(nfa.alphabet_size, 0);
        for (size_t i = 0; i < colors.size(); ++i) {
            if (colors[i] < 1 || colors[i] > nfa.alphabet_size)
                return "letter at position " + std::to_string(i + 1) + " is out of range";
            ++counts[colors[i] - 1];
        }
        if (counts != nfaq->query.target) return "letter counts differ from the target";
        for (const auto& [pos, letter] : nfaq->query.constraints)
            if (pos < 1 || pos > static_cast<int>(colors.size()) || colors[pos - 1] != letter)
                return "constraint at position " + std::to_string(pos) + " is violated";
        std::vector<char> states(nfa.num_states, 0);
        states[nfa.initial] = 1;
        for (size_t i = 0; i < colors.size(); ++i) {
            std::vector<char> next(nfa.num_states, 0);
            for (const auto& t : nfa.transitions)
                if (states[t[0]] && t[1] == colors[i]) next[t[2]] = 1;
            states = std::move(next);
        }
        for (int q = 0; q < nfa.num_states; ++q)
            if (states[q] && nfa.accepting[q]) return std::nullopt;
        return std::string("the automaton rejects the word");
    }
    return std::string("this instance kind has no verifiable solutions");
}

int run_verify(const std::string& instance_file, const std::string& solution_file) {
    dpath::Instance inst = dpath::parse_instance_file(instance_file);
    std::vector<int> colors = read_solution(solution_file);
    if (auto violation = first_violation(inst, colors)) {
        std::cout << "invalid: " << *violation << '\n';
        return kInfeasible;
    }
    std::cout << "valid\n";
    return kFeasible;
}

int run_reduce(const std::string& file, const std::string& kind, Sink& sink) {
    dpath::Instance inst = dpath::parse_instance_file(file);
    dpath::Instance image;
    if (kind == "mss-lcd")
        image = dpath::reduce_mss_to_lcd(std::get<dpath::MssInstance>(inst));
    else if (kind == "lcd-dped")
        image = dpath::reduce_lcd_to_dped(std::get<dpath::LCDInstance>(inst)).instance;
    else if (kind == "dpe-dped")
        image = dpath::reduce_dpe_to_dped(std::get<dpath::DpeInstance>(inst)).instance;
    else if (kind == "pce-dpe")
        image = dpath::reduce_pce_to_dpe(std::get<dpath::UnitIntervalPce>(inst)).instance;
    else
        throw dpath::SemanticError("unknown reduction '" + kind + "'");
    dpath::serialize_instance(image, sink.stream);
    return kFeasible;
}

// Stable across platforms: mt19937 output reduced by modulus.
int bounded(std::mt19937& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
}

int run_gen(const std::string& kind, unsigned seed, int n, int colors, int d, int precolored,
            Sink& sink) {
    std::mt19937 rng(seed);
    auto random_coloring = [&](int len) {
        // Valid by construction: at each vertex at most d colors are blocked.
        std::vector<int> col(len, 0);
        for (int v = 1; v <= len; ++v) {
            std::vector<int> menu;
            for (int a = 1; a <= colors; ++a) {
                bool blocked = false;
                for (int u = std::max(1, v - d); u < v && !blocked; ++u)
                    blocked = col[u - 1] == a;
                if (!blocked) menu.push_back(a);
            }
            col[v - 1] = menu[bounded(rng, 0, static_cast<int>(menu.size()) - 1)];
        }
        return col;
    };

    if (kind == "dped") {
        if (colors < d + 1) throw dpath::SemanticError("generation needs at least d+1 colors");
        // Draw a valid coloring, expose a few positions, demand the rest.
        std::vector<int> col = random_coloring(n);
        dpath::DPEDInstance inst;
        inst.topology = dpath::PathTopology({n});
        inst.num_colors = colors;
        inst.d = d;
        inst.precoloring.assign(n, 0);
        for (int i = 0; i < precolored && i < n; ++i) {
            int v;
            do {
                v = bounded(rng, 1, n);
            } while (inst.precoloring[v - 1] != 0);
            inst.precoloring[v - 1] = col[v - 1];
        }
        inst.demands.assign(colors, 0);
        for (int v = 1; v <= n; ++v)
            if (inst.precoloring[v - 1] == 0) ++inst.demands[col[v - 1] - 1];
        dpath::serialize_instance(inst, sink.stream);
        return kFeasible;
    }
    if (kind == "lcd") {
        if (colors < d + 1) throw dpath::SemanticError("generation needs at least d+1 colors");
        std::vector<int> col = random_coloring(n);
        dpath::LCDInstance inst;
        inst.topology = dpath::PathTopology({n});
        inst.num_colors = colors;
        inst.d = d;
        for (int v = 1; v <= n; ++v) {
            std::vector<int> list{col[v - 1]};
            for (int a = 1; a <= colors; ++a)
                if (a != col[v - 1] && bounded(rng, 0, 2) == 0) list.push_back(a);
            std::sort(list.begin(), list.end());
            inst.lists.push_back(std::move(list));
        }
        inst.demands.assign(colors, 0);
        for (int a : col) ++inst.demands[a - 1];
        dpath::serialize_instance(inst, sink.stream);
        return kFeasible;
    }
    if (kind == "mss") {
        dpath::MssInstance inst;
        inst.k = std::max(1, d);  // the -d flag doubles as the dimension
        for (int i = 0; i < n; ++i) {
            std::vector<int> item(inst.k);
            for (int& x : item) x = bounded(rng, 0, std::max(1, colors));
            inst.items.push_back(std::move(item));
        }
        inst.target.assign(inst.k, 0);
        for (const auto& item : inst.items)
            if (bounded(rng, 0, 1) == 0)
                for (int j = 0; j < inst.k; ++j) inst.target[j] += item[j];
        dpath::serialize_instance(inst, sink.stream);
        return kFeasible;
    }
    throw dpath::SemanticError("unknown generator '" + kind + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"solvers for distance-constrained coloring problems on paths"};
    app.require_subcommand(1);

    std::string in_file, out_file, algo = "oracle", reduction, gen_kind, coloring_file;
    unsigned seed = 1;
    int budget = 200;
    int n = 12, colors = 4, d = 2, precolored = 2;

    auto* solve = app.add_subcommand("solve", "solve an instance file");
    solve->add_option("--in", in_file, "instance file")->required();
    solve->add_option("--out", out_file, "write the solution here instead of stdout");
    solve->add_option("--algo", algo,
                      "oracle | greedy | dp | dlc | approx | fpt (where applicable)");
    solve->add_option("--budget", budget, "oracle search budget (free vertices / word length)");

    auto* verify = app.add_subcommand("verify", "check a coloring against an instance");
    verify->add_option("--in", in_file, "instance file")->required();
    verify->add_option("--coloring", coloring_file, "`vertex value` pairs, one per line")
        ->required();

    auto* reduce = app.add_subcommand("reduce", "write the image of an instance");
    reduce->add_option("kind", reduction, "mss-lcd | lcd-dped | dpe-dped | pce-dpe")->required();
    reduce->add_option("--in", in_file, "instance file")->required();
    reduce->add_option("--out", out_file, "write the image here instead of stdout");

    auto* gen = app.add_subcommand("gen", "write a reproducible random instance");
    gen->add_option("kind", gen_kind, "dped | lcd | mss")->required();
    gen->add_option("--seed", seed, "random seed");
    gen->add_option("--n", n, "vertices (items for mss)");
    gen->add_option("--c", colors, "colors (max entry for mss)");
    gen->add_option("--d", d, "distance (dimension for mss)");
    gen->add_option("--p", precolored, "precolored vertices (dped)");
    gen->add_option("--out", out_file, "write the instance here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        Sink sink(out_file);
        if (solve->parsed()) return run_solve(in_file, algo, budget, sink);
        if (verify->parsed()) return run_verify(in_file, coloring_file);
        if (reduce->parsed()) return run_reduce(in_file, reduction, sink);
        return run_gen(gen_kind, seed, n, colors, d, precolored, sink);
    } catch (const std::bad_variant_access&) {
        std::cerr << "error: this operation does not apply to that instance kind\n";
        return kError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kError;
    }
}
