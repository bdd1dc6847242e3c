#include "dpath/io.hpp"

#include <fstream>
#include <sstream>

namespace dpath {

namespace {

// Line reader that skips blanks and '#' comments and remembers the current
// line number for error reporting.
struct Reader {
    std::istream& in;
    int line_no = 0;

    std::optional<std::vector<std::string>> next() {
        std::string line;
        while (std::getline(in, line)) {
            ++line_no;
            auto hash = line.find('#');
            if (hash != std::string::npos) line.resize(hash);
            std::istringstream ss(line);
            std::vector<std::string> tokens;
            std::string tok;
            while (ss >> tok) tokens.push_back(tok);
            if (!tokens.empty()) return tokens;
        }
        return std::nullopt;
    }

    std::vector<std::string> require(const std::string& what) {
        auto tokens = next();
        if (!tokens) throw ParseError(line_no, "unexpected end of input, expected " + what);
        return *tokens;
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_no, msg); }

    int to_int(const std::string& tok) const {
        size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(tok, &used);
        } catch (const std::exception&) {
            fail("expected an integer, got '" + tok + "'");
        }
        if (used != tok.size()) fail("expected an integer, got '" + tok + "'");
        return value;
    }

    // Reads a line of the shape: <keyword> <int> <int> ...
    std::vector<int> keyword_line(const std::string& keyword, int min_args) {
        auto tokens = require("'" + keyword + "' line");
        if (tokens[0] != keyword) fail("expected '" + keyword + "', got '" + tokens[0] + "'");
        if (static_cast<int>(tokens.size()) - 1 < min_args)
            fail("'" + keyword + "' needs at least " + std::to_string(min_args) + " values");
        std::vector<int> values;
        for (size_t i = 1; i < tokens.size(); ++i) values.push_back(to_int(tokens[i]));
        return values;
    }

    std::vector<int> int_line(int expected, const std::string& what) {
        auto tokens = require(what);
        if (expected >= 0 && static_cast<int>(tokens.size()) != expected)
            fail(what + " needs exactly " + std::to_string(expected) + " values");
        std::vector<int> values;
        for (const auto& tok : tokens) values.push_back(to_int(tok));
        return values;
    }
};

PathTopology read_topology(Reader& r) {
    auto values = r.keyword_line("paths", 1);
    int p = values[0];
    if (static_cast<int>(values.size()) - 1 != p)
        r.fail("'paths' announced " + std::to_string(p) + " lengths");
    return PathTopology(std::vector<int>(values.begin() + 1, values.end()));
}

std::vector<int> read_precoloring(Reader& r, int n) {
    auto head = r.keyword_line("precolor", 1);
    std::vector<int> precoloring(n, 0);
    for (int i = 0; i < head[0]; ++i) {
        auto entry = r.int_line(2, "precolor entry");
        if (entry[0] < 1 || entry[0] > n) r.fail("precolored position out of range");
        precoloring[entry[0] - 1] = entry[1];
    }
    return precoloring;
}

std::vector<int> read_demands(Reader& r, int c) {
    auto head = r.require("'demands' line");
    if (head[0] != "demands") r.fail("expected 'demands', got '" + head[0] + "'");
    std::vector<int> demands(c, 0);
    for (int i = 0; i < c; ++i) {
        auto entry = r.int_line(2, "demand entry");
        if (entry[0] < 1 || entry[0] > c) r.fail("demanded color out of range");
        demands[entry[0] - 1] = entry[1];
    }
    return demands;
}

Instance parse_dped(Reader& r) {
    DPEDInstance inst;
    inst.topology = read_topology(r);
    inst.num_colors = r.keyword_line("colors", 1)[0];
    inst.d = r.keyword_line("d", 1)[0];
    inst.precoloring = read_precoloring(r, inst.topology.n);
    inst.demands = read_demands(r, inst.num_colors);
    validate(inst);
    return inst;
}

Instance parse_dpe(Reader& r) {
    DpeInstance inst;
    inst.topology = read_topology(r);
    inst.num_colors = r.keyword_line("colors", 1)[0];
    inst.d = r.keyword_line("d", 1)[0];
    inst.precoloring = read_precoloring(r, inst.topology.n);
    validate(inst);
    return inst;
}

Instance parse_lcd(Reader& r) {
    LCDInstance inst;
    inst.topology = read_topology(r);
    inst.num_colors = r.keyword_line("colors", 1)[0];
    inst.d = r.keyword_line("d", 1)[0];
    auto head = r.require("'lists' line");
    if (head[0] != "lists") r.fail("expected 'lists', got '" + head[0] + "'");
    for (int v = 0; v < inst.topology.n; ++v) {
        auto entry = r.int_line(-1, "list entry");
        if (entry.empty() || static_cast<int>(entry.size()) - 1 != entry[0])
            r.fail("list entry must start with its length");
        std::vector<int> list(entry.begin() + 1, entry.end());
        std::sort(list.begin(), list.end());
        inst.lists.push_back(std::move(list));
    }
    auto tail = r.require("'demands' or 'nodemands' line");
    if (tail[0] == "nodemands") {
        // leave demands empty
    } else if (tail[0] == "demands") {
        inst.demands.assign(inst.num_colors, 0);
        for (int i = 0; i < inst.num_colors; ++i) {
            auto entry = r.int_line(2, "demand entry");
            if (entry[0] < 1 || entry[0] > inst.num_colors) r.fail("demanded color out of range");
            inst.demands[entry[0] - 1] = entry[1];
        }
    } else {
        r.fail("expected 'demands' or 'nodemands', got '" + tail[0] + "'");
    }
    validate(inst);
    return inst;
}

Instance parse_mss(Reader& r) {
    MssInstance inst;
    inst.k = r.keyword_line("k", 1)[0];
    auto head = r.keyword_line("items", 1);
    for (int i = 0; i < head[0]; ++i) inst.items.push_back(r.int_line(inst.k, "item vector"));
    auto target_head = r.require("'target' line");
    if (target_head[0] != "target") r.fail("expected 'target', got '" + target_head[0] + "'");
    inst.target = r.int_line(inst.k, "target vector");
    validate(inst);
    return inst;
}

Instance parse_pce(Reader& r) {
    UnitIntervalPce inst;
    inst.num_colors = r.keyword_line("colors", 1)[0];
    auto head = r.keyword_line("intervals", 1);
    for (int i = 0; i < head[0]; ++i) {
        auto entry = r.int_line(2, "interval entry");
        inst.left.push_back(entry[0]);
        inst.precoloring.push_back(entry[1]);
    }
    validate(inst);
    return inst;
}

Instance parse_nfaq(Reader& r) {
    NfaQuery inst;
    inst.nfa.alphabet_size = r.keyword_line("alphabet", 1)[0];
    inst.nfa.num_states = r.keyword_line("states", 1)[0];
    inst.nfa.initial = r.keyword_line("initial", 1)[0];
    if (inst.nfa.alphabet_size < 1) r.fail("alphabet must be nonempty");
    if (inst.nfa.num_states < 1) r.fail("automaton must have a state");
    if (inst.nfa.initial < 0 || inst.nfa.initial >= inst.nfa.num_states)
        r.fail("initial state out of range");
    auto accepting = r.keyword_line("accepting", 0);
    inst.nfa.accepting.assign(inst.nfa.num_states, 0);
    for (int q : accepting) {
        if (q < 0 || q >= inst.nfa.num_states) r.fail("accepting state out of range");
        inst.nfa.accepting[q] = 1;
    }
    auto head = r.keyword_line("transitions", 1);
    for (int i = 0; i < head[0]; ++i) {
        auto entry = r.int_line(3, "transition");
        if (entry[0] < 0 || entry[0] >= inst.nfa.num_states || entry[2] < 0 ||
            entry[2] >= inst.nfa.num_states)
            r.fail("transition state out of range");
        if (entry[1] < 1 || entry[1] > inst.nfa.alphabet_size)
            r.fail("transition letter out of range");
        inst.nfa.transitions.push_back({entry[0], entry[1], entry[2]});
    }
    auto target_head = r.require("'target' line");
    if (target_head[0] != "target") r.fail("expected 'target', got '" + target_head[0] + "'");
    inst.query.target = r.int_line(inst.nfa.alphabet_size, "target vector");
    for (int t : inst.query.target)
        if (t < 0) r.fail("target counts must be nonnegative");
    auto chead = r.keyword_line("constraints", 1);
    for (int i = 0; i < chead[0]; ++i) {
        auto entry = r.int_line(2, "constraint");
        inst.query.constraints.emplace_back(entry[0], entry[1]);
    }
    return inst;
}

}  // namespace

Instance parse_instance(std::istream& in) {
    Reader r{in};
    auto head = r.require("instance kind");
    const std::string& kind = head[0];
    if (kind == "DPED") return parse_dped(r);
    if (kind == "DPE") return parse_dpe(r);
    if (kind == "LCD") return parse_lcd(r);
    if (kind == "MSS") return parse_mss(r);
    if (kind == "PCE") return parse_pce(r);
    if (kind == "NFAQ") return parse_nfaq(r);
    r.fail("unknown instance kind '" + kind + "'");
}

Instance parse_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    return parse_instance(in);
}

std::string kind_of(const Instance& inst) {
    switch (inst.index()) {
        case 0: return "DPED";
        case 1: return "DPE";
        case 2: return "LCD";
        case 3: return "MSS";
        case 4: return "PCE";
        default: return "NFAQ";
    }
}

namespace {

void write_topology(std::ostream& out, const PathTopology& topology) {
    out << "paths " << topology.num_paths();
    for (int len : topology.lengths) out << ' ' << len;
    out << '\n';
}

void write_precoloring(std::ostream& out, const std::vector<int>& precoloring) {
    int m = 0;
    for (int x : precoloring)
        if (x != 0) ++m;
    out << "precolor " << m << '\n';
    for (size_t v = 0; v < precoloring.size(); ++v)
        if (precoloring[v] != 0) out << v + 1 << ' ' << precoloring[v] << '\n';
}

void write_demands(std::ostream& out, const std::vector<int>& demands) {
    out << "demands\n";
    for (size_t a = 0; a < demands.size(); ++a) out << a + 1 << ' ' << demands[a] << '\n';
}

struct Writer {
    std::ostream& out;

    void operator()(const DPEDInstance& inst) const {
        out << "DPED\n";
        write_topology(out, inst.topology);
        out << "colors " << inst.num_colors << "\nd " << inst.d << '\n';
        write_precoloring(out, inst.precoloring);
        write_demands(out, inst.demands);
    }

    void operator()(const DpeInstance& inst) const {
        out << "DPE\n";
        write_topology(out, inst.topology);
        out << "colors " << inst.num_colors << "\nd " << inst.d << '\n';
        write_precoloring(out, inst.precoloring);
    }

    void operator()(const LCDInstance& inst) const {
        out << "LCD\n";
        write_topology(out, inst.topology);
        out << "colors " << inst.num_colors << "\nd " << inst.d << '\n';
        out << "lists\n";
        for (const auto& list : inst.lists) {
            out << list.size();
            for (int a : list) out << ' ' << a;
            out << '\n';
        }
        if (inst.has_demands())
            write_demands(out, inst.demands);
        else
            out << "nodemands\n";
    }

    void operator()(const MssInstance& inst) const {
        out << "MSS\nk " << inst.k << "\nitems " << inst.items.size() << '\n';
        for (const auto& item : inst.items) {
            for (int j = 0; j < inst.k; ++j) out << (j ? " " : "") << item[j];
            out << '\n';
        }
        out << "target\n";
        for (int j = 0; j < inst.k; ++j) out << (j ? " " : "") << inst.target[j];
        out << '\n';
    }

    void operator()(const UnitIntervalPce& inst) const {
        out << "PCE\ncolors " << inst.num_colors << "\nintervals " << inst.n() << '\n';
        for (int v = 0; v < inst.n(); ++v)
            out << inst.left[v] << ' ' << inst.precoloring[v] << '\n';
    }

    void operator()(const NfaQuery& inst) const {
        out << "NFAQ\nalphabet " << inst.nfa.alphabet_size << "\nstates " << inst.nfa.num_states
            << "\ninitial " << inst.nfa.initial << '\n';
        out << "accepting";
        for (int q = 0; q < inst.nfa.num_states; ++q)
            if (inst.nfa.accepting[q]) out << ' ' << q;
        out << '\n';
        out << "transitions " << inst.nfa.transitions.size() << '\n';
        for (const auto& t : inst.nfa.transitions)
            out << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
        out << "target\n";
        for (size_t i = 0; i < inst.query.target.size(); ++i)
            out << (i ? " " : "") << inst.query.target[i];
        out << '\n';
        out << "constraints " << inst.query.constraints.size() << '\n';
        for (const auto& [pos, letter] : inst.query.constraints)
            out << pos << ' ' << letter << '\n';
    }
};

}  // namespace

void serialize_instance(const Instance& inst, std::ostream& out) {
    std::visit(Writer{out}, inst);
}

std::string serialize_instance(const Instance& inst) {
    std::ostringstream out;
    serialize_instance(inst, out);
    return out.str();
}

}  // namespace dpath
