// Command-line front end: generate packings, verify sequences, print census
// tables, export graphs, and run the exhaustive toy-scale packing search.
//
// Exit codes are part of the contract:
//   0 success (verify: ucycle)   1 verify: packing      2 internal non-Eulerian
//   3 budget exhausted           4 verify: invalid     64 usage error
//  65 sequence parse error

#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ucyc/ucyc.hpp"

using nlohmann::json;

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitParse = 65;
constexpr int kExitBudget = 3;
constexpr int kExitNotEulerian = 2;
constexpr int kExitInvalid = 4;

struct RunConfig {
    int n = 0, k = 0;
    std::string filter = "awesome";
    std::string rep_strategy = "default";
    uint64_t seed = 0;
    std::string format; // default depends on the command
    std::string sequence_source;
    std::string which = "transition";
    unsigned long long budget = 0;
    std::string output;
    int start_symbol = 1;
};

std::ostream& open_output(const RunConfig& cfg, std::ofstream& file) {
    if (cfg.output.empty() || cfg.output == "-") return std::cout;
    file.open(cfg.output);
    if (!file) throw ucyc::Error("cannot open output file: " + cfg.output);
    return file;
}

std::string read_source(const std::string& src) {
    if (src == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(src);
    if (!in) throw ucyc::Error("cannot open sequence file: " + src);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// Accepts whitespace- or comma-separated integers, a JSON array, a JSON object
// with a "sequence" field, or (for n <= 9) a bare digit string, one symbol per
// character.
std::vector<int> parse_sequence(const std::string& text, int n) {
    size_t b = text.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) throw ucyc::Error("empty sequence input");
    if (text[b] == '{' || text[b] == '[') {
        json j = json::parse(text);
        if (j.is_object()) j = j.at("sequence");
        return j.get<std::vector<int>>();
    }
    std::vector<std::string> tokens;
    std::string cur;
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
            if (!cur.empty()) tokens.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) tokens.push_back(std::move(cur));
    if (tokens.empty()) throw ucyc::Error("empty sequence input");

    const auto all_digits = [](const std::string& s) {
        for (char ch : s)
            if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
        return !s.empty();
    };
    if (tokens.size() == 1 && tokens[0].size() > 1 && n <= 9 && all_digits(tokens[0])) {
        std::vector<int> seq;
        seq.reserve(tokens[0].size());
        for (char ch : tokens[0]) seq.push_back(ch - '0');
        return seq;
    }
    std::vector<int> seq;
    seq.reserve(tokens.size());
    for (const std::string& tk : tokens) {
        size_t pos = 0;
        int v = std::stoi(tk, &pos);
        if (pos != tk.size()) throw ucyc::Error("bad token in sequence: '" + tk + "'");
        seq.push_back(v);
    }
    return seq;
}

json shift_report_json(const ucyc::ShiftReport& r) {
    return json{{"sigma", r.sigma},
                {"gcd", r.gcd},
                {"L", r.L},
                {"gcd_one", r.gcd_one},
                {"searched", r.searched},
                {"exhausted", r.exhausted},
                {"budget_exhausted", r.budget_exhausted},
                {"combos_tried", r.combos_tried},
                {"target_covered", r.target_covered},
                {"obstruction", r.obstruction}};
}

json stats_json(const ucyc::PackingResult& pr, const RunConfig& cfg) {
    return json{{"n", pr.n},
                {"k", pr.k},
                {"m", pr.m},
                {"sigma", pr.sigma},
                {"L", pr.L},
                {"covered", pr.covered},
                {"omitted", pr.omitted},
                {"coverage_ratio",
                 static_cast<double>(pr.covered) / static_cast<double>(pr.covered + pr.omitted)},
                {"filter", cfg.filter},
                {"rep_strategy", cfg.rep_strategy},
                {"seed", cfg.seed},
                {"start_symbol", cfg.start_symbol},
                {"shift_report", shift_report_json(pr.report)}};
}

int cmd_generate(const RunConfig& cfg) {
    ucyc::GenerateOptions opts;
    opts.filter = ucyc::parse_filter(cfg.filter);
    opts.strategy = ucyc::parse_rep_strategy(cfg.rep_strategy);
    opts.seed = cfg.seed;
    opts.start_symbol = cfg.start_symbol;
    if (cfg.budget) opts.search_budget = cfg.budget;

    const ucyc::PackingResult pr = ucyc::generate_packing(cfg.n, cfg.k, opts);
    json stats = stats_json(pr, cfg);

    std::ofstream file;
    std::ostream& os = open_output(cfg, file);
    if (cfg.format == "json") {
        stats["sequence"] = pr.sequence;
        os << stats.dump() << "\n";
    } else {
        for (size_t i = 0; i < pr.sequence.size(); ++i) {
            if (i) os << ' ';
            os << pr.sequence[i];
        }
        os << "\n" << stats.dump() << "\n";
    }
    return 0;
}

json report_json(const ucyc::VerifyReport& rep) {
    json dups = json::array();
    for (const auto& d : rep.duplicate_subsets) dups.push_back({{"subset", d.subset}, {"positions", d.positions}});
    return json{{"n", rep.n},
                {"k", rep.k},
                {"length", rep.length},
                {"windows_total", rep.windows_total},
                {"invalid_windows", rep.invalid_windows},
                {"duplicate_subsets", dups},
                {"distinct_covered", rep.distinct_covered},
                {"total_subsets", rep.total_subsets},
                {"coverage_ratio", rep.coverage_ratio()},
                {"classification", ucyc::to_string(rep.classification)}};
}

int cmd_verify(const RunConfig& cfg) {
    std::vector<int> seq;
    try {
        seq = parse_sequence(read_source(cfg.sequence_source), cfg.n);
    } catch (const json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    }

    ucyc::VerifyReport rep;
    try {
        rep = ucyc::verify(seq, cfg.n, cfg.k);
    } catch (const ucyc::SymbolOutOfRangeError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    }

    std::ofstream file;
    std::ostream& os = open_output(cfg, file);
    if (cfg.format == "json") {
        os << report_json(rep).dump() << "\n";
    } else {
        os << "n=" << rep.n << " k=" << rep.k << " length=" << rep.length << "\n";
        os << "classification: " << ucyc::to_string(rep.classification) << "\n";
        os << "distinct covered: " << rep.distinct_covered << " / " << rep.total_subsets << "\n";
        if (!rep.invalid_windows.empty()) {
            os << "invalid windows at:";
            for (long long p : rep.invalid_windows) os << ' ' << p;
            os << "\n";
        }
        for (const auto& d : rep.duplicate_subsets) {
            os << "duplicate " << ucyc::to_string(d.subset) << " at positions";
            for (long long p : d.positions) os << ' ' << p;
            os << "\n";
        }
    }
    switch (rep.classification) {
        case ucyc::SeqClass::Ucycle: return 0;
        case ucyc::SeqClass::Packing: return 1;
        default: return kExitInvalid;
    }
}

int cmd_stats(const RunConfig& cfg) {
    const ucyc::Census cs = cfg.budget ? ucyc::census(cfg.n, cfg.k, cfg.budget) : ucyc::census(cfg.n, cfg.k);
    const ucyc::NonAwesomeCount na = ucyc::non_awesome_classes(cfg.n, cfg.k);

    std::ofstream file;
    std::ostream& os = open_output(cfg, file);
    if (cfg.format == "json") {
        json rows = json::array();
        for (const auto& r : cs.rows) {
            rows.push_back({{"pattern", r.pattern.parts},
                            {"good", r.good},
                            {"classes", r.class_count},
                            {"psi_prime_ordered", r.psi_prime_ordered},
                            {"asym_classes", r.asym_class_count},
                            {"asym_divisible", r.asym_divisible},
                            {"forms", r.form_count},
                            {"sets", r.set_count}});
        }
        json ratios = json::array();
        for (const auto& cr : cs.cross_ratios) {
            json j{{"bad_pattern", cr.bad_pattern.parts},
                   {"good_image", cr.good_image.parts},
                   {"bad_classes", cr.bad_classes},
                   {"good_classes", cr.good_classes}};
            if (cr.ratio) j["ratio"] = *cr.ratio;
            ratios.push_back(std::move(j));
        }
        json j{{"n", cs.n},
               {"k", cs.k},
               {"rows", rows},
               {"total_subsets", cs.total_subsets},
               {"total_sets", cs.total_sets},
               {"good_sets", cs.good_sets},
               {"bad_sets", cs.bad_sets},
               {"awesome_sets", cs.awesome_sets},
               {"good_classes", cs.good_classes},
               {"bad_classes", cs.bad_classes},
               {"awesome_classes", cs.awesome_classes},
               {"good_set_fraction", cs.good_set_fraction()},
               {"awesome_set_fraction", cs.awesome_set_fraction()},
               {"cross_ratios", ratios},
               {"non_awesome_exact", na.exact}};
        if (na.asym) j["non_awesome_asym"] = *na.asym;
        os << j.dump() << "\n";
        return 0;
    }

    os << "census n=" << cs.n << " k=" << cs.k << "  C(n,k)=" << cs.total_subsets << "\n";
    char line[160];
    std::snprintf(line, sizeof line, "%-14s %-4s %10s %10s %14s %5s %8s %10s\n", "pattern", "good", "classes",
                  "psi'", "asym", "g|n-k", "forms", "sets");
    os << line;
    for (const auto& r : cs.rows) {
        std::snprintf(line, sizeof line, "%-14s %-4s %10lld %10lld %14.2f %5s %8lld %10lld\n",
                      ucyc::to_string(r.pattern).c_str(), r.good ? "yes" : "no", r.class_count,
                      r.psi_prime_ordered, r.asym_class_count, r.asym_divisible ? "yes" : "no", r.form_count,
                      r.set_count);
        os << line;
    }
    os << "totals: sets=" << cs.total_sets << " good=" << cs.good_sets << " bad=" << cs.bad_sets
       << " awesome=" << cs.awesome_sets << "\n";
    os << "fractions: good=" << cs.good_set_fraction() << " awesome=" << cs.awesome_set_fraction() << "\n";
    for (const auto& cr : cs.cross_ratios) {
        os << "cross-ratio " << ucyc::to_string(cr.bad_pattern) << " / " << ucyc::to_string(cr.good_image) << " = "
           << cr.bad_classes << "/" << cr.good_classes;
        if (cr.ratio) os << " = " << *cr.ratio;
        os << "\n";
    }
    os << "non-awesome classes: exact=" << na.exact;
    if (na.asym)
        os << " asym=" << *na.asym;
    else
        os << " asym=n/a (requires n > 2k)";
    os << "\n";
    return 0;
}

int cmd_graph(const RunConfig& cfg) {
    const ucyc::Filter filter = ucyc::parse_filter(cfg.filter);
    std::ofstream file;
    std::ostream& os = open_output(cfg, file);
    if (cfg.which == "transition") {
        const ucyc::TransitionGraph t = ucyc::build_transition(cfg.n, cfg.k, filter);
        if (cfg.format == "json")
            os << ucyc::to_json(t).dump() << "\n";
        else
            os << ucyc::to_dot(t);
    } else if (cfg.which == "class") {
        const ucyc::ClassGraph h = ucyc::build_class_graph(cfg.n, cfg.k, filter);
        if (cfg.format == "json")
            os << ucyc::to_json(h).dump() << "\n";
        else
            os << ucyc::to_dot(h);
    } else {
        std::cerr << "unknown graph kind: " << cfg.which << "\n";
        return kExitUsage;
    }
    return 0;
}

int cmd_maxpack(const RunConfig& cfg) {
    const ucyc::MaxPackResult res = ucyc::exhaustive_max_packing(cfg.n, cfg.k, cfg.budget);
    std::ofstream file;
    std::ostream& os = open_output(cfg, file);
    if (cfg.format == "json") {
        os << json{{"n", cfg.n},
                   {"k", cfg.k},
                   {"best_length", res.best_length},
                   {"witness", res.witness},
                   {"nodes", res.nodes},
                   {"complete", res.complete}}
                  .dump()
           << "\n";
    } else {
        os << "best_length=" << res.best_length << (res.complete ? "" : " (budget exhausted)") << "\n";
        os << "witness:";
        for (int s : res.witness) os << ' ' << s;
        os << "\n";
    }
    return res.complete ? 0 : kExitBudget;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"near-universal cycle toolkit for k-subsets of [n]"};
    app.require_subcommand(1);

    RunConfig cfg;

    auto add_nk = [&cfg](CLI::App* sub) {
        sub->add_option("--n", cfg.n, "modulus n")->required();
        sub->add_option("--k", cfg.k, "subset size k")->required();
    };

    CLI::App* gen = app.add_subcommand("generate", "build a Ucycle packing");
    add_nk(gen);
    gen->add_option("--filter", cfg.filter, "class filter: awesome|good")->check(CLI::IsMember({"awesome", "good"}));
    gen->add_option("--rep-strategy", cfg.rep_strategy, "dropped-value choice: default|search")
        ->check(CLI::IsMember({"default", "search"}));
    gen->add_option("--seed", cfg.seed, "search order seed");
    gen->add_option("--format", cfg.format, "text|json")->check(CLI::IsMember({"text", "json"}));
    gen->add_option("--budget", cfg.budget, "rep-search evaluation budget");
    gen->add_option("--start-symbol", cfg.start_symbol, "first emitted symbol");
    gen->add_option("--output,-o", cfg.output, "output path (default stdout)");

    CLI::App* ver = app.add_subcommand("verify", "classify a cyclic sequence");
    add_nk(ver);
    ver->add_option("--sequence", cfg.sequence_source, "path or '-' for stdin")->required();
    ver->add_option("--format", cfg.format, "text|json")->check(CLI::IsMember({"text", "json"}));
    ver->add_option("--output,-o", cfg.output, "output path (default stdout)");

    CLI::App* st = app.add_subcommand("stats", "pattern/class/form/set census");
    add_nk(st);
    st->add_option("--format", cfg.format, "text|json")->check(CLI::IsMember({"text", "json"}));
    st->add_option("--budget", cfg.budget, "subset enumeration budget");
    st->add_option("--output,-o", cfg.output, "output path (default stdout)");

    CLI::App* gr = app.add_subcommand("graph", "export the transition or class graph");
    add_nk(gr);
    gr->add_option("--which", cfg.which, "transition|class")->check(CLI::IsMember({"transition", "class"}));
    gr->add_option("--filter", cfg.filter, "class filter: awesome|good")->check(CLI::IsMember({"awesome", "good"}));
    gr->add_option("--format", cfg.format, "dot|json")->check(CLI::IsMember({"dot", "json"}));
    gr->add_option("--output,-o", cfg.output, "output path (default stdout)");

    CLI::App* mp = app.add_subcommand("maxpack", "exhaustive longest-packing search (toy scale)");
    add_nk(mp);
    mp->add_option("--budget", cfg.budget, "DFS node budget (required when C(n,k) > 30)");
    mp->add_option("--format", cfg.format, "text|json")->check(CLI::IsMember({"text", "json"}));
    mp->add_option("--output,-o", cfg.output, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (cfg.n && (cfg.k < 2 || cfg.k > cfg.n - 2)) {
            std::cerr << "usage error: requires 2 <= k <= n-2\n";
            return kExitUsage;
        }
        if (gen->parsed()) return cmd_generate(cfg);
        if (ver->parsed()) return cmd_verify(cfg);
        if (st->parsed()) return cmd_stats(cfg);
        if (gr->parsed()) return cmd_graph(cfg);
        if (mp->parsed()) return cmd_maxpack(cfg);
    } catch (const ucyc::BudgetExceededError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const ucyc::NotEulerianError& e) {
        std::cerr << "internal error (non-Eulerian restriction): " << e.what() << "\n";
        return kExitNotEulerian;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
