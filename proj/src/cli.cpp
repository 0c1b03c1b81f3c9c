#include "degseq/cli.hpp"

#include "degseq/decomposition.hpp"
#include "degseq/error.hpp"
#include "degseq/family.hpp"
#include "degseq/json_io.hpp"
#include "degseq/semigroup.hpp"
#include "degseq/testkit.hpp"
#include "degseq/wqo.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace degseq::cli {

namespace {

struct Output {
    Json json;
    std::string csv; // used when format == csv
    int status = kOk;
};

int worst(int a, int b) {
    // budget beats negative beats ok
    auto rank = [](int s) { return s == kBudget ? 3 : s == kNegative ? 2 : s == kUsage ? 4 : 0; };
    return rank(a) >= rank(b) ? a : b;
}

std::string read_input(const CommandConfig& cfg, std::istream& in) {
    std::ostringstream buf;
    if (cfg.in.empty() || cfg.in == "-") {
        buf << in.rdbuf();
    } else {
        std::ifstream f(cfg.in);
        if (!f)
            throw InputError("cannot open input file '" + cfg.in + "'");
        buf << f.rdbuf();
    }
    return buf.str();
}

DegreeSequence as_degrees(const SequenceInput& s) {
    if (const auto* d = std::get_if<DegreeSequence>(&s))
        return *d;
    return regularity_to_degree(std::get<RegularitySequence>(s));
}

RegularitySequence as_regularity(const SequenceInput& s, int k) {
    if (const auto* r = std::get_if<RegularitySequence>(&s)) {
        if (r->k() != k)
            throw CapMismatch(r->k(), k);
        return *r;
    }
    return degree_to_regularity(std::get<DegreeSequence>(s), k);
}

Json collect(std::vector<Json> items, bool single) {
    if (single && items.size() == 1)
        return std::move(items.front());
    Json arr = Json::array();
    for (auto& j : items)
        arr.push_back(std::move(j));
    return arr;
}

Output cmd_check(const CommandConfig& cfg, std::istream& in) {
    bool single = false;
    const auto inputs = read_sequences(read_input(cfg, in), &single);
    const bool bip = cfg.family == "bipartite";
    const char* key = bip ? "bipartite" : "graphic";
    Output out;
    std::vector<Json> items;
    std::ostringstream csv;
    csv << "member,reason\n";
    for (const auto& s : inputs) {
        const DegreeSequence d = as_degrees(s);
        Json item;
        std::string reason;
        int status = kOk;
        if (!bip) {
            const auto bad = erdos_gallai_violation(d);
            item[key] = !bad;
            if (bad) {
                reason = *bad;
                status = kNegative;
            }
        } else {
            try {
                const RegularitySequence r = degree_to_regularity(d, d.max_degree());
                const bool ok = bipartite_is_member(r, cfg.split_cap);
                item[key] = ok;
                if (!ok) {
                    reason = r.degree_sum() % 2 ? "odd-degree-sum" : "no-side-split";
                    status = kNegative;
                }
            } catch (const SplitSpaceExceeded&) {
                item[key] = nullptr;
                reason = "split-space-exceeded";
                status = kBudget;
            }
        }
        if (!reason.empty())
            item["reason"] = reason;
        csv << (status == kOk ? "true" : status == kNegative ? "false" : "undecided") << ',' << reason << '\n';
        out.status = worst(out.status, status);
        items.push_back(std::move(item));
    }
    out.json = collect(std::move(items), single);
    out.csv = csv.str();
    return out;
}

Output cmd_realize(const CommandConfig& cfg, std::istream& in) {
    bool single = false;
    const auto inputs = read_sequences(read_input(cfg, in), &single);
    const StructuredFamily family = family_by_name(cfg.family, cfg.split_cap);
    Output out;
    std::vector<Json> items;
    for (const auto& s : inputs) {
        const DegreeSequence d = as_degrees(s);
        const RegularitySequence r = degree_to_regularity(d, d.max_degree());
        try {
            if (!family.is_member(r)) {
                const auto bad = erdos_gallai_violation(d);
                items.push_back({{"realizable", false},
                                 {"reason", cfg.family == "graph" && bad ? *bad : std::string("not-member")}});
                out.status = worst(out.status, kNegative);
                continue;
            }
            items.push_back(to_json(family.realize(r)));
        } catch (const SplitSpaceExceeded&) {
            items.push_back({{"realizable", nullptr}, {"reason", "split-space-exceeded"}});
            out.status = worst(out.status, kBudget);
        }
    }
    out.json = collect(std::move(items), single);
    return out;
}

Output cmd_basis(const CommandConfig& cfg) {
    const StructuredFamily family = family_by_name(cfg.family, cfg.split_cap);
    return {to_json(generating_set(family, cfg.k, cfg.bound)), {}, kOk};
}

Output cmd_decompose(const CommandConfig& cfg, std::istream& in, std::ostream& err) {
    bool single = false;
    const auto inputs = read_sequences(read_input(cfg, in), &single);
    const StructuredFamily family = family_by_name(cfg.family, cfg.split_cap);
    const GeneratingSet basis = generating_set(family, cfg.k, cfg.bound);
    Output out;
    std::vector<Json> items;
    std::ostringstream csv;
    csv << "route,base,coefficients\n";
    auto join = [](const std::vector<Count>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i)
            s += (i ? " " : "") + std::to_string(v[i]);
        return s;
    };
    for (std::size_t idx = 0; idx < inputs.size(); ++idx) {
        RegularitySequence r;
        try {
            r = as_regularity(inputs[idx], cfg.k);
        } catch (const DegreeExceedsCap& e) {
            items.push_back({{"member", false}, {"reason", "degree-exceeds-cap"}});
            csv << "none,,\n";
            out.status = worst(out.status, kNegative);
            continue;
        }
        if (!family.is_member(r)) {
            items.push_back({{"member", false}, {"reason", "not-member"}});
            csv << "none,,\n";
            out.status = worst(out.status, kNegative);
            continue;
        }
        const DecompositionOutcome outcome = decompose_with_fallback(r, basis, family);
        const RealizedDecomposition realized = realize_decomposition(outcome.decomposition, family);
        Json item{{"decomposition", to_json(outcome.decomposition)},
                  {"route", outcome.used_basis ? "basis" : "greedy"}};
        if (outcome.warning) {
            item["warning"] = *outcome.warning;
            err << "warning: input " << idx << ": " << *outcome.warning << '\n';
        }
        item["component_bound"] = max_component_bound(basis);
        item["realized"] = to_json(realized);
        items.push_back(std::move(item));
        csv << (outcome.used_basis ? "basis" : "greedy") << ',' << join(outcome.decomposition.base.counts()) << ','
            << join(outcome.decomposition.coefficients) << '\n';
    }
    out.json = collect(std::move(items), single);
    out.csv = csv.str();
    return out;
}

Output cmd_verify(const CommandConfig& cfg) {
    const StructuredFamily family = family_by_name(cfg.family, cfg.split_cap);
    const bool bip = cfg.family == "bipartite";
    const int max_n = std::min(cfg.oracle_max_n, bip ? testkit::kBipartiteCap : testkit::kGraphCap);
    const auto agreement = bip ? testkit::bipartite_oracle_agreement(max_n) : testkit::graph_oracle_agreement(max_n);
    Json examples = Json::array();
    for (const auto& d : agreement.examples)
        examples.push_back(d.degrees());
    const GeneratingSet basis = generating_set(family, cfg.k, cfg.bound);
    const BasisReport report = verify_basis(basis, family, cfg.verify_bound);
    Output out;
    out.json = {{"family", cfg.family},
                {"oracle",
                 {{"max_n", agreement.max_n},
                  {"max_degree", agreement.max_degree},
                  {"cases", agreement.cases},
                  {"disagreements", agreement.disagreements},
                  {"examples", std::move(examples)}}},
                {"basis", {{"k", cfg.k}, {"bound", cfg.bound}, {"elements", basis.elements.size()}}},
                {"completeness", to_json(report)}};
    if (agreement.disagreements > 0 || !report.complete) {
        out.status = kNegative;
        out.json["reason"] = agreement.disagreements > 0 ? "oracle-disagreement" : "basis-incomplete";
    }
    return out;
}

std::pair<SequenceInput, SequenceInput> read_pair(const CommandConfig& cfg, std::istream& in) {
    const auto inputs = read_sequences(read_input(cfg, in));
    if (inputs.size() != 2)
        throw InputError("expected exactly two sequences, got " + std::to_string(inputs.size()));
    return {inputs[0], inputs[1]};
}

int rao_status(RaoVerdict v) {
    return v == RaoVerdict::holds ? kOk : v == RaoVerdict::fails ? kNegative : kBudget;
}

Output cmd_wqo_pair(const CommandConfig& cfg, std::istream& in) {
    const auto [a, b] = read_pair(cfg, in);
    const RaoResult r = rao_leq_bruteforce(as_degrees(a), as_degrees(b), cfg.budget);
    return {to_json(r), {}, rao_status(r.verdict)};
}

Output cmd_probe(const CommandConfig& cfg, std::istream& in) {
    const auto [a, b] = read_pair(cfg, in);
    const DegreeSequence da = as_degrees(a), db = as_degrees(b);
    const int k = std::max(da.max_degree(), db.max_degree());
    const MonotonicityProbe p =
        probe_monotonicity(degree_to_regularity(da, k), degree_to_regularity(db, k), cfg.budget);
    Json j = to_json(p);
    j["x"] = to_json(degree_to_regularity(da, k));
    j["x_prime"] = to_json(degree_to_regularity(db, k));
    return {std::move(j), {}, rao_status(p.rao.verdict)};
}

void add_common(CLI::App* sub, CommandConfig& cfg) {
    sub->add_option("--family", cfg.family, "structure family")->check(CLI::IsMember({"graph", "bipartite"}));
    sub->add_option("-k", cfg.k, "degree cap")->check(CLI::NonNegativeNumber);
    sub->add_option("--bound", cfg.bound, "basis search bound (total vertex count)")->check(CLI::PositiveNumber);
    sub->add_option("--verify-bound", cfg.verify_bound, "completeness check bound")->check(CLI::PositiveNumber);
    sub->add_option("--budget", cfg.budget, "search node budget")->check(CLI::PositiveNumber);
    sub->add_option("--split-cap", cfg.split_cap, "bipartite side-split cap")->check(CLI::PositiveNumber);
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--in", cfg.in, "input file (JSON or CSV; default stdin)");
    sub->add_option("--out", cfg.out, "output file (default stdout)");
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CommandConfig cfg;
    CLI::App app{"Bounded-degree degree sequences: realizability, finite bases, decompositions, WQO checks",
                 "degseq"};
    app.require_subcommand(1);
    struct Cmd {
        const char* name;
        const char* help;
    };
    const Cmd cmds[] = {
        {"check", "membership verdict per input sequence"},
        {"realize", "realize each input sequence as a graph"},
        {"basis", "compute the finite generating set"},
        {"decompose", "decompose sequences over the basis and realize the components"},
        {"verify", "oracle agreement and basis completeness report"},
        {"wqo-pair", "decide D1 below D2 in the induced-subgraph order"},
        {"probe-cor3", "test whether x <= x' componentwise gives x below x' for one pair"},
    };
    for (const auto& c : cmds) {
        CLI::App* sub = app.add_subcommand(c.name, c.help);
        add_common(sub, cfg);
        if (std::string(c.name) == "verify")
            sub->add_option("--oracle-max-n", cfg.oracle_max_n, "largest n for the brute-force oracle")
                ->check(CLI::Range(0, 7));
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    if (cfg.format == "csv" && command != "check" && command != "decompose") {
        err << "error: --format csv is supported for check and decompose only\n";
        return kUsage;
    }

    Output result;
    try {
        if (command == "check")
            result = cmd_check(cfg, in);
        else if (command == "realize")
            result = cmd_realize(cfg, in);
        else if (command == "basis")
            result = cmd_basis(cfg);
        else if (command == "decompose")
            result = cmd_decompose(cfg, in, err);
        else if (command == "verify")
            result = cmd_verify(cfg);
        else if (command == "wqo-pair")
            result = cmd_wqo_pair(cfg, in);
        else
            result = cmd_probe(cfg, in);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const SearchLimitExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kBudget;
    } catch (const SplitSpaceExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kBudget;
    } catch (const NoRegularFound& e) {
        err << "error: " << e.what() << '\n';
        return kBudget;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    const std::string text = cfg.format == "csv" ? result.csv : result.json.dump(2) + "\n";
    if (cfg.out.empty()) {
        out << text;
    } else {
        std::ofstream f(cfg.out);
        if (!f || !(f << text)) {
            err << "error: cannot write '" << cfg.out << "'\n";
            return kUsage;
        }
    }
    return result.status;
}

} // namespace degseq::cli
