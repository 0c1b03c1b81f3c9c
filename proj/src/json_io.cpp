#include "degseq/json_io.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace degseq {

Json to_json(const DegreeSequence& d) { return Json{{"degrees", d.degrees()}}; }

Json to_json(const RegularitySequence& r) { return Json{{"k", r.k()}, {"counts", r.counts()}}; }

Json to_json(const Graph& g) {
    Json edges = Json::array();
    for (const Edge& e : g.edges())
        edges.push_back({e.u, e.v});
    return Json{{"n", g.n()}, {"edges", std::move(edges)}};
}

namespace {

Json sides_json(const std::vector<Side>& sides) {
    Json s = Json::array();
    for (Side x : sides)
        s.push_back(static_cast<int>(x));
    return s;
}

} // namespace

Json to_json(const BipartiteGraph& g) {
    Json j = to_json(g.graph());
    j["sides"] = sides_json(g.sides());
    return j;
}

Json to_json(const Realization& r) {
    Json j = to_json(r.graph);
    if (r.sides)
        j["sides"] = sides_json(*r.sides);
    return j;
}

Json to_json(const GeneratingSet& gs) {
    Json elements = Json::array();
    for (const auto& e : gs.elements)
        elements.push_back({{"counts", e.counts.counts()}, {"witness", to_json(e.witness)}});
    return Json{{"family", gs.family},
                {"k", gs.k},
                {"modulus", gs.modulus.t},
                {"bound", gs.bound},
                {"elements", std::move(elements)}};
}

Json to_json(const Decomposition& d) {
    return Json{{"base", to_json(d.base)}, {"coefficients", d.coefficients}, {"modulus", d.modulus.t}};
}

Json to_json(const RealizedDecomposition& d) {
    Json comps = Json::array();
    for (const auto& c : d.components)
        comps.push_back(to_json(c));
    return Json{{"components", std::move(comps)}, {"total", to_json(d.total)}};
}

Json to_json(const Embedding& e) { return Json{{"map", e.map}}; }

Json to_json(const RaoResult& r) {
    Json j{{"relation", "rao-leq"}};
    switch (r.verdict) {
    case RaoVerdict::holds: j["result"] = true; break;
    case RaoVerdict::fails: j["result"] = false; break;
    case RaoVerdict::budget_exceeded: j["result"] = "budget-exceeded"; break;
    }
    if (r.witness) {
        j["witness"] = {{"kind", "embedding"},
                        {"pattern", to_json(*r.witness->pattern)},
                        {"host", to_json(*r.witness->host)},
                        {"embedding", to_json(*r.witness->embedding)}};
    } else {
        j["witness"] = nullptr;
    }
    const auto& c = r.certificate;
    j["certificate"] = {{"exhaustive", r.verdict != RaoVerdict::budget_exceeded},
                        {"pattern_labeled_realizations", c.pattern_labeled},
                        {"host_labeled_realizations", c.host_labeled},
                        {"pattern_classes", c.pattern_classes},
                        {"host_classes", c.host_classes},
                        {"pairs_tested", c.pairs_tested},
                        {"nodes", c.nodes}};
    if (r.verdict == RaoVerdict::fails)
        j["reason"] = "no-induced-embedding";
    else if (r.verdict == RaoVerdict::budget_exceeded)
        j["reason"] = "budget-exceeded";
    return j;
}

Json to_json(const MonotonicityProbe& p) {
    Json rao = to_json(p.rao);
    return Json{{"probe", "product-order-monotonicity"},
                {"pointwise", to_string(p.pointwise)},
                {"premise_holds", p.premise_holds},
                {"rao_leq", rao["result"]},
                {"counterexample", p.counterexample},
                {"search", std::move(rao)}};
}

Json to_json(const BasisReport& r) {
    Json j{{"complete", r.complete}, {"verify_bound", r.verify_bound}, {"members_checked", r.members_checked}};
    j["first_uncovered"] = r.first_uncovered ? to_json(*r.first_uncovered) : Json(nullptr);
    if (!r.complete)
        j["reason"] = "uncovered-member";
    return j;
}

namespace {

std::vector<Count> int_list(const Json& j, const std::string& where) {
    if (!j.is_array())
        throw InputError(where + ": expected an array of nonnegative integers");
    std::vector<Count> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number_integer() || j[i].get<Count>() < 0)
            throw InputError(where + "[" + std::to_string(i) + "]: expected a nonnegative integer");
        out.push_back(j[i].get<Count>());
    }
    return out;
}

} // namespace

SequenceInput sequence_from_json(const Json& j, const std::string& where) {
    if (j.is_array()) {
        const auto v = int_list(j, where);
        return DegreeSequence(std::vector<int>(v.begin(), v.end()));
    }
    if (!j.is_object())
        throw InputError(where + ": expected an object with field 'degrees' or 'counts'");
    if (j.contains("degrees")) {
        const auto v = int_list(j["degrees"], where + ".degrees");
        return DegreeSequence(std::vector<int>(v.begin(), v.end()));
    }
    if (j.contains("counts")) {
        auto counts = int_list(j["counts"], where + ".counts");
        if (counts.empty())
            throw InputError(where + ".counts: needs at least one entry");
        if (j.contains("k")) {
            if (!j["k"].is_number_integer() || j["k"].get<Count>() + 1 != static_cast<Count>(counts.size()))
                throw InputError(where + ".k: must equal length of counts minus one");
        }
        return RegularitySequence(std::move(counts));
    }
    throw InputError(where + ": missing field 'degrees' or 'counts'");
}

Graph graph_from_json(const Json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw InputError(where + ".n: expected an integer");
    if (!j.contains("edges") || !j["edges"].is_array())
        throw InputError(where + ".edges: expected an array");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < j["edges"].size(); ++i) {
        const auto pair = int_list(j["edges"][i], where + ".edges[" + std::to_string(i) + "]");
        if (pair.size() != 2)
            throw InputError(where + ".edges[" + std::to_string(i) + "]: expected two endpoints");
        edges.push_back({static_cast<int>(pair[0]), static_cast<int>(pair[1])});
    }
    try {
        return Graph(j["n"].get<int>(), std::move(edges));
    } catch (const InvalidGraph& e) {
        throw InputError(where + ": " + e.what());
    }
}

Realization realization_from_json(const Json& j, const std::string& where) {
    Realization r(graph_from_json(j, where));
    if (j.contains("sides")) {
        std::vector<Side> sides;
        for (Count s : int_list(j["sides"], where + ".sides"))
            sides.push_back(s == 0 ? Side::A : Side::B);
        r = Realization(BipartiteGraph(r.graph, std::move(sides)));
    }
    return r;
}

GeneratingSet generating_set_from_json(const Json& j) {
    GeneratingSet gs;
    try {
        gs.family = j.at("family").get<std::string>();
        gs.k = j.at("k").get<int>();
        gs.modulus.t = int_list(j.at("modulus"), "basis.modulus");
        gs.bound = j.at("bound").get<Count>();
        const Json& elems = j.at("elements");
        for (std::size_t i = 0; i < elems.size(); ++i) {
            const std::string where = "basis.elements[" + std::to_string(i) + "]";
            gs.elements.push_back({RegularitySequence(int_list(elems[i].at("counts"), where + ".counts")),
                                   realization_from_json(elems[i].at("witness"), where + ".witness")});
        }
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("basis: ") + e.what());
    }
    std::map<ResidueLabel, std::size_t> slot;
    for (const auto& e : gs.elements) {
        if (e.counts.is_zero())
            continue;
        const ResidueLabel label = residue_class_of(e.counts, gs.modulus);
        auto [it, fresh] = slot.emplace(label, gs.classes.size());
        if (fresh)
            gs.classes.push_back({label, {}});
        gs.classes[it->second].minima.push_back(e.counts);
    }
    std::sort(gs.classes.begin(), gs.classes.end(),
              [](const ClassMinima& a, const ClassMinima& b) { return a.label < b.label; });
    return gs;
}

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
        const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
        throw InputError("malformed JSON at line " + std::to_string(line) + ": " + e.what());
    }
}

std::vector<SequenceInput> read_sequences(const std::string& text, bool* single_object) {
    if (single_object)
        *single_object = false;
    const auto first = text.find_first_not_of(" \t\r\n");
    std::vector<SequenceInput> out;
    if (first == std::string::npos)
        return out;
    if (text[first] == '{' || text[first] == '[') {
        const Json j = parse_json_text(text);
        if (j.is_object()) {
            if (single_object)
                *single_object = true;
            out.push_back(sequence_from_json(j, "input"));
            return out;
        }
        // A flat array of integers is one degree list; otherwise a list of items.
        const bool flat = std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_number(); });
        if (flat && !j.empty()) {
            if (single_object)
                *single_object = true;
            out.push_back(sequence_from_json(j, "input"));
            return out;
        }
        for (std::size_t i = 0; i < j.size(); ++i)
            out.push_back(sequence_from_json(j[i], "input[" + std::to_string(i) + "]"));
        return out;
    }

    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        std::vector<int> degrees;
        if (line.find_first_not_of(" \t") != std::string::npos) {
            std::istringstream fields(line);
            std::string field;
            std::size_t col = 0;
            while (std::getline(fields, field, ',')) {
                ++col;
                try {
                    std::size_t used = 0;
                    const long v = std::stol(field, &used);
                    if (field.find_first_not_of(" \t", used) != std::string::npos || v < 0)
                        throw std::invalid_argument("bad");
                    degrees.push_back(static_cast<int>(v));
                } catch (const std::exception&) {
                    throw InputError("CSV line " + std::to_string(lineno) + ", field " + std::to_string(col) +
                                     ": expected a nonnegative integer, got '" + field + "'");
                }
            }
        }
        out.push_back(DegreeSequence(std::move(degrees)));
    }
    return out;
}

} // namespace degseq
