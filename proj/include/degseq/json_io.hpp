#pragma once

#include "degseq/decomposition.hpp"
#include "degseq/error.hpp"
#include "degseq/graph.hpp"
#include "degseq/semigroup.hpp"
#include "degseq/sequences.hpp"
#include "degseq/wqo.hpp"

#include <json.hpp>

#include <string>
#include <variant>
#include <vector>

namespace degseq {

using Json = nlohmann::ordered_json;

/// Malformed input; the message names the line or field at fault.
class InputError : public Error {
public:
    using Error::Error;
};

Json to_json(const DegreeSequence& d);
Json to_json(const RegularitySequence& r);
/// {"n":..,"edges":[[u,v],...]}; "sides" added for colored realizations.
Json to_json(const Graph& g);
Json to_json(const BipartiteGraph& g);
Json to_json(const Realization& r);
Json to_json(const GeneratingSet& gs);
Json to_json(const Decomposition& d);
Json to_json(const RealizedDecomposition& d);
Json to_json(const Embedding& e);
Json to_json(const RaoResult& r);
Json to_json(const MonotonicityProbe& p);
Json to_json(const BasisReport& r);

/// Either {"degrees":[...]} or {"k":..,"counts":[...]}; a bare array is read
/// as a degree list. `where` prefixes error messages.
using SequenceInput = std::variant<DegreeSequence, RegularitySequence>;
SequenceInput sequence_from_json(const Json& j, const std::string& where = "input");

Graph graph_from_json(const Json& j, const std::string& where = "graph");
Realization realization_from_json(const Json& j, const std::string& where = "graph");
GeneratingSet generating_set_from_json(const Json& j);

/// Parses text with line-numbered error messages.
Json parse_json_text(const std::string& text);

/// JSON (a single object or an array of objects) or CSV (one comma-separated
/// degree list per line, blank line = empty sequence). Sets single_object when
/// the input was one JSON object rather than a list.
std::vector<SequenceInput> read_sequences(const std::string& text, bool* single_object = nullptr);

} // namespace degseq
