#pragma once

// JSON forms of the certificates and structures. Every number that is not a
// vertex index is written as an exact "num/den" string.

#include "circ3/chromatic.hh"
#include "circ3/circular_arc.hh"
#include "circ3/ebs.hh"
#include "circ3/extension.hh"
#include "circ3/obstructions.hh"
#include "circ3/representation.hh"

#include <json.hpp>

namespace circ3 {

using Json = nlohmann::ordered_json;

// All readers throw InputError on malformed documents.

Json to_json(const Graph& g);  // {"n": .., "edges": [[u, v], ..]}
Graph graph_from_json(const Json& j);

Json to_json(const ObstructionWitness& w);  // {"kind": "C6", "vertices": [..]}
ObstructionWitness obstruction_from_json(const Json& j);

Json to_json(const CircleRepresentation& r, int k);  // {"points": {"0": "0/1", ..}, "k": k}
CircleRepresentation representation_from_json(const Json& j);

Json to_json(const ArcModel& m);  // {"circumference": 3, "arcs": {"0": ["a/b", "c/d"], ..}}
ArcModel arcs_from_json(const Json& j);

Json to_json(const ChiCVerdict& v);
ChiCVerdict verdict_from_json(const Json& j);

Json to_json(const ExtensionTrace& t);
ExtensionTrace trace_from_json(const Json& j);

// E is symmetrized on input; loops and repeated entries are kept so that the
// axiom checker can report them.
Json to_json(const EBSStructure& a);
EBSStructure ebs_from_json(const Json& j);

Json to_json(const AxiomReport& r);

}  // namespace circ3
