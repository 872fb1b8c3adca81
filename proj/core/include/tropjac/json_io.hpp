#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tropjac/abgroup.hpp"
#include "tropjac/metric_graph.hpp"
#include "tropjac/monoid.hpp"
#include "tropjac/plfun.hpp"
#include "tropjac/torsors.hpp"
#include "tropjac/tropical_jacobian.hpp"

// JSON schemas for every file the tool reads or writes. Objects serialize with sorted
// keys; integers that do not fit in 64 bits are written as decimal strings and both
// forms are accepted on input. All parse errors surface as InputError.
namespace tropjac::json_io {

using nlohmann::json;

json to_json(const Integer& x);
json to_json(const LatticeVector& v);
json to_json(const IntMatrix& m);

/// {"freeRank": r, "invariantFactors": [...]}
json to_json(const FgAbelianGroup& g);
FgAbelianGroup group_from_json(const json& j);

/// {"rank": k, "inequalities": [[...]], "rays": [[...]]} or {"free": k}
json to_json(const SharpFsMonoid& m);
SharpFsMonoid monoid_from_json(const json& j);

/// {"monoid": ..., "vertices": [...], "edges": [{"id", "tail", "head", "length"}]};
/// lengths over a rank-1 monoid may be bare integers.
json to_json(const MetricGraph& g);
MetricGraph graph_from_json(const json& j);

/// {"source": monoid, "target": monoid, "matrix": [[...]]}
json to_json(const MonoidHom& h);
MonoidHom hom_from_json(const json& j);

/// {"e0": 1, "e1": -1, ...}; edges not named have coefficient 0.
json cycle_to_json(const MetricGraph& g, const Cycle& c);
Cycle cycle_from_json(const MetricGraph& g, const json& j);

/// {"basis": [cycle, ...], "cotreeEdges": [...], "gram": [[vector, ...], ...]}
json to_json(const MetricGraph& g, const HomologyData& h);

/// {"values": {"v0": [...], ...}, "slopes": {"e0": s, ...}}
json to_json(const MetricGraph& g, const PLFunction& f);
/// Accepts {"values": {...}} or the bare vertex map.
std::map<std::string, LatticeVector> pl_values_from_json(const MetricGraph& g, const json& j);

/// {"values": [[...], ...]} in cycle_basis order, or {"values": {"<cotree edge>": [...]}}
/// naming each fundamental cycle by its cotree edge.
TropCocycle cocycle_from_json(const MetricGraph& g, const json& j);
json to_json(const TropCocycle& f);

/// {"group": ..., "text": ..., "boundedBasis": ..., "relationMatrix": ...}
json to_json(const TroJacGroup& t);

/// {"factors": [{"mu": n}, {"z": m}, {"alphaP": p}, {"localLocal": {"p", "homDim", "alphaPower"}}]}
json to_json(const GroupDescriptor& g);
GroupDescriptor descriptor_from_json(const json& j);

/// {"residueChar": p, "logRank": r}
BaseDescriptor base_from_json(const json& j);

/// {"pRank": r, "localLocal": {"p", "homDim", "alphaPower"}}
Bt1Descriptor bt1_from_json(const json& j);

/// {"verdict": ..., "witness": {"factor", "obstruction"} | null}
json to_json(const ExtensionVerdict& v);

json to_json(const UnipotentDescriptor& u);

/// Reads and parses a JSON file; InputError on I/O or syntax failure.
json read_file(const std::string& path);

}  // namespace tropjac::json_io
