#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "ietk/check.hpp"
#include "ietk/flow.hpp"
#include "ietk/reduce.hpp"

namespace ietk::io {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "ietkit 0.1.0";

// {"schema": "ietk.<kind>", "version": 1, "tool": ..., "config": config} merged with payload.
json envelope(const std::string& kind, const json& config, json payload);
// Two-space indentation, trailing newline; keys sorted, so output is byte-stable.
std::string dump(const json& j);

json to_json(const Permutation& p);  // {"m": 5, "image": [5,4,3,2,1]}
Permutation permutation_from_json(const json& j);

json to_json(const RauzyPath& p);  // {"start": {...}, "labels": "..."}
RauzyPath path_from_json(const json& j);

json to_json(const IntMatrix& a);
json to_json(const Word& w);
json to_json(const CertifiedReal& x, int digits = 30);

// lengths: {"kind": "rational", "values": ["1/3", ...]}, {"kind": "decimal",
// "values": ["0.25", ...]} (read as exact decimals) or {"kind": "pf_eigenvector",
// "path": {...}} (the normalised Perron lengths of a closed path).
IetPair iet_from_json(const json& j, int precision_bits = 256, int max_bits = kDefaultMaxBits);
json to_json(const IetPair& t, int digits = 30);

json to_json(const Substitution& s);  // {"m": 5, "images": {"1": "1525", ...}}
Substitution substitution_from_json(const json& j);

json to_json(const WitnessPair& w, int m);
json to_json(const std::vector<Check>& checks);
json to_json(const WitnessCertificate& c);
json to_json(const TowerDiagnostics& d);
json to_json(const CocycleReport& r);
json to_json(const TowerPartition& p);

}  // namespace ietk::io
