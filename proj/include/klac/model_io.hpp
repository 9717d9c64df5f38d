#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "klac/constructions.hpp"

namespace klac {

using Json = nlohmann::json;

// Scalars are encoded as "p/q" strings, or {"re": "p/q", "im": "p/q"} when
// not real. No floating point anywhere.
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, const std::string& path);

// ModelFile schema:
// {"rank": r, "structure": [{"i","j","k","c"}...],
//  "anchor": {"target_dim": n, "matrix": [[..]]},
//  "metric": [[..]], "J": [[..]], "omega": [{"i","j","c"}...], "eta": "p/q"}
// All fields but "rank" optional. ParseError (with a location) on any defect.
AlgebroidPresentation parse_model_text(const std::string& text);
AlgebroidPresentation parse_model_file(const std::string& path);

// Canonical serialization; parse(serialize(p)) == p, and the byte string is
// deterministic for a given presentation.
std::string serialize_model(const AlgebroidPresentation& p);

// {"bM": [..], "bZ": [..]}
BManifoldSpec parse_bspec_text(const std::string& text);
BManifoldSpec parse_bspec_file(const std::string& path);

// FNV-1a over the canonical serialization, as fixed-width hex.
std::string model_hash(const AlgebroidPresentation& p);

// Report fragments (all deterministic).
Json validation_to_json(const ValidationReport& rep);
Json cohomology_to_json(const CohomologyResult& coh, bool bigraded, bool harmonic);
Json hl_to_json(const HLReport& rep);
Json ddstar_to_json(const DdStarReport& rep);
Json quasi_iso_to_json(const QuasiIsoReport& rep);
Json equivalence_to_json(const EquivalenceReport& rep);
Json identities_to_json(const IdentityReport& rep);
Json pairing_to_json(const PairingReport& rep);
Json betti_to_json(const BettiReport& rep);
Json obstruction_to_json(const ObstructionReport& rep);

bool model_exists_as_file(const std::string& path);

}  // namespace klac
