#pragma once

#include <json.hpp>

#include <string>

#include "qtwist/cocycles.hpp"
#include "qtwist/datum.hpp"
#include "qtwist/racks.hpp"

namespace qtwist {

using Json = nlohmann::ordered_json;

/**
 * Parsed datum input file. Schema (unknown keys rejected):
 *   cartan      : [[int]]            required
 *   q           : [["p/q", ...]]     required, rationals as strings
 *   linking     : ["p/q", ...]       optional
 *   q_I         : ["p/q", ...]       optional, one per connected component
 *   sqrt_q      : [["q","r"], ...]   optional radical table
 *   max_degree  : int                optional (default 6)
 *   serre       : {kind,i,j,n}       optional, consumed by the serre command
 *   which       : "ured"|"hpr"       optional, consumed by present
 *   negative_control : "R5"          optional, consumed by verify-iso
 */
struct DatumInput {
    ReducedDatum datum;
    std::optional<std::vector<Rational>> q_I;
    RadicalTable radicals;
    int max_degree = 6;
    Json extras; // command-specific keys, already validated
};

DatumInput parse_datum_file(const Json& j, const std::vector<std::string>& extra_keys = {});

Rational rational_from_json(const Json& j);

Json element_to_json(const MonomialYD& V, const SmashElement& a);
Json certificate_to_json(const MonomialYD& V, const MembershipCertificate& c);
Json cocycle_to_json(const HopfCocycle& c);
Json report_to_json(const VerifyReport& r);

// FNV-1a over the canonical (key-sorted) dump; stable across runs.
std::string input_hash(const Json& j);

struct RackInput {
    std::optional<TranspositionRack> builtin;
    FKCocycle builtin_cocycle = FKCocycle::MinusOne;
    std::optional<Rack> rack;
    std::optional<RackCocycle> cocycle;
    std::optional<std::vector<std::vector<Rational>>> phi_table; // X x X twist table
};

RackInput parse_rack_file(const Json& j);

GroupCocycleTable parse_group_cocycle(const Json& j, int n);

} // namespace qtwist
