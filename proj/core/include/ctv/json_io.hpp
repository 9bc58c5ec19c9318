#ifndef CTV_JSON_IO_HPP
#define CTV_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "ctv/chain.hpp"
#include "ctv/chessboard.hpp"
#include "ctv/cocycle.hpp"
#include "ctv/complex.hpp"
#include "ctv/points.hpp"
#include "ctv/tverberg.hpp"

namespace ctv {

using json = nlohmann::json;

// Complexes: {num_vertices, facets: [[ids]], labels?: [[row, col]]}.
json to_json(const Complex& k);
Complex complex_from_json(const json& j);

// Chains: {dim, terms: [{simplex: [ids], coeff}]}.
json to_json(const Chain& c);
Chain chain_from_json(const json& j);

// Configurations: {d, classes: [[["p/q", ...], ...], ...]}.
json to_json(const ColoredConfiguration& cfg);
/** Parses and validates; throws ConfigError naming the offending field. */
ColoredConfiguration configuration_from_json(const json& j);
ColoredConfiguration load_configuration(const std::string& path);

// Partitions: {parts: [[{class, index}, ...], ...]}, witnesses appended by
// callers as {point, barycentrics}.
json to_json(const RainbowPartition& p);
json to_json(const Witness& w);

json to_json(const PseudomanifoldReport& r);
json to_json(const CollapseReport& r);
json to_json(const BoundaryRelationReport& r);
json to_json(const SignClaimReport& r);
json to_json(const HCheckReport& r);
json to_json(const TrialReport& r);

// The cocycle report of record:
// {d, r, phi_value, omega_values, divides, extension_exists,
//  facets_evaluated, nonzero_facets}.
json to_json(const ObstructionVerdict& v);

}  // namespace ctv

#endif  // CTV_JSON_IO_HPP
