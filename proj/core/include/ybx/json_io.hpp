#ifndef YBX_JSON_IO_HPP
#define YBX_JSON_IO_HPP

/**
 * @file json_io.hpp
 * @brief JSON exchange format.
 *
 * The ground field is declared once per document, {"field":"Q"} or
 * {"field":"Fp","p":5}.  Rationals are encoded as strings "num/den" (plain
 * integers allowed as "7"); F_p elements as integers.  Linear maps are dense
 * row-major: {"dom":d,"cod":c,"rows":[[...],...]}.
 *
 * Schema violations throw JsonError carrying a JSON pointer path.
 */

#include <nlohmann/json.hpp>

#include "ybx/extension.hpp"
#include "ybx/hopf.hpp"
#include "ybx/presentation.hpp"
#include "ybx/primitive.hpp"

namespace ybx {

using nlohmann::json;

json field_to_json(const Field& f);
Field field_from_json(const json& doc);  // reads "field" (and "p") from a document root

json linmap_to_json(const LinMap& m);
LinMap linmap_from_json(const json& j, const Field& f, const std::string& path = "");

json coalgebra_to_json(const Coalgebra& c);
Coalgebra coalgebra_from_json(const json& j, const Field& f, const std::string& path = "");

/// {"field":..., "coalgebra":..., "r":...}
json pair_to_json(const BraidedPair& p);
BraidedPair pair_from_json(const json& doc);
/// Same layout without constructing a validated pair (for `verify`).
std::pair<Coalgebra, LinMap> raw_pair_from_json(const json& doc);

/// {"field":..., "hopf": {"coalgebra":..., "m":..., "unit":..., "antipode":...}}
json hopf_to_json(const HopfAlgebra& h);
HopfAlgebra hopf_from_json(const json& doc);
json hopf_fields_to_json(const HopfAlgebra& h);
HopfAlgebra hopf_from_fields(const json& j, const Field& f, const std::string& path);

/// {"field":..., "brace": {..., "m_circ":..., "unit_circ":..., "antipode_circ":...}}
json brace_to_json(const Brace& b);
Brace brace_from_json(const json& doc);

/// {"field":..., "operator": {"hopf":..., "r":...}}
json operator_to_json(const BraidingOperator& o);
BraidingOperator operator_from_json(const json& doc);

/// {"field":..., "cocycle": {"domain":..., "codomain":..., "action":..., "pi":...}}
json cocycle_to_json(const Cocycle& k);
Cocycle cocycle_from_json(const json& doc);

/// {"field":..., "d":..., "g":..., "h":..., "sigmaV":..., "tauV":...}
json prim_to_json(const PrimParams& p);
PrimParams prim_from_json(const json& doc);

/// Doubled pair plus the block map {"X":[0,n),"SX":[n,2n)}.
json doubled_to_json(const DoubledSolution& d);

json presentation_to_json(const Presentation& p);
json report_to_json(const VerificationReport& r);

json load_json_file(const std::string& filename);

}  // namespace ybx

#endif
