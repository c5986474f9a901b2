#pragma once

#include <json.hpp>

#include "diffseq/exppoly.hpp"

namespace diffseq {

/// Field order inside each term record is significant, so the ordered
/// variant of nlohmann::json is used throughout.
using Json = nlohmann::ordered_json;

/// [{"coeff": "p/q", "x": a, "derivs": {"k": e_k, ...}}, ...] in canonical
/// monomial order.
Json to_json(const DiffPoly& p);
/// As above with a trailing "eweight" field per record; levels ascending.
Json to_json(const ExpDiffPoly& p);

/// Throw ParseError on malformed input.
DiffPoly diffpoly_from_json(const Json& j);
ExpDiffPoly exppoly_from_json(const Json& j);

}  // namespace diffseq
