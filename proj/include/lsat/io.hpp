#pragma once

#include <string>

#include "json.hpp"
#include "lsat/certifier.hpp"
#include "lsat/knot_models.hpp"
#include "lsat/patterns.hpp"

namespace lsat {

using Json = nlohmann::ordered_json;

/// Companion descriptions:
///   {"name", "genus", "is_lspace", "is_neg_lspace", "is_fibered", "is_unknot"}
///   {"torus_knot": [p, m]}
///   {"cable": {"companion": ..., "p": int, "q": int}}
/// or one of the shortcut strings "unknot", "trefoil", "T(p,m)".
/// Integers may be JSON numbers or decimal strings.
KnotFacts knot_from_json(const Json& j);
Json knot_to_json(const KnotFacts& k);

/// Pattern descriptions:
///   {"torus_pattern": [p, q]}
///   {"one_bridge_braid": {"w", "b", "t", "overrides": {"twists": {...},
///                          "neg_threshold": N, "pos_from": M}}}
///   {"table": {"name", "winding", "genus_s3", "has_disk", "twists": {"n": knot},
///              "neg_threshold": N, "pos_from": M}}
PatternFacts pattern_from_json(const Json& j);

/// Parses text as JSON; a bare word that is not JSON is treated as a
/// companion shortcut string.
Json parse_json_argument(const std::string& text);

Json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);

}  // namespace lsat
