#include "lsat/io.hpp"

#include <regex>

#include "lsat/error.hpp"

namespace lsat {

namespace {

Integer int_field(const Json& j, const char* what) {
    if (j.is_number_integer()) return Integer(j.dump(), 10);
    if (j.is_string()) return parse_integer(j.get<std::string>());
    throw ParseError(std::string(what) + ": expected an integer, got " + j.dump());
}

const Json& field(const Json& obj, const char* key) {
    if (!obj.is_object() || !obj.contains(key)) {
        throw ParseError(std::string("missing field '") + key + "' in " + obj.dump());
    }
    return obj.at(key);
}

bool bool_field(const Json& obj, const char* key) {
    const Json& v = field(obj, key);
    if (!v.is_boolean()) throw ParseError(std::string("field '") + key + "' must be boolean");
    return v.get<bool>();
}

long long_field(const Json& obj, const char* key) {
    Integer v = int_field(field(obj, key), key);
    if (!v.fits_slong_p()) throw ParseError(std::string(key) + " out of range");
    return v.get_si();
}

std::pair<Integer, Integer> int_pair(const Json& j, const char* what) {
    if (!j.is_array() || j.size() != 2) {
        throw ParseError(std::string(what) + ": expected [a, b], got " + j.dump());
    }
    return {int_field(j[0], what), int_field(j[1], what)};
}

KnotFacts knot_from_shortcut(const std::string& s) {
    if (s == "unknot") return unknot();
    if (s == "trefoil") return torus_knot(2, 3);
    static const std::regex torus(R"(\s*T\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*)");
    std::smatch m;
    if (std::regex_match(s, m, torus)) return torus_knot(Integer(m[1].str()), Integer(m[2].str()));
    throw ParseError("unknown knot shortcut '" + s + "'");
}

std::map<Integer, KnotFacts> twist_table(const Json& j) {
    std::map<Integer, KnotFacts> out;
    if (!j.is_object()) throw ParseError("twist table must be an object keyed by n");
    for (const auto& [key, val] : j.items()) out.emplace(parse_integer(key), knot_from_json(val));
    return out;
}

TailAssertions tails_from(const Json& obj) {
    TailAssertions t;
    if (obj.contains("neg_threshold")) t.neg_from = int_field(obj.at("neg_threshold"), "neg_threshold");
    if (obj.contains("pos_from")) t.pos_from = int_field(obj.at("pos_from"), "pos_from");
    return t;
}

Json sset(const SlopeSet& s) { return s.str(); }

}  // namespace

Json parse_json_argument(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error&) {
        return Json(text);
    }
}

KnotFacts knot_from_json(const Json& j) {
    if (j.is_string()) return knot_from_shortcut(j.get<std::string>());
    if (!j.is_object()) throw ParseError("knot description must be an object or string");
    if (j.contains("torus_knot")) {
        auto [p, m] = int_pair(j.at("torus_knot"), "torus_knot");
        return torus_knot(p, m);
    }
    if (j.contains("cable")) {
        const Json& c = j.at("cable");
        return cable_knot(knot_from_json(field(c, "companion")), int_field(field(c, "p"), "p"),
                          int_field(field(c, "q"), "q"));
    }
    KnotFacts k;
    k.name = j.contains("name") ? j.at("name").get<std::string>() : "K";
    k.genus = int_field(field(j, "genus"), "genus");
    k.is_lspace = bool_field(j, "is_lspace");
    k.is_neg_lspace = bool_field(j, "is_neg_lspace");
    k.is_fibered = bool_field(j, "is_fibered");
    k.is_unknot = j.contains("is_unknot") ? bool_field(j, "is_unknot") : false;
    k.validate();
    return k;
}

Json knot_to_json(const KnotFacts& k) {
    return Json{{"name", k.name},
                {"genus", k.genus.get_str()},
                {"is_lspace", k.is_lspace},
                {"is_neg_lspace", k.is_neg_lspace},
                {"is_fibered", k.is_fibered},
                {"is_unknot", k.is_unknot}};
}

PatternFacts pattern_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("pattern description must be an object");
    if (j.contains("torus_pattern")) {
        auto [p, q] = int_pair(j.at("torus_pattern"), "torus_pattern");
        return torus_pattern(p, q);
    }
    if (j.contains("one_bridge_braid")) {
        const Json& b = j.at("one_bridge_braid");
        BraidOverrides ov;
        if (b.contains("overrides")) {
            const Json& o = b.at("overrides");
            if (o.contains("twists")) ov.twists = twist_table(o.at("twists"));
            ov.tails = tails_from(o);
        }
        return one_bridge_braid(long_field(b, "w"), long_field(b, "b"), long_field(b, "t"), ov);
    }
    if (j.contains("table")) {
        const Json& t = j.at("table");
        return table_pattern(t.contains("name") ? t.at("name").get<std::string>() : "P",
                             int_field(field(t, "winding"), "winding"),
                             int_field(field(t, "genus_s3"), "genus_s3"), bool_field(t, "has_disk"),
                             t.contains("twists") ? twist_table(t.at("twists"))
                                                  : std::map<Integer, KnotFacts>{},
                             tails_from(t));
    }
    throw ParseError("unknown pattern description: " + j.dump());
}

Json certificate_to_json(const Certificate& c) {
    Json j;
    j["verdict"] = to_string(c.verdict);
    j["reason"] = c.reason;
    j["failed_condition"] = c.failed_condition;
    j["pattern"] = c.pattern;
    j["companion"] = c.companion;
    if (c.params) {
        j["params"] = Json{{"a", c.params->a.get_str()},
                           {"b", c.params->b.get_str()},
                           {"r", c.params->r.get_str()}};
    } else {
        j["params"] = nullptr;
    }
    j["companion_set"] = sset(c.companion_set);
    j["pattern_side_set"] = sset(c.pattern_side_set);
    j["glued_image"] = sset(c.glued_image);
    j["gluing_map"] = c.gluing_map;
    Json checks = Json::array();
    for (const auto& chk : c.checks) {
        Json values = Json::object();
        for (const auto& [k, v] : chk.values) values[k] = v;
        checks.push_back(Json{{"id", chk.id},
                              {"statement", chk.statement},
                              {"pass", chk.pass},
                              {"values", values}});
    }
    j["checks"] = checks;
    j["trusted_inputs"] = c.trusted_inputs;
    return j;
}

Certificate certificate_from_json(const Json& j) {
    Certificate c;
    c.verdict = verdict_from_string(field(j, "verdict").get<std::string>());
    c.reason = j.value("reason", "");
    c.failed_condition = j.value("failed_condition", "");
    c.pattern = j.value("pattern", "");
    c.companion = j.value("companion", "");
    if (j.contains("params") && !j.at("params").is_null()) {
        const Json& p = j.at("params");
        c.params = LemmaParams{int_field(field(p, "a"), "a"), int_field(field(p, "b"), "b"),
                               int_field(field(p, "r"), "r")};
    }
    c.companion_set = SlopeSet::parse(field(j, "companion_set").get<std::string>());
    c.pattern_side_set = SlopeSet::parse(field(j, "pattern_side_set").get<std::string>());
    c.glued_image = SlopeSet::parse(field(j, "glued_image").get<std::string>());
    c.gluing_map = j.value("gluing_map", "");
    for (const auto& chk : field(j, "checks")) {
        Check out;
        out.id = field(chk, "id").get<std::string>();
        out.statement = chk.value("statement", "");
        out.pass = bool_field(chk, "pass");
        for (const auto& [k, v] : field(chk, "values").items()) {
            out.values.emplace_back(k, v.get<std::string>());
        }
        c.checks.push_back(std::move(out));
    }
    if (j.contains("trusted_inputs")) {
        c.trusted_inputs = j.at("trusted_inputs").get<std::vector<std::string>>();
    }
    return c;
}

}  // namespace lsat
