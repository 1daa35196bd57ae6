#include "mfw/json_io.hpp"

#include "mfw/error.hpp"
#include "mfw/seifert.hpp"

#include <limits>
#include <sstream>

namespace mfw {

namespace {

Json coeff_to_json(const BigInt& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(c);
  return c.str();
}

BigInt coeff_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw ParseError("coefficient must be an integer or a decimal string");
}

int get_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  std::int64_t v = j.get<std::int64_t>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    throw ParseError(std::string(what) + " out of range");
  return static_cast<int>(v);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

Json inequality_to_json(const Inequality& q) {
  return Json{{"value", q.value}, {"bound", q.bound}, {"holds", q.holds}, {"sharp", q.sharp}};
}

const char* direction_name(ArtinDirection d) { return d == ArtinDirection::A ? "a" : "b"; }

}  // namespace

Json poly_to_json(const LaurentPoly2& p) {
  Json terms = Json::array();
  for (const auto& [k, c] : p.terms()) terms.push_back(Json::array({k.first, k.second, coeff_to_json(c)}));
  return Json{{"terms", terms}};
}

LaurentPoly2 poly_from_json(const Json& j) {
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) throw ParseError("'terms' must be an array");
  LaurentPoly2 p;
  for (const Json& t : terms) {
    if (!t.is_array() || t.size() != 3) throw ParseError("each term is [a, z, coeff]");
    p.add_term(get_int(t[0], "a exponent"), get_int(t[1], "z exponent"), coeff_from_json(t[2]));
  }
  return p;
}

Json serialize_pd(const LinkDiagram& d) {
  Json cs = Json::array();
  for (const Crossing& c : d.crossings())
    cs.push_back(Json{{"sign", c.sign}, {"arcs", Json::array({c.arcs[0], c.arcs[1], c.arcs[2], c.arcs[3]})}});
  return Json{{"crossings", cs}, {"trivial_components", d.trivial_components()}};
}

LinkDiagram parse_pd(const Json& j) {
  const Json& cs = field(j, "crossings");
  if (!cs.is_array()) throw ParseError("'crossings' must be an array");
  std::vector<Crossing> crossings;
  for (const Json& c : cs) {
    Crossing x;
    x.sign = get_int(field(c, "sign"), "sign");
    if (x.sign != 1 && x.sign != -1) throw ParseError("sign must be 1 or -1");
    const Json& arcs = field(c, "arcs");
    if (!arcs.is_array() || arcs.size() != 4) throw ParseError("a crossing has exactly four arc labels");
    for (int k = 0; k < 4; ++k) x.arcs[k] = get_int(arcs[k], "arc label");
    crossings.push_back(x);
  }
  int trivial = j.contains("trivial_components") ? get_int(j.at("trivial_components"), "trivial_components") : 0;
  if (trivial < 0) throw ParseError("trivial_components must be non-negative");
  return LinkDiagram::from_labels(std::move(crossings), trivial);
}

LinkDiagram parse_pd(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_pd(j);
}

Json castle_to_json(const LinkDiagram& d, const SeifertStructure& s, const Castle& c) {
  Json floors = Json::array();
  for (const Floor& f : c.floors) {
    Json crossings = Json::array();
    if (f.circle >= 0) {
      const auto& cr = s.circles[f.circle].crossings;
      for (int t = 0; t < f.length; ++t) crossings.push_back(cr[(f.start + t) % cr.size()]);
    }
    floors.push_back(Json{{"circle", f.circle}, {"level", f.level}, {"start", f.start}, {"crossings", crossings}});
  }
  Json ladders = Json::array();
  for (const Ladder& l : c.ladders)
    ladders.push_back(Json{{"crossing", l.crossing}, {"lower", l.lower}, {"upper", l.upper}});
  Json bs = Json::array();
  bool trapped = false;
  for (const Brace& b : braces(d, s, c)) {
    trapped = trapped || b.is_trap;
    bs.push_back(Json{{"ladders", Json::array({b.s1, b.s2})},
                      {"lower", b.lower},
                      {"upper", b.upper},
                      {"lower_arcs", b.lower_arcs},
                      {"upper_arcs", b.upper_arcs},
                      {"inside_floors", b.inside_floors},
                      {"trap", b.is_trap}});
  }
  Json ts = Json::array();
  for (const Tower& t : towers(s, c)) ts.push_back(Json{{"floors", t.floors}, {"coherent", t.coherent}});
  return Json{{"base_arc", c.base.arc}, {"base_circle", c.base_circle}, {"floors", floors}, {"ladders", ladders},
              {"braces", bs}, {"has_traps", trapped}, {"towers", ts}};
}

std::string castle_to_dot(const Castle& c) {
  std::ostringstream out;
  out << "graph castle {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < c.floors.size(); ++i) {
    const Floor& f = c.floors[i];
    out << "  f" << i << " [label=\"C" << f.circle << " L" << f.level << "\"];\n";
  }
  for (const Ladder& l : c.ladders) out << "  f" << l.lower << " -- f" << l.upper << " [label=\"" << l.crossing << "\"];\n";
  out << "}\n";
  return out.str();
}

Json bounds_to_json(const BoundsReport& r) {
  Json j{{"crossings", r.crossings},
         {"writhe", r.writhe},
         {"seifert_circles", r.seifert_circles},
         {"components", r.components},
         {"polynomial", poly_to_json(r.polynomial)},
         {"degrees",
          Json{{"a_min", r.degrees.a_min}, {"a_max", r.degrees.a_max}, {"z_min", r.degrees.z_min}, {"z_max", r.degrees.z_max}}},
         {"U", inequality_to_json(r.upper)},
         {"L", inequality_to_json(r.left)},
         {"R", inequality_to_json(r.right)},
         {"LR", inequality_to_json(r.lr)},
         {"MFW", inequality_to_json(r.mfw)},
         {"self_linking", r.self_linking},
         {"braid_index_lower", r.braid_index_lower},
         {"canonical_genus_twice", r.canonical_genus_twice},
         {"all_hold", r.all_hold()}};
  if (r.conway) {
    j["conway"] = Json{{"z_max", *r.conway_z_max},
                       {"inequality", inequality_to_json(*r.conway)},
                       {"equals_twice_genus", *r.conway_equals_twice_genus},
                       {"equals_genus", *r.conway_equals_genus}};
  } else {
    j["conway"] = nullptr;
  }
  return j;
}

Json script_to_json(const MoveScript& s) {
  Json moves = Json::array();
  for (const Move& m : s.moves) {
    switch (m.type) {
      case Move::Type::Shackle:
        moves.push_back(Json{{"type", "shackle"}, {"west", m.shackle.west}, {"east", m.shackle.east}});
        break;
      case Move::Type::Double:
        moves.push_back(Json{{"type", "double"}, {"crossing", m.crossing}});
        break;
      case Move::Type::Artin:
        moves.push_back(Json{{"type", "artin"},
                             {"crossings", Json::array({m.artin.source, m.artin.middle, m.artin.sink})},
                             {"direction", direction_name(m.direction)}});
        break;
    }
  }
  return Json{{"start_circles", s.start_circles}, {"moves", moves}};
}

MoveScript script_from_json(const Json& j) {
  MoveScript s;
  s.start_circles = get_int(field(j, "start_circles"), "start_circles");
  if (s.start_circles < 0) throw ParseError("start_circles must be non-negative");
  const Json& moves = field(j, "moves");
  if (!moves.is_array()) throw ParseError("'moves' must be an array");
  for (const Json& m : moves) {
    const Json& type = field(m, "type");
    if (!type.is_string()) throw ParseError("move type must be a string");
    const std::string t = type.get<std::string>();
    if (t == "shackle") {
      s.moves.push_back(
          Move::make_shackle(ShackleSite{get_int(field(m, "west"), "west"), get_int(field(m, "east"), "east")}));
    } else if (t == "double") {
      s.moves.push_back(Move::make_double(get_int(field(m, "crossing"), "crossing")));
    } else if (t == "artin") {
      const Json& c = field(m, "crossings");
      if (!c.is_array() || c.size() != 3) throw ParseError("an Artin move names three crossings");
      const Json& dir = field(m, "direction");
      if (!dir.is_string() || (dir != "a" && dir != "b")) throw ParseError("Artin direction is \"a\" or \"b\"");
      s.moves.push_back(Move::make_artin(ArtinSite{get_int(c[0], "crossing"), get_int(c[1], "crossing"), get_int(c[2], "crossing")},
                                         dir == "a" ? ArtinDirection::A : ArtinDirection::B));
    } else {
      throw ParseError("unknown move type '" + t + "'");
    }
  }
  return s;
}

Json certificate_to_json(const SharpnessCertificate& c) {
  Json j{{"verdict", c.decomposable ? "decomposable" : "not_sharp"},
         {"deg_a_max", c.a_max},
         {"writhe_plus_circles_minus_one", c.bound},
         {"polynomial", poly_to_json(c.polynomial)},
         {"artin_moves_searched", c.artin_moves}};
  j["script"] = c.script ? script_to_json(*c.script) : Json(nullptr);
  return j;
}

}  // namespace mfw
