#include "gbs/io.hpp"

#include <fstream>
#include <istream>
#include <sstream>

namespace gbs {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

BigInt label_from_json(const Json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return parse_bigint(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  throw ParseError(where + ": label must be a decimal string or an integer");
}

BigInt integer_field(const Json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return label_from_json(j.at(key), key);
}

std::string string_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string()) throw ParseError(std::string("missing string field '") + key + "'");
  return j.at(key).get<std::string>();
}

std::string orientation_code(Orientation o) { return o == Orientation::Positive ? "+" : "-"; }

Orientation orientation_from(const Json& j) {
  const std::string s = j.is_string() ? j.get<std::string>() : "";
  if (s == "+") return Orientation::Positive;
  if (s == "-") return Orientation::Negative;
  throw ParseError("orientation must be \"+\" or \"-\"");
}

Json oriented_to_json(const OrientedEdge& e) { return Json{{"edge", e.edge}, {"orientation", orientation_code(e.orientation)}}; }

OrientedEdge oriented_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("oriented edge must be an object");
  return {string_field(j, "edge"), orientation_from(j.value("orientation", Json("+")))};
}

}  // namespace

RawGraph raw_graph_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("graph must be a JSON object");
  if (!j.contains("vertices") || !j.at("vertices").is_array()) throw ParseError("graph needs a 'vertices' array");
  if (!j.contains("edges") || !j.at("edges").is_array()) throw ParseError("graph needs an 'edges' array");
  RawGraph raw;
  for (const auto& v : j.at("vertices")) {
    if (!v.is_string()) throw ParseError("vertex ids must be strings");
    raw.vertices.push_back(v.get<std::string>());
  }
  for (const auto& e : j.at("edges")) {
    if (!e.is_object()) throw ParseError("edges must be objects");
    const std::string id = string_field(e, "id");
    raw.edges.push_back({id, string_field(e, "from"), string_field(e, "to"), label_from_json(e.value("a", Json()), id + ".a"),
                         label_from_json(e.value("omega", Json()), id + ".omega")});
  }
  return raw;
}

Graph graph_from_json(const Json& j) { return Graph::validate(raw_graph_from_json(j)); }

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) {
    edges.push_back({{"id", e.id},
                     {"from", g.vertices()[e.from]},
                     {"to", g.vertices()[e.to]},
                     {"a", to_string(e.a)},
                     {"omega", to_string(e.omega)}});
  }
  return Json{{"vertices", g.vertices()}, {"edges", std::move(edges)}};
}

CoveringGraph cover_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("cover must be a JSON object");
  try {
    const auto d = j.at("d").get<std::size_t>();
    const auto n = j.at("n_sheets").get<std::size_t>();
    const auto perms = j.at("perms").get<std::vector<std::vector<std::size_t>>>();
    return covering_from_permutations(d, n, perms);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("cover: ") + e.what());
  }
}

Json cover_to_json(const CoveringGraph& c) {
  return Json{{"d", c.d}, {"n_sheets", c.n_sheets}, {"perms", c.perms}};
}

Json move_to_json(const Move& mv) {
  Json j{{"move", move_name(mv)}};
  std::visit(overloaded{
                 [&](const Collapse& m) { j["edge"] = oriented_to_json(m.edge); },
                 [&](const Expansion& m) {
                   j["vertex"] = m.vertex;
                   j["factor"] = to_string(m.factor);
                   Json ends = Json::array();
                   for (const auto& e : m.ends) ends.push_back(oriented_to_json(e));
                   j["ends"] = std::move(ends);
                   j["new_vertex"] = m.new_vertex;
                   j["new_edge"] = m.new_edge;
                 },
                 [&](const SlideOverLoop& m) {
                   j["moved"] = oriented_to_json(m.moved);
                   j["loop"] = m.loop;
                   j["count"] = m.count;
                 },
                 [&](const SlideOverEdge& m) {
                   j["moved"] = oriented_to_json(m.moved);
                   j["over"] = oriented_to_json(m.over);
                 },
                 [&](const Induction& m) {
                   j["loop"] = m.loop;
                   j["ell"] = to_string(m.ell);
                   j["inverse"] = m.inverse;
                 },
                 [&](const AMove& m) {
                   j["loop"] = oriented_to_json(m.loop);
                   j["ell"] = to_string(m.ell);
                   j["new_vertex"] = m.new_vertex;
                   j["new_edge"] = m.new_edge;
                 },
                 [&](const AInverse& m) { j["edge"] = oriented_to_json(m.edge); },
             },
             mv);
  return j;
}

Move move_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("move must be a JSON object");
  const std::string kind = string_field(j, "move");
  try {
    if (kind == "collapse") return Collapse{oriented_from_json(j.at("edge"))};
    if (kind == "expansion") {
      Expansion m{string_field(j, "vertex"), integer_field(j, "factor"), {}, j.value("new_vertex", ""),
                  j.value("new_edge", "")};
      for (const auto& e : j.at("ends")) m.ends.push_back(oriented_from_json(e));
      return m;
    }
    if (kind == "slide-loop") {
      return SlideOverLoop{oriented_from_json(j.at("moved")), string_field(j, "loop"), j.at("count").get<std::int64_t>()};
    }
    if (kind == "slide-edge") return SlideOverEdge{oriented_from_json(j.at("moved")), oriented_from_json(j.at("over"))};
    if (kind == "induction") return Induction{string_field(j, "loop"), integer_field(j, "ell"), j.value("inverse", false)};
    if (kind == "a-move") {
      return AMove{oriented_from_json(j.at("loop")), integer_field(j, "ell"), j.value("new_vertex", ""),
                   j.value("new_edge", "")};
    }
    if (kind == "a-inverse") return AInverse{oriented_from_json(j.at("edge"))};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("move '" + kind + "': " + e.what());
  }
  throw ParseError("unknown move '" + kind + "'");
}

std::string moves_to_json_lines(const std::vector<Move>& moves) {
  std::string out;
  for (const auto& mv : moves) out += move_to_json(mv).dump() + "\n";
  return out;
}

std::vector<Move> moves_from_json_lines(std::istream& in) {
  std::vector<Move> moves;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      moves.push_back(move_from_json(Json::parse(line)));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError("line " + std::to_string(number) + ": " + e.what());
    }
  }
  return moves;
}

Json normal_form_to_json(const NormalForm& nf) {
  return Json{{"r", to_string(nf.r)}, {"l", nf.l}, {"m", nf.m}, {"residues", nf.residues}, {"k", nf.k()},
              {"text", render(nf)}};
}

Json modular_image_to_json(const ModularImage& img) {
  Json primes = Json::array();
  for (const auto& p : img.primes) primes.push_back(to_string(p));
  Json basis = Json::array();
  for (const auto& row : img.basis) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(to_string(x));
    basis.push_back(std::move(r));
  }
  Json j{{"primes", std::move(primes)},
         {"basis", std::move(basis)},
         {"row_negative", img.row_negative},
         {"has_negative_one", img.has_negative_one}};
  if (auto q = image_generator_cyclic(img)) j["generator"] = to_string(*q);
  return j;
}

Json certificate_to_json(const Certificate& cert) {
  Json steps = Json::array();
  for (const auto& step : cert.steps) {
    Json s = std::visit(
        overloaded{
            [](const StandardSubgroupStep& x) {
              return Json{{"step", "StandardSubgroup"},
                          {"m", to_string(x.m)},
                          {"n", to_string(x.n)},
                          {"index", to_string(x.subgroup.index)},
                          {"d", to_string(x.subgroup.group.d)},
                          {"p", to_string(x.subgroup.group.p)},
                          {"q", to_string(x.subgroup.group.q)}};
            },
            [](const Index2CycleStep& x) {
              return Json{{"step", "Index2Cycle"}, {"m", to_string(x.m)}, {"n", to_string(x.n)}};
            },
            [](const GammaKEmbeddingStep& x) {
              return Json{{"step", "GammaKEmbedding"}, {"k", x.k}, {"n", to_string(x.n)}, {"index", x.index}};
            },
            [](const CommonSolvableStep& x) {
              return Json{{"step", "CommonSolvable"}, {"base", to_string(x.base)}, {"exponent", x.exponent}};
            },
            [](const FreeTimesZStep& x) { return Json{{"step", "FreeTimesZ"}, {"rank", x.rank}}; },
        },
        step);
    s["text"] = describe(step);
    steps.push_back(std::move(s));
  }
  return steps;
}

Json verdict_to_json(const CommVerdict& v) {
  Json j{{"commensurable", v.commensurable}, {"case", std::string(case_name(v.tag))}};
  if (v.witness) j["witness"] = certificate_to_json(*v.witness);
  return j;
}

Json violations_to_json(const std::vector<Violation>& violations) {
  Json out = Json::array();
  for (const auto& v : violations) {
    out.push_back({{"kind", std::string(violation_name(v.kind))}, {"subject", v.subject}, {"detail", v.detail}});
  }
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace gbs
