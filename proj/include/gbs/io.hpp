#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "gbs/commensurability.hpp"
#include "gbs/covering.hpp"
#include "gbs/graph.hpp"
#include "gbs/iso.hpp"
#include "gbs/modular.hpp"
#include "gbs/moves.hpp"
#include "gbs/normalform.hpp"

namespace gbs {

using Json = nlohmann::ordered_json;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Labels may be decimal strings or JSON integers; no validation beyond syntax.
RawGraph raw_graph_from_json(const Json& j);
Graph graph_from_json(const Json& j);
/// Labels are written as decimal strings.
Json graph_to_json(const Graph& g);

CoveringGraph cover_from_json(const Json& j);
Json cover_to_json(const CoveringGraph& c);

Json move_to_json(const Move& mv);
Move move_from_json(const Json& j);
/// One compact JSON object per line.
std::string moves_to_json_lines(const std::vector<Move>& moves);
std::vector<Move> moves_from_json_lines(std::istream& in);

Json normal_form_to_json(const NormalForm& nf);
Json modular_image_to_json(const ModularImage& img);
Json certificate_to_json(const Certificate& cert);
Json verdict_to_json(const CommVerdict& v);
Json violations_to_json(const std::vector<Violation>& violations);

Json read_json_file(const std::string& path);

}  // namespace gbs
