#include "tangle/io.hpp"

#include "tangle/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <tuple>

namespace tangle {

namespace {

const Json &require(const Json &doc, const char *key) {
  if (!doc.is_object())
    throw InvalidArgument("expected a JSON object");
  const auto it = doc.find(key);
  if (it == doc.end())
    throw InvalidArgument(std::string("missing field '") + key + "'");
  return *it;
}

template <class T> T require_as(const Json &doc, const char *key) {
  const Json &value = require(doc, key);
  try {
    return value.get<T>();
  } catch (const nlohmann::json::exception &) {
    throw InvalidArgument(std::string("field '") + key +
                          "' has the wrong type");
  }
}

int require_int(const Json &doc, const char *key, long long lo, long long hi) {
  const Json &value = require(doc, key);
  if (!value.is_number_integer())
    throw InvalidArgument(std::string("field '") + key +
                          "' must be an integer");
  const auto v = value.get<long long>();
  if (v < lo || v > hi)
    throw InvalidArgument(std::string("field '") + key + "' out of range");
  return static_cast<int>(v);
}

} // namespace

Json to_json(const Homomorphism &phi) {
  Json images = Json::array();
  for (const auto &p : phi.images())
    images.push_back(p.to_cycle_string());
  return Json{{"rank", phi.rank()},
              {"degree", phi.degree()},
              {"images", std::move(images)}};
}

Homomorphism hom_from_json(const Json &doc) {
  const int rank = require_int(doc, "rank", 1, 1 << 20);
  const int degree = require_int(doc, "degree", 1, 1 << 24);
  const auto texts = require_as<std::vector<std::string>>(doc, "images");
  if (texts.size() != static_cast<std::size_t>(rank))
    throw InvalidArgument("expected " + std::to_string(rank) +
                          " generator images, got " +
                          std::to_string(texts.size()));
  std::vector<Permutation> images;
  for (const auto &text : texts)
    images.push_back(
        Permutation::from_cycles(text, static_cast<std::size_t>(degree)));
  return Homomorphism(std::move(images));
}

Json to_json(const LabelledGraph &g, std::size_t basepoint) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  std::sort(edges.begin(), edges.end(), [](const Edge &a, const Edge &b) {
    return std::tie(a.label, a.src, a.dst) < std::tie(b.label, b.src, b.dst);
  });
  Json list = Json::array();
  for (const Edge &e : edges)
    list.push_back(Json::array({e.src, e.dst, e.label}));
  return Json{{"rank", g.rank()},
              {"vertices", g.vertex_count()},
              {"edges", std::move(list)},
              {"basepoint", basepoint}};
}

RootedGraph graph_from_json(const Json &doc) {
  const int rank = require_int(doc, "rank", 1, 1 << 20);
  const int vertices = require_int(doc, "vertices", 1, 1 << 24);
  int basepoint = 0;
  if (doc.contains("basepoint"))
    basepoint = require_int(doc, "basepoint", 0, vertices - 1);
  const auto triples =
      require_as<std::vector<std::vector<long long>>>(doc, "edges");
  std::vector<Edge> edges;
  for (const auto &t : triples) {
    if (t.size() != 3)
      throw InvalidArgument("each edge must be [src, dst, label]");
    if (t[0] < 0 || t[1] < 0 || t[0] >= vertices || t[1] >= vertices)
      throw InvalidArgument("edge endpoint outside the vertex set");
    edges.push_back({static_cast<std::size_t>(t[0]),
                     static_cast<std::size_t>(t[1]),
                     static_cast<int>(t[2])});
  }
  const GraphState state =
      has_duplicate_edges(edges) ? GraphState::Prefolded : GraphState::Valid;
  return {LabelledGraph(rank, static_cast<std::size_t>(vertices),
                        std::move(edges), state),
          static_cast<std::size_t>(basepoint)};
}

Json to_json(const BaseSurface &surface) {
  Json pairs = Json::array();
  for (const CuspPair &pair : surface.pairs())
    pairs.push_back(Json{{"id", pair.id},
                         {"base_length", pair.base_length_text},
                         {"a1", to_string(pair.lollipop_1)},
                         {"a2", to_string(pair.lollipop_2)}});
  return Json{{"genus", surface.genus()},
              {"punctures", surface.punctures()},
              {"pairs", std::move(pairs)}};
}

BaseSurface surface_from_json(const Json &doc) {
  const int genus = require_int(doc, "genus", 0, 1 << 20);
  const int punctures = require_int(doc, "punctures", 1, 1 << 20);
  const int rank = 2 * genus + punctures - 1;
  const Json &list = require(doc, "pairs");
  if (!list.is_array())
    throw InvalidArgument("field 'pairs' must be an array");
  std::vector<CuspPair> pairs;
  for (const Json &entry : list) {
    const auto length_text = require_as<std::string>(entry, "base_length");
    pairs.push_back(CuspPair{
        require_as<std::string>(entry, "id"), parse_decimal(length_text),
        length_text, parse_word(require_as<std::string>(entry, "a1"), rank),
        parse_word(require_as<std::string>(entry, "a2"), rank)});
  }
  return BaseSurface(genus, punctures, std::move(pairs));
}

double parse_decimal(std::string_view text) {
  std::size_t i = 0;
  std::size_t digits = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
    ++i, ++digits;
  if (i < text.size() && text[i] == '.') {
    ++i;
    std::size_t fraction = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      ++i, ++fraction;
    if (fraction == 0)
      throw ParseError("expected digits after '.'", i);
  }
  if (digits == 0 || i != text.size())
    throw ParseError("malformed decimal '" + std::string(text) + "'", i);
  double value = 0.0;
  std::from_chars(text.data(), text.data() + text.size(), value);
  return value;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
}

Json read_json_file(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw InvalidArgument("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str());
}

} // namespace tangle
