#include "gcmorse/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gcmorse/errors.hpp"

namespace gcmorse {

namespace {

std::vector<std::pair<int, int>> parse_edge_array(const nlohmann::json& arr,
                                                  const char* field) {
  if (!arr.is_array())
    throw InputError(std::string(field) + " must be an array of [i,j] pairs");
  std::vector<std::pair<int, int>> out;
  for (const auto& e : arr) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw InputError(std::string(field) + " entries must be [i,j] pairs");
    out.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return out;
}

}  // namespace

GraphInput parse_graph_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("JSON parse error: ") + e.what());
  }
  if (!j.is_object()) throw InputError("graph JSON must be an object");
  if (!j.contains("vertices") || !j["vertices"].is_number_integer())
    throw InputError("graph JSON needs an integer \"vertices\" field");
  if (!j.contains("edges"))
    throw InputError("graph JSON needs an \"edges\" field");

  GraphInput in;
  in.vertices = j["vertices"].get<int>();
  in.edges = parse_edge_array(j["edges"], "\"edges\"");

  if (j.contains("tree")) in.tree = parse_edge_array(j["tree"], "\"tree\"");
  if (j.contains("root")) {
    if (!j["root"].is_number_integer())
      throw InputError("\"root\" must be an integer vertex label");
    in.root = j["root"].get<int>();
  }
  if (j.contains("adjacency_order")) {
    const auto& a = j["adjacency_order"];
    if (!a.is_array())
      throw InputError("\"adjacency_order\" must be an array of arrays");
    std::vector<std::vector<int>> order;
    for (const auto& lst : a) {
      if (!lst.is_array())
        throw InputError("\"adjacency_order\" must be an array of arrays");
      std::vector<int> nbrs;
      for (const auto& x : lst) {
        if (!x.is_number_integer())
          throw InputError("\"adjacency_order\" entries must be integers");
        nbrs.push_back(x.get<int>());
      }
      order.push_back(std::move(nbrs));
    }
    in.adjacency_order = std::move(order);
  }
  return in;
}

GraphInput parse_edge_list(const std::string& text) {
  GraphInput in;
  std::istringstream stream(text);
  std::string line;
  int line_no = 0;
  int max_label = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    int i = 0, j = 0;
    std::string extra;
    if (!(ls >> i >> j))
      throw InputError("edge list line " + std::to_string(line_no) +
                       ": expected \"i j\"");
    if (ls >> extra)
      throw InputError("edge list line " + std::to_string(line_no) +
                       ": trailing content '" + extra + "'");
    if (i < 1 || j < 1)
      throw InputError("edge list line " + std::to_string(line_no) +
                       ": labels must be >= 1");
    in.edges.emplace_back(i, j);
    max_label = std::max({max_label, i, j});
  }
  if (in.edges.empty())
    throw InputError("edge list contains no edges");
  in.vertices = max_label;
  return in;
}

GraphInput load_graph_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw InputError("cannot open input file: " + path);
  std::stringstream buffer;
  buffer << file.rdbuf();
  std::string text = buffer.str();

  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos)
    throw InputError("input file is empty: " + path);
  if (text[first] == '{') return parse_graph_json(text);
  return parse_edge_list(text);
}

}  // namespace gcmorse
