#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gcmorse {

// A graph description as read from disk, before validation by Graph.
struct GraphInput {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
  std::optional<std::vector<std::vector<int>>> adjacency_order;
  std::optional<std::vector<std::pair<int, int>>> tree;
  std::optional<int> root;
};

// JSON object: {"vertices": N, "edges": [[i,j],...], "tree": [[i,j],...]?,
// "root": i?, "adjacency_order": [[...], ...]?}.  Throws InputError.
GraphInput parse_graph_json(const std::string& text);

// Plain text: one "i j" pair per line; blank lines and lines starting with
// '#' are ignored; vertex count = largest label.  Parse errors carry line
// numbers.
GraphInput parse_edge_list(const std::string& text);

// Reads a file and dispatches on content: JSON when the first non-space
// character is '{', edge list otherwise.
GraphInput load_graph_file(const std::string& path);

}  // namespace gcmorse
