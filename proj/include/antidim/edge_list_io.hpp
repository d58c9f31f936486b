#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "antidim/graph.hpp"

namespace antidim {

/// Reads a plain edge list: one edge per line, the first two tokens are the
/// endpoints, tokens are separated by whitespace runs or a comma. Lines whose
/// first non-blank character is '#' are comments. Extra columns (weights,
/// timestamps) are ignored.
inline Graph read_edge_list(std::istream& in) {
  std::vector<std::pair<std::string, std::string>> pairs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::vector<std::string> tokens;
    std::string current;
    bool after_comma = false;
    for (char c : line) {
      if (c == ',' || c == ' ' || c == '\t' || c == '\r') {
        if (!current.empty()) {
          tokens.push_back(std::move(current));
          current.clear();
          after_comma = false;
        }
        if (c == ',') {
          if (after_comma || tokens.empty()) throw Error("malformed separator on line " + std::to_string(line_no));
          after_comma = true;
        }
      } else {
        current.push_back(c);
      }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    if (tokens.size() < 2) throw Error("line " + std::to_string(line_no) + ": expected two endpoints");
    pairs.emplace_back(std::move(tokens[0]), std::move(tokens[1]));
  }
  return from_edge_list(pairs);
}

inline Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read '" + path + "'");
  return read_edge_list(in);
}

/// Writes the graph in the format `read_edge_list` accepts, preceded by '#'
/// header lines with the order, size and provenance.
inline void write_edge_list(std::ostream& out, const Graph& g, std::string_view provenance) {
  out << "# n=" << g.order() << " m=" << g.size() << "\n";
  out << "# generator: " << provenance << "\n";
  for (auto [u, v] : g.edges()) out << g.label(u) << ' ' << g.label(v) << "\n";
}

/// Same vertices (by label) and same edges, regardless of index assignment.
inline bool same_labelled_graph(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<Vertex> to_b(a.order());
  for (Vertex v = 0; v < a.order(); ++v) {
    auto w = b.find_label(a.label(v));
    if (!w) return false;
    to_b[v] = *w;
  }
  for (auto [u, v] : a.edges())
    if (!b.adjacent(to_b[u], to_b[v])) return false;
  return true;
}

}  // namespace antidim
