#include "surfsing/document.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "surfsing/error.hpp"

namespace surfsing {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

bool valid_id(std::string_view id) {
  if (id.empty()) return false;
  for (char c : id) {
    const bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' ||
                    c == '-' || c == '.';
    if (!ok) return false;
  }
  return true;
}

int parse_int(std::string_view text, std::size_t line, const std::string& field) {
  int value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text[0] == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw ParseError(line, field, field + ": expected an integer, got '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

GraphDocument parse_document(std::string_view text) {
  std::optional<std::string> name;
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::vector<BoundaryIncidence> boundary;
  std::map<std::string, std::size_t, std::less<>> vertex_line;
  std::set<std::pair<std::string, std::string>> edge_seen;
  std::set<std::string, std::less<>> boundary_seen;

  auto require_vertex = [&](std::string_view id, std::size_t line, const std::string& field) {
    if (!vertex_line.contains(id)) {
      throw ParseError(line, field, field + " references unknown vertex '" + std::string(id) + "'");
    }
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tok = split_ws(line);
    if (tok.empty()) continue;
    const std::string_view kw = tok[0];

    if (kw == "name") {
      if (tok.size() != 2) throw ParseError(line_no, "name", "name: expected exactly one token");
      if (name) throw ParseError(line_no, "name", "name given twice");
      name = std::string(tok[1]);
    } else if (kw == "vertex") {
      if (tok.size() != 3) throw ParseError(line_no, "vertex", "vertex: expected 'vertex <id> <self-intersection>'");
      if (!valid_id(tok[1])) throw ParseError(line_no, "vertex.id", "vertex: invalid id '" + std::string(tok[1]) + "'");
      if (auto it = vertex_line.find(tok[1]); it != vertex_line.end()) {
        throw ParseError(line_no, "vertex.id",
                         "duplicate vertex '" + std::string(tok[1]) + "' (first on line " + std::to_string(it->second) + ")");
      }
      const int self = parse_int(tok[2], line_no, "vertex.self");
      if (self > -1) {
        throw ParseError(line_no, "vertex.self",
                         "vertex " + std::string(tok[1]) + ": self-intersection " + std::to_string(self) + " must be <= -1");
      }
      vertex_line.emplace(std::string(tok[1]), line_no);
      vertices.push_back({std::string(tok[1]), self});
    } else if (kw == "edge") {
      if (tok.size() != 3) throw ParseError(line_no, "edge", "edge: expected 'edge <id> <id>'");
      require_vertex(tok[1], line_no, "edge");
      require_vertex(tok[2], line_no, "edge");
      if (tok[1] == tok[2]) throw ParseError(line_no, "edge", "edge: self-loop on '" + std::string(tok[1]) + "'");
      std::string lo(tok[1]);
      std::string hi(tok[2]);
      if (hi < lo) std::swap(lo, hi);
      if (!edge_seen.emplace(std::move(lo), std::move(hi)).second) {
        throw ParseError(line_no, "edge",
                         "edge " + std::string(tok[1]) + " " + std::string(tok[2]) +
                             " repeated (curves meet transversally in one point)");
      }
      edges.push_back({std::string(tok[1]), std::string(tok[2])});
    } else if (kw == "boundary") {
      if (tok.size() != 3) throw ParseError(line_no, "boundary", "boundary: expected 'boundary <id> <multiplicity>'");
      require_vertex(tok[1], line_no, "boundary");
      const int mult = parse_int(tok[2], line_no, "boundary.mult");
      if (mult < 0) throw ParseError(line_no, "boundary.mult", "boundary: multiplicity must be >= 0");
      if (!boundary_seen.emplace(tok[1]).second) {
        throw ParseError(line_no, "boundary", "boundary for '" + std::string(tok[1]) + "' given twice");
      }
      if (mult > 0) boundary.push_back({std::string(tok[1]), mult});
    } else {
      throw ParseError(line_no, "keyword", "unknown keyword '" + std::string(kw) + "'");
    }
  }
  if (!name) throw ParseError(0, "name", "missing 'name' line");
  try {
    return GraphDocument{*name, ResolutionGraph(std::move(vertices), edges, boundary)};
  } catch (const ValidationError& e) {
    throw ParseError(0, e.element(), e.what());
  }
}

std::string serialize_document(const GraphDocument& doc) {
  std::ostringstream out;
  const auto& g = doc.graph;
  out << "name " << doc.name << '\n';
  for (const auto& v : g.vertices()) out << "vertex " << v.id << ' ' << v.self_int << '\n';
  for (const auto& [i, j] : g.edges()) out << "edge " << g.id(i) << ' ' << g.id(j) << '\n';
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.boundary(i) != 0) out << "boundary " << g.id(i) << ' ' << g.boundary(i) << '\n';
  }
  return out.str();
}

GraphDocument read_document_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "file", "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_document(buf.str());
  } catch (const ParseError& e) {
    throw e.in_source(path);
  }
}

}  // namespace surfsing
