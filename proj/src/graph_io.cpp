#include "tonelab/graph_io.hpp"

#include <fstream>
#include <ostream>

#include "text_records.hpp"
#include "tonelab/errors.hpp"

namespace tonelab {

Graph read_graph(std::istream& in) {
  detail::RecordReader reader(in);
  detail::Record rec;
  if (!reader.next(rec)) throw ParseError("empty graph file", 0);
  if (rec.tokens.size() != 2) throw ParseError("header must be 'n m'", rec.line);
  const auto n = detail::parse_int(rec.tokens[0], rec.line);
  const auto m = detail::parse_int(rec.tokens[1], rec.line);
  if (n < 0 || m < 0) throw ParseError("negative count in header", rec.line);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::int64_t i = 0; i < m; ++i) {
    if (!reader.next(rec)) throw ParseError("expected " + std::to_string(m) + " edges", 0);
    if (rec.tokens.size() != 2) throw ParseError("edge record must be 'u v'", rec.line);
    const auto u = detail::parse_int(rec.tokens[0], rec.line);
    const auto v = detail::parse_int(rec.tokens[1], rec.line);
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("edge endpoint out of range", rec.line);
    if (u == v) throw ParseError("self-loop", rec.line);
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (reader.next(rec)) throw ParseError("trailing data after edge list", rec.line);
  try {
    return Graph(static_cast<int>(n), edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0);
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.num_edges() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_graph_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_graph(out, g);
}

}  // namespace tonelab
