#include "tonelab/coloring.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "text_records.hpp"
#include "tonelab/errors.hpp"

namespace tonelab {

ColorMask to_mask(std::span<const Color> colors) {
  ColorMask m;
  for (Color c : colors) m.set(static_cast<std::size_t>(c));
  return m;
}

ColorSet from_mask(const ColorMask& mask) {
  ColorSet out;
  for (int c = 0; c < kMaskWidth; ++c) {
    if (mask.test(c)) out.push_back(c);
  }
  return out;
}

ToneColoring::ToneColoring(int t, int palette_size, std::vector<ColorSet> sets)
    : t_(t), palette_size_(palette_size), sets_(std::move(sets)) {
  if (t < 1) throw std::invalid_argument("tone parameter t must be >= 1");
  if (palette_size < 0) throw std::invalid_argument("negative palette size");
  for (std::size_t v = 0; v < sets_.size(); ++v) {
    auto& s = sets_[v];
    std::sort(s.begin(), s.end());
    const std::string where = "vertex " + std::to_string(v);
    if (static_cast<int>(s.size()) != t) {
      throw std::invalid_argument(where + " has " + std::to_string(s.size()) +
                                  " colors, expected " + std::to_string(t));
    }
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
      throw std::invalid_argument(where + " repeats a color");
    }
    if (s.front() < 0 || s.back() >= palette_size) {
      throw std::invalid_argument(where + " uses a color outside the palette of size " +
                                  std::to_string(palette_size));
    }
  }
  if (palette_size <= kMaskWidth) {
    masks_.reserve(sets_.size());
    for (const auto& s : sets_) masks_.push_back(to_mask(s));
  }
}

int ToneColoring::shared(Vertex u, Vertex v) const {
  if (has_masks()) return static_cast<int>((masks_[u] & masks_[v]).count());
  const auto& a = sets_.at(u);
  const auto& b = sets_.at(v);
  int count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

VerificationReport verify(const DistMatrix& dist, const ToneColoring& coloring) {
  if (dist.order() != coloring.num_vertices()) {
    throw std::invalid_argument("coloring covers " + std::to_string(coloring.num_vertices()) +
                                " vertices, graph has " + std::to_string(dist.order()));
  }
  if (dist.cap() < coloring.t()) throw std::invalid_argument("distance cap below t");
  VerificationReport report;
  const int n = dist.order();
  const int t = coloring.t();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const int d = dist.at(u, v);
      // Sets have size t, so pairs farther than t can never violate.
      if (d > t) continue;
      const int s = coloring.shared(u, v);
      if (s >= d) report.violations.push_back({u, v, d, s});
    }
  }
  report.valid = report.violations.empty();
  report.colors_used = colors_used(coloring);
  return report;
}

VerificationReport verify(const Graph& g, const ToneColoring& coloring) {
  if (g.order() != coloring.num_vertices()) {
    throw std::invalid_argument("coloring covers " + std::to_string(coloring.num_vertices()) +
                                " vertices, graph has " + std::to_string(g.order()));
  }
  return verify(all_pairs_distances_capped(g, coloring.t()), coloring);
}

int colors_used(const ToneColoring& coloring) {
  std::vector<char> seen(coloring.palette_size(), 0);
  int count = 0;
  for (const auto& s : coloring.sets()) {
    for (Color c : s) {
      if (!seen[c]) {
        seen[c] = 1;
        ++count;
      }
    }
  }
  return count;
}

ToneColoring permute_colors(const ToneColoring& coloring, std::span<const Color> perm) {
  if (static_cast<int>(perm.size()) != coloring.palette_size()) {
    throw std::invalid_argument("permutation size must equal palette size");
  }
  std::vector<char> seen(perm.size(), 0);
  for (Color c : perm) {
    if (c < 0 || c >= coloring.palette_size() || seen[c]) {
      throw std::invalid_argument("color map is not a permutation");
    }
    seen[c] = 1;
  }
  std::vector<ColorSet> sets = coloring.sets();
  for (auto& s : sets) {
    for (auto& c : s) c = perm[c];
  }
  return ToneColoring(coloring.t(), coloring.palette_size(), std::move(sets));
}

ToneColoring restrict_to(const ToneColoring& coloring, std::span<const Vertex> keep) {
  std::vector<ColorSet> sets;
  sets.reserve(keep.size());
  for (Vertex v : keep) sets.push_back(coloring.colors(v));
  return ToneColoring(coloring.t(), coloring.palette_size(), std::move(sets));
}

ToneColoring compact_palette(const ToneColoring& coloring) {
  std::vector<Color> remap(coloring.palette_size(), -1);
  for (const auto& s : coloring.sets()) {
    for (Color c : s) remap[c] = 0;
  }
  int next = 0;
  for (auto& r : remap) {
    if (r == 0) r = next++;
  }
  std::vector<ColorSet> sets = coloring.sets();
  for (auto& s : sets) {
    for (auto& c : s) c = remap[c];
  }
  return ToneColoring(coloring.t(), next, std::move(sets));
}

ToneColoring read_coloring(std::istream& in) {
  detail::RecordReader reader(in);
  detail::Record rec;
  if (!reader.next(rec)) throw ParseError("empty coloring file", 0);
  if (rec.tokens.size() != 2) throw ParseError("header must be 't palette_size'", rec.line);
  const auto t = detail::parse_int(rec.tokens[0], rec.line);
  const auto palette = detail::parse_int(rec.tokens[1], rec.line);
  if (t < 1) throw ParseError("t must be >= 1", rec.line);
  if (palette < t) throw ParseError("palette smaller than t", rec.line);
  std::vector<ColorSet> sets;
  while (reader.next(rec)) {
    auto head = rec.tokens.front();
    if (head.size() < 2 || head.back() != ':') {
      throw ParseError("record must start with 'v:'", rec.line);
    }
    const auto v = detail::parse_int(head.substr(0, head.size() - 1), rec.line);
    if (v != static_cast<std::int64_t>(sets.size())) {
      throw ParseError("expected vertex " + std::to_string(sets.size()), rec.line);
    }
    if (static_cast<std::int64_t>(rec.tokens.size()) != t + 1) {
      throw ParseError("vertex " + std::to_string(v) + " must list exactly t colors", rec.line);
    }
    ColorSet s;
    for (std::size_t i = 1; i < rec.tokens.size(); ++i) {
      const auto c = detail::parse_int(rec.tokens[i], rec.line);
      if (c < 0 || c >= palette) throw ParseError("color outside palette", rec.line);
      if (!s.empty() && c <= s.back()) throw ParseError("colors must be strictly ascending", rec.line);
      s.push_back(static_cast<Color>(c));
    }
    sets.push_back(std::move(s));
  }
  return ToneColoring(static_cast<int>(t), static_cast<int>(palette), std::move(sets));
}

ToneColoring read_coloring_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0);
  return read_coloring(in);
}

void write_coloring(std::ostream& out, const ToneColoring& coloring) {
  out << coloring.t() << ' ' << coloring.palette_size() << '\n';
  for (Vertex v = 0; v < coloring.num_vertices(); ++v) {
    out << v << ':';
    for (Color c : coloring.colors(v)) out << ' ' << c;
    out << '\n';
  }
}

void write_coloring_file(const std::string& path, const ToneColoring& coloring) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_coloring(out, coloring);
}

std::string to_string(const ToneColoring& coloring) {
  std::ostringstream out;
  write_coloring(out, coloring);
  return out.str();
}

}  // namespace tonelab
