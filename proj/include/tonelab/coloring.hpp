#pragma once

#include <bitset>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "tonelab/distances.hpp"
#include "tonelab/graph.hpp"

namespace tonelab {

using Color = int;
using ColorSet = std::vector<Color>;

inline constexpr int kMaskWidth = 128;
using ColorMask = std::bitset<kMaskWidth>;

ColorMask to_mask(std::span<const Color> colors);
ColorSet from_mask(const ColorMask& mask);

/// Assignment of t distinct colors from {0..palette_size-1} to every vertex.
///
/// Sets are kept sorted. When the palette fits in a ColorMask each set is
/// mirrored as a bitmask so pair intersections are a single popcount.
class ToneColoring {
 public:
  ToneColoring() = default;
  /// Throws std::invalid_argument unless every set has exactly t distinct
  /// in-palette colors. Sets are sorted on construction.
  ToneColoring(int t, int palette_size, std::vector<ColorSet> sets);

  int t() const noexcept { return t_; }
  int palette_size() const noexcept { return palette_size_; }
  int num_vertices() const noexcept { return static_cast<int>(sets_.size()); }

  const ColorSet& colors(Vertex v) const { return sets_.at(v); }
  const std::vector<ColorSet>& sets() const noexcept { return sets_; }

  bool has_masks() const noexcept { return !masks_.empty(); }
  const ColorMask& mask(Vertex v) const { return masks_.at(v); }

  /// |colors(u) ∩ colors(v)|.
  int shared(Vertex u, Vertex v) const;

  friend bool operator==(const ToneColoring& a, const ToneColoring& b) {
    return a.t_ == b.t_ && a.palette_size_ == b.palette_size_ && a.sets_ == b.sets_;
  }

 private:
  int t_ = 0;
  int palette_size_ = 0;
  std::vector<ColorSet> sets_;
  std::vector<ColorMask> masks_;
};

struct Violation {
  Vertex u;
  Vertex v;
  int distance;
  int shared;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct VerificationReport {
  bool valid = true;
  std::vector<Violation> violations;  // sorted by (u, v), u < v
  int colors_used = 0;
};

/// Checks |f(u) ∩ f(v)| < d(u, v) for every pair within distance t.
/// Throws std::invalid_argument when the coloring does not cover G exactly.
VerificationReport verify(const Graph& g, const ToneColoring& coloring);
/// Same, reusing distances computed with cap >= t.
VerificationReport verify(const DistMatrix& dist, const ToneColoring& coloring);

int colors_used(const ToneColoring& coloring);

/// Applies the color bijection `perm` (old index -> new index).
ToneColoring permute_colors(const ToneColoring& coloring, std::span<const Color> perm);
/// Coloring of the induced subgraph on `keep` (vertex i is keep[i]).
ToneColoring restrict_to(const ToneColoring& coloring, std::span<const Vertex> keep);
/// Compacts the palette to the colors in use, preserving their order.
ToneColoring compact_palette(const ToneColoring& coloring);

// Text format: `t palette_size`, then one record `v: c1 ... ct` per vertex
// in ascending vertex order with ascending colors.
ToneColoring read_coloring(std::istream& in);
ToneColoring read_coloring_file(const std::string& path);
void write_coloring(std::ostream& out, const ToneColoring& coloring);
void write_coloring_file(const std::string& path, const ToneColoring& coloring);
std::string to_string(const ToneColoring& coloring);

}  // namespace tonelab
