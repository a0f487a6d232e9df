#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coev/graph.hpp"
#include "coev/layout.hpp"

namespace coev {

enum class RenderMode { Init, Crossover, Mutation };

std::string to_string(RenderMode m);

// Fixed drawing parameters. Init and Crossover fill every drawn node with the
// highlight color; Mutation fills solution nodes with the highlight color and
// the rest white. Init and Mutation label all nodes, Crossover draws (and
// labels) the solution nodes only.
struct RenderSpec {
  int canvas_width = 1200;
  int canvas_height = 1200;
  double node_diameter = 35.0;
  double label_size = 22.0;
  std::string highlight_color = "#2F7FC1";
  std::string plain_color = "#FFFFFF";
  RenderMode mode = RenderMode::Init;
  double margin = 80.0;
};

struct Rgb {
  std::uint8_t r = 255, g = 255, b = 255;
  bool operator==(const Rgb&) const = default;
};

Rgb parse_color(const std::string& hex);

class Raster {
 public:
  Raster(int width, int height, Rgb fill = {255, 255, 255});
  int width() const { return width_; }
  int height() const { return height_; }
  Rgb at(int x, int y) const;
  void set(int x, int y, Rgb c);
  const std::vector<std::uint8_t>& bytes() const { return pixels_; }
  bool operator==(const Raster&) const = default;

 private:
  int width_, height_;
  std::vector<std::uint8_t> pixels_;  // RGB8 row-major
};

// Invertible affine map from layout coordinates to canvas pixels.
struct CanvasTransform {
  double sx = 1.0, ox = 0.0, sy = 1.0, oy = 0.0;
  std::pair<double, double> apply(double x, double y) const {
    return {x * sx + ox, y * sy + oy};
  }
  std::pair<double, double> invert(double px, double py) const {
    return {(px - ox) / sx, (py - oy) / sy};
  }
};

struct RenderedView {
  Positions positions;  // layout coordinates by dense node index
  CanvasTransform transform;
  LayoutKind layout;
  RenderSpec spec;
  std::vector<NodeId> highlighted;  // sorted
  std::string svg;
  Raster raster{1, 1};

  std::vector<std::uint8_t> png() const;
  std::pair<double, double> canvas_position(const Graph& g, NodeId v) const;
};

RenderedView render(const Graph& g, const Positions& positions, const RenderSpec& spec,
                    const std::vector<NodeId>& highlighted, const LayoutKind& layout);

// Layout + render in one step.
RenderedView render_graph(const Graph& g, const LayoutKind& layout, const RenderSpec& spec,
                          const std::vector<NodeId>& highlighted);

std::vector<std::uint8_t> encode_png(const Raster& raster);
// Decodes PNGs produced by encode_png (8-bit RGB, filter 0 rows).
Raster decode_png(const std::vector<std::uint8_t>& bytes);

void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes);
void write_file(const std::string& path, const std::string& text);
void write_positions_csv(const Graph& g, const RenderedView& view, const std::string& path);

}  // namespace coev
