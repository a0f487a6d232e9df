#include "coev/render.hpp"

#include <zlib.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace coev {

std::string to_string(RenderMode m) {
  switch (m) {
    case RenderMode::Init: return "init";
    case RenderMode::Crossover: return "crossover";
    case RenderMode::Mutation: return "mutation";
  }
  return "init";
}

Rgb parse_color(const std::string& hex) {
  if (hex.size() != 7 || hex[0] != '#')
    throw std::invalid_argument("expected #RRGGBB color, got " + hex);
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw std::invalid_argument("bad hex digit");
  };
  auto byte = [&](int i) {
    return static_cast<std::uint8_t>(nibble(hex[i]) * 16 + nibble(hex[i + 1]));
  };
  return {byte(1), byte(3), byte(5)};
}

Raster::Raster(int width, int height, Rgb fill) : width_(width), height_(height) {
  pixels_.resize(static_cast<std::size_t>(width) * height * 3);
  for (std::size_t i = 0; i < pixels_.size(); i += 3) {
    pixels_[i] = fill.r;
    pixels_[i + 1] = fill.g;
    pixels_[i + 2] = fill.b;
  }
}

Rgb Raster::at(int x, int y) const {
  const std::size_t i = (static_cast<std::size_t>(y) * width_ + x) * 3;
  return {pixels_[i], pixels_[i + 1], pixels_[i + 2]};
}

void Raster::set(int x, int y, Rgb c) {
  if (x < 0 || y < 0 || x >= width_ || y >= height_) return;
  const std::size_t i = (static_cast<std::size_t>(y) * width_ + x) * 3;
  pixels_[i] = c.r;
  pixels_[i + 1] = c.g;
  pixels_[i + 2] = c.b;
}

namespace {

// 5x7 bitmaps for the decimal digits, row-major, MSB left.
constexpr std::uint8_t kDigitFont[10][7] = {
    {0x0E, 0x11, 0x13, 0x15, 0x19, 0x11, 0x0E},  // 0
    {0x04, 0x0C, 0x04, 0x04, 0x04, 0x04, 0x0E},  // 1
    {0x0E, 0x11, 0x01, 0x02, 0x04, 0x08, 0x1F},  // 2
    {0x1F, 0x02, 0x04, 0x02, 0x01, 0x11, 0x0E},  // 3
    {0x02, 0x06, 0x0A, 0x12, 0x1F, 0x02, 0x02},  // 4
    {0x1F, 0x10, 0x1E, 0x01, 0x01, 0x11, 0x0E},  // 5
    {0x06, 0x08, 0x10, 0x1E, 0x11, 0x11, 0x0E},  // 6
    {0x1F, 0x01, 0x02, 0x04, 0x08, 0x08, 0x08},  // 7
    {0x0E, 0x11, 0x11, 0x0E, 0x11, 0x11, 0x0E},  // 8
    {0x0E, 0x11, 0x11, 0x0F, 0x01, 0x02, 0x0C},  // 9
};

void draw_disc(Raster& img, double cx, double cy, double radius, Rgb fill, Rgb stroke,
               double stroke_width) {
  const double outer = radius + stroke_width;
  const int x0 = static_cast<int>(std::floor(cx - outer));
  const int x1 = static_cast<int>(std::ceil(cx + outer));
  const int y0 = static_cast<int>(std::floor(cy - outer));
  const int y1 = static_cast<int>(std::ceil(cy + outer));
  for (int y = y0; y <= y1; ++y) {
    for (int x = x0; x <= x1; ++x) {
      const double dx = x - cx, dy = y - cy;
      const double d = std::sqrt(dx * dx + dy * dy);
      if (d <= radius) img.set(x, y, fill);
      else if (d <= outer) img.set(x, y, stroke);
    }
  }
}

void draw_line(Raster& img, double x1, double y1, double x2, double y2, Rgb color) {
  const double dx = x2 - x1, dy = y2 - y1;
  const double len = std::max(1.0, std::sqrt(dx * dx + dy * dy));
  const int steps = static_cast<int>(len * 2.0);
  for (int s = 0; s <= steps; ++s) {
    const double t = static_cast<double>(s) / steps;
    img.set(static_cast<int>(std::lround(x1 + dx * t)),
            static_cast<int>(std::lround(y1 + dy * t)), color);
  }
}

void draw_label(Raster& img, double cx, double cy, const std::string& text,
                double label_size, Rgb color) {
  const int scale = std::max(1, static_cast<int>(std::lround(label_size / 7.0)));
  const int glyph_w = 5 * scale, glyph_h = 7 * scale, gap = scale;
  const int total_w = static_cast<int>(text.size()) * (glyph_w + gap) - gap;
  int px = static_cast<int>(std::lround(cx)) - total_w / 2;
  const int py = static_cast<int>(std::lround(cy)) - glyph_h / 2;
  for (char ch : text) {
    if (ch >= '0' && ch <= '9') {
      const auto& glyph = kDigitFont[ch - '0'];
      for (int row = 0; row < 7; ++row)
        for (int col = 0; col < 5; ++col)
          if (glyph[row] & (0x10 >> col))
            for (int sy = 0; sy < scale; ++sy)
              for (int sx = 0; sx < scale; ++sx)
                img.set(px + col * scale + sx, py + row * scale + sy, color);
    }
    px += glyph_w + gap;
  }
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

CanvasTransform fit_to_canvas(const Positions& pos, const RenderSpec& spec) {
  double minx = 1e300, miny = 1e300, maxx = -1e300, maxy = -1e300;
  for (const auto& [x, y] : pos) {
    minx = std::min(minx, x);
    maxx = std::max(maxx, x);
    miny = std::min(miny, y);
    maxy = std::max(maxy, y);
  }
  CanvasTransform t;
  const double usable_w = spec.canvas_width - 2.0 * spec.margin;
  const double usable_h = spec.canvas_height - 2.0 * spec.margin;
  const double span_x = maxx - minx, span_y = maxy - miny;
  t.sx = span_x > 1e-12 ? usable_w / span_x : 1.0;
  t.sy = span_y > 1e-12 ? usable_h / span_y : 1.0;
  t.ox = span_x > 1e-12 ? spec.margin - minx * t.sx
                        : spec.canvas_width / 2.0 - minx;
  t.oy = span_y > 1e-12 ? spec.margin - miny * t.sy
                        : spec.canvas_height / 2.0 - miny;
  return t;
}

}  // namespace

std::pair<double, double> RenderedView::canvas_position(const Graph& g, NodeId v) const {
  const auto& [x, y] = positions[g.index_of(v)];
  return transform.apply(x, y);
}

std::vector<std::uint8_t> RenderedView::png() const { return encode_png(raster); }

RenderedView render(const Graph& g, const Positions& positions, const RenderSpec& spec,
                    const std::vector<NodeId>& highlighted, const LayoutKind& layout) {
  if (positions.size() != g.node_count())
    throw std::invalid_argument("render: positions must cover every node");

  RenderedView view;
  view.positions = positions;
  view.layout = layout;
  view.spec = spec;
  view.highlighted = highlighted;
  std::sort(view.highlighted.begin(), view.highlighted.end());
  auto is_solution = [&](NodeId v) {
    return std::binary_search(view.highlighted.begin(), view.highlighted.end(), v);
  };

  view.transform = fit_to_canvas(positions, spec);
  const Rgb white{255, 255, 255};
  const Rgb black{0, 0, 0};
  const Rgb highlight = parse_color(spec.highlight_color);
  const Rgb plain = parse_color(spec.plain_color);
  view.raster = Raster(spec.canvas_width, spec.canvas_height, white);

  // Crossover images show the solution nodes only; the other modes show all.
  const bool solution_only = spec.mode == RenderMode::Crossover;
  auto drawn = [&](NodeId v) { return !solution_only || is_solution(v); };
  auto fill_of = [&](NodeId v) {
    if (spec.mode == RenderMode::Mutation) return is_solution(v) ? highlight : plain;
    return highlight;
  };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(spec.canvas_width) + "\" height=\"" +
         std::to_string(spec.canvas_height) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"#FFFFFF\"/>\n";

  for (const auto& [u, v] : g.edges()) {
    if (!drawn(u) || !drawn(v)) continue;
    auto [x1, y1] = view.canvas_position(g, u);
    auto [x2, y2] = view.canvas_position(g, v);
    draw_line(view.raster, x1, y1, x2, y2, black);
    svg += "<line x1=\"" + fmt(x1) + "\" y1=\"" + fmt(y1) + "\" x2=\"" + fmt(x2) +
           "\" y2=\"" + fmt(y2) + "\" stroke=\"#000000\" stroke-width=\"1.5\"/>\n";
  }

  const double radius = spec.node_diameter / 2.0;
  for (NodeId v : g.nodes()) {
    if (!drawn(v)) continue;
    auto [cx, cy] = view.canvas_position(g, v);
    const Rgb fill = fill_of(v);
    draw_disc(view.raster, cx, cy, radius, fill, black, 2.0);
    char color[8];
    std::snprintf(color, sizeof(color), "#%02X%02X%02X", fill.r, fill.g, fill.b);
    svg += "<circle cx=\"" + fmt(cx) + "\" cy=\"" + fmt(cy) + "\" r=\"" + fmt(radius) +
           "\" fill=\"" + color + "\" stroke=\"#000000\" stroke-width=\"2\"/>\n";
  }

  for (NodeId v : g.nodes()) {
    if (!drawn(v)) continue;
    auto [cx, cy] = view.canvas_position(g, v);
    const std::string label = std::to_string(v);
    draw_label(view.raster, cx, cy, label, spec.label_size, black);
    svg += "<text x=\"" + fmt(cx) + "\" y=\"" + fmt(cy) +
           "\" font-family=\"monospace\" font-size=\"" + fmt(spec.label_size) +
           "\" fill=\"#000000\" text-anchor=\"middle\" dominant-baseline=\"central\">" +
           label + "</text>\n";
  }
  svg += "</svg>\n";
  view.svg = std::move(svg);
  return view;
}

RenderedView render_graph(const Graph& g, const LayoutKind& layout, const RenderSpec& spec,
                          const std::vector<NodeId>& highlighted) {
  return render(g, compute_layout(g, layout), spec, highlighted, layout);
}

namespace {

void push_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 24));
  out.push_back(static_cast<std::uint8_t>(v >> 16));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v));
}

void push_chunk(std::vector<std::uint8_t>& out, const char type[4],
                const std::vector<std::uint8_t>& data) {
  push_u32(out, static_cast<std::uint32_t>(data.size()));
  const std::size_t crc_start = out.size();
  out.insert(out.end(), type, type + 4);
  out.insert(out.end(), data.begin(), data.end());
  const auto crc = crc32(0, out.data() + crc_start, static_cast<uInt>(out.size() - crc_start));
  push_u32(out, static_cast<std::uint32_t>(crc));
}

}  // namespace

std::vector<std::uint8_t> encode_png(const Raster& raster) {
  // Scanlines with filter byte 0.
  std::vector<std::uint8_t> raw;
  const std::size_t stride = static_cast<std::size_t>(raster.width()) * 3;
  raw.reserve((stride + 1) * raster.height());
  for (int y = 0; y < raster.height(); ++y) {
    raw.push_back(0);
    const auto* row = raster.bytes().data() + static_cast<std::size_t>(y) * stride;
    raw.insert(raw.end(), row, row + stride);
  }
  uLongf bound = compressBound(static_cast<uLong>(raw.size()));
  std::vector<std::uint8_t> compressed(bound);
  if (compress2(compressed.data(), &bound, raw.data(), static_cast<uLong>(raw.size()), 6) != Z_OK)
    throw std::runtime_error("png: deflate failed");
  compressed.resize(bound);

  std::vector<std::uint8_t> out{0x89, 'P', 'N', 'G', 0x0D, 0x0A, 0x1A, 0x0A};
  std::vector<std::uint8_t> ihdr;
  push_u32(ihdr, static_cast<std::uint32_t>(raster.width()));
  push_u32(ihdr, static_cast<std::uint32_t>(raster.height()));
  ihdr.push_back(8);  // bit depth
  ihdr.push_back(2);  // color type: truecolor
  ihdr.push_back(0);  // compression
  ihdr.push_back(0);  // filter
  ihdr.push_back(0);  // interlace
  push_chunk(out, "IHDR", ihdr);
  push_chunk(out, "IDAT", compressed);
  push_chunk(out, "IEND", {});
  return out;
}

Raster decode_png(const std::vector<std::uint8_t>& bytes) {
  auto read_u32 = [&](std::size_t at) {
    return (static_cast<std::uint32_t>(bytes[at]) << 24) |
           (static_cast<std::uint32_t>(bytes[at + 1]) << 16) |
           (static_cast<std::uint32_t>(bytes[at + 2]) << 8) |
           static_cast<std::uint32_t>(bytes[at + 3]);
  };
  if (bytes.size() < 8 || bytes[1] != 'P' || bytes[2] != 'N' || bytes[3] != 'G')
    throw std::runtime_error("png: bad signature");
  std::size_t at = 8;
  std::uint32_t width = 0, height = 0;
  std::vector<std::uint8_t> idat;
  while (at + 8 <= bytes.size()) {
    const auto len = read_u32(at);
    const std::string type(bytes.begin() + at + 4, bytes.begin() + at + 8);
    const std::size_t data = at + 8;
    if (type == "IHDR") {
      width = read_u32(data);
      height = read_u32(data + 4);
      if (bytes[data + 8] != 8 || bytes[data + 9] != 2)
        throw std::runtime_error("png: unsupported format");
    } else if (type == "IDAT") {
      idat.insert(idat.end(), bytes.begin() + data, bytes.begin() + data + len);
    }
    at = data + len + 4;
  }
  const std::size_t stride = static_cast<std::size_t>(width) * 3;
  uLongf raw_len = (stride + 1) * height;
  std::vector<std::uint8_t> raw(raw_len);
  if (uncompress(raw.data(), &raw_len, idat.data(), static_cast<uLong>(idat.size())) != Z_OK)
    throw std::runtime_error("png: inflate failed");

  Raster raster(static_cast<int>(width), static_cast<int>(height));
  for (std::uint32_t y = 0; y < height; ++y) {
    const auto* row = raw.data() + y * (stride + 1);
    if (row[0] != 0) throw std::runtime_error("png: unsupported filter");
    for (std::uint32_t x = 0; x < width; ++x)
      raster.set(static_cast<int>(x), static_cast<int>(y),
                 {row[1 + x * 3], row[2 + x * 3], row[3 + x * 3]});
  }
  return raster;
}

void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

void write_positions_csv(const Graph& g, const RenderedView& view, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "node,x,y\n";
  for (NodeId v : g.nodes()) {
    auto [x, y] = view.canvas_position(g, v);
    out << v << "," << x << "," << y << "\n";
  }
}

}  // namespace coev
