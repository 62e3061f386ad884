#include "trackzero/cli/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace tz {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

struct Canvas {
  double x0, y0, w, h, px;
  double sx(double x) const { return (x - x0) / w * px; }
  double sy(double y) const { return px - (y - y0) / h * px; }  // y axis up
};

void rect(std::ostringstream& out, const Canvas& c, const Box& b, const char* style) {
  const double l = c.sx(b.x.lo().get_d()), r = c.sx(b.x.hi().get_d());
  const double t = c.sy(b.y.hi().get_d()), btm = c.sy(b.y.lo().get_d());
  out << "<rect x=\"" << num(l) << "\" y=\"" << num(t) << "\" width=\"" << num(r - l) << "\" height=\""
      << num(btm - t) << "\" " << style << "/>\n";
}

}  // namespace

std::string render_svg(const VectorField& f, const IsolationResult& iso, const SvgOptions& opts) {
  const Box& region = iso.frame.region();
  const Canvas c{region.x.lo().get_d(), region.y.lo().get_d(), region.x.width().get_d(), region.y.width().get_d(),
                 double(opts.size)};
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << opts.size << "\" height=\""
      << opts.size << "\" viewBox=\"0 0 " << opts.size << " " << opts.size << "\">\n"
      << "<title>" << f.to_string() << "</title>\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << opts.size << "\" height=\"" << opts.size
      << "\" fill=\"white\" stroke=\"black\"/>\n";

  out << "<g id=\"blocks\">\n";
  for (const ZeroBlock& blk : iso.blocks) {
    for (const Cell& h : blk.halo) rect(out, c, blk.frame.cell_box(blk.frame.normalize(h)), "fill=\"#fde0c5\"");
    for (const Box& b : blk.boxes()) rect(out, c, b, blk.coarse ? "fill=\"#999999\"" : "fill=\"#d62728\"");
  }
  out << "</g>\n<g id=\"boundaries\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\">\n";
  for (const ZeroBlock& blk : iso.blocks) {
    if (blk.coarse) continue;
    for (const BoundaryLoop& loop : boundary_loops(blk))
      for (const Segment& s : loop.segments)
        out << "<line x1=\"" << num(c.sx(s.from.x.get_d())) << "\" y1=\"" << num(c.sy(s.from.y.get_d()))
            << "\" x2=\"" << num(c.sx(s.to.x.get_d())) << "\" y2=\"" << num(c.sy(s.to.y.get_d())) << "\"/>\n";
  }
  out << "</g>\n<g id=\"glyphs\" stroke=\"#444444\" stroke-width=\"1\">\n";
  const double cell = double(opts.size) / opts.glyphs;
  for (int i = 0; i < opts.glyphs; ++i)
    for (int j = 0; j < opts.glyphs; ++j) {
      const double x = c.x0 + (i + 0.5) * c.w / opts.glyphs, y = c.y0 + (j + 0.5) * c.h / opts.glyphs;
      const auto v = eval_double(f, x, y);
      const double n = std::hypot(v[0], v[1]);
      const double px = c.sx(x), py = c.sy(y);
      if (!(n > 0) || !std::isfinite(n)) {
        out << "<circle cx=\"" << num(px) << "\" cy=\"" << num(py) << "\" r=\"1.5\"/>\n";
        continue;
      }
      const double dx = v[0] / n * 0.4 * cell, dy = -v[1] / n * 0.4 * cell;
      out << "<line x1=\"" << num(px - dx) << "\" y1=\"" << num(py - dy) << "\" x2=\"" << num(px + dx) << "\" y2=\""
          << num(py + dy) << "\"/>\n"
          << "<circle cx=\"" << num(px + dx) << "\" cy=\"" << num(py + dy) << "\" r=\"1.5\" fill=\"#444444\"/>\n";
    }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace tz
