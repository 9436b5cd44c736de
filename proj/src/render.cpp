#include <aptile/render.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace aptile {

namespace {

const char* kPalette[] = {"#4878a8", "#d9a441", "#7aa661", "#b05a5a", "#8a6fb0", "#5aa0a0"};
constexpr int kPaletteSize = 6;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

void open_svg(std::ostringstream& out, double width, double height) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\""
      << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height) << "\">\n";
}

void rect(std::ostringstream& out, double x, double y, double w, double h,
          const std::string& fill, double opacity = 1.0) {
  out << "  <rect x=\"" << fmt(x) << "\" y=\"" << fmt(y) << "\" width=\"" << fmt(w)
      << "\" height=\"" << fmt(h) << "\" fill=\"" << fill << "\" fill-opacity=\""
      << fmt(opacity) << "\" stroke=\"#202020\" stroke-width=\"0.5\"/>\n";
}

void line(std::ostringstream& out, double x1, double y1, double x2, double y2,
          const std::string& color, double width, bool dashed = false) {
  out << "  <line x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y1) << "\" x2=\"" << fmt(x2)
      << "\" y2=\"" << fmt(y2) << "\" stroke=\"" << color << "\" stroke-width=\"" << fmt(width)
      << "\"" << (dashed ? " stroke-dasharray=\"4 3\"" : "") << "/>\n";
}

void circle(std::ostringstream& out, double cx, double cy, double r, const std::string& fill) {
  out << "  <circle cx=\"" << fmt(cx) << "\" cy=\"" << fmt(cy) << "\" r=\"" << fmt(r)
      << "\" fill=\"" << fill << "\"/>\n";
}

}  // namespace

std::string render_tiling_svg(const Tiling& t, const QuadraticNumber& lo,
                              const QuadraticNumber& hi) {
  Patch w = window(t, lo, hi);
  const double scale = 48.0;
  const double margin = 12.0;
  const double strip_top = 22.0;
  const double strip_height = 36.0;
  const double x0 = w.lo().to_double();
  const double x1 = w.hi().to_double();
  const double width = (x1 - x0) * scale + 2 * margin;
  const double height = strip_top + strip_height + 22.0;

  std::ostringstream out;
  open_svg(out, width, height);
  for (const Tile& tile : w.tiles) {
    double x = (tile.left.to_double() - x0) * scale + margin;
    double len = tile.length.to_double() * scale;
    rect(out, x, strip_top, len, strip_height,
         kPalette[static_cast<std::size_t>(tile.label) % kPaletteSize]);
  }
  if (lo.sign() <= 0 && hi.sign() >= 0) {
    double ox = (0.0 - x0) * scale + margin;
    line(out, ox, strip_top - 12.0, ox, strip_top + strip_height + 12.0, "#c02020", 1.5);
    out << "  <text x=\"" << fmt(ox + 3.0) << "\" y=\"" << fmt(strip_top - 4.0)
        << "\" font-size=\"10\" fill=\"#c02020\">0</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_cps_svg(const CutProjectScheme& s, const QuadraticNumber& lo,
                           const QuadraticNumber& hi) {
  VertexSet vs = vertices_in_range(s, lo, hi);
  if (vs.points.size() < 2)
    throw std::invalid_argument("cps rendering needs a range containing two vertices");

  const double alpha = s.alpha.to_double();
  const double rho = s.rho.to_double();
  auto wint = window_interval(s);
  const double wlo = wint.first.to_double();
  const double whi = wint.second.to_double();

  // Sheared plane: a lattice point (i, j) is drawn at (x, y) = (i+j, j),
  // where acceptance reads "y between (x-1)*alpha + rho - whi and ... - wlo".
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  std::vector<std::pair<double, double>> stairs;
  for (const LatticePoint& p : vs.points) {
    double x = Int(p.i + p.j).get_d();
    double y = p.j.get_d();
    stairs.emplace_back(x, y);
    xmin = std::min(xmin, x), xmax = std::max(xmax, x);
    ymin = std::min(ymin, y), ymax = std::max(ymax, y);
  }
  xmin -= 1.0, xmax += 1.0, ymin -= 1.5, ymax += 1.5;

  const double scale = 34.0;
  const double margin = 16.0;
  const double lattice_h = (ymax - ymin) * scale;
  const double strip_gap = 34.0;
  const double tile_h = 22.0;
  const double width = (xmax - xmin) * scale + 2 * margin;
  const double height = lattice_h + strip_gap + tile_h + 2 * margin;
  auto X = [&](double x) { return (x - xmin) * scale + margin; };
  auto Y = [&](double y) { return (ymax - y) * scale + margin; };

  std::ostringstream out;
  open_svg(out, width, height);

  // Acceptance strip between the two window boundary lines.
  auto ytop = [&](double x) { return (x - 1.0) * alpha + rho - wlo; };
  auto ybot = [&](double x) { return (x - 1.0) * alpha + rho - whi; };
  out << "  <polygon points=\"" << fmt(X(xmin)) << "," << fmt(Y(ybot(xmin))) << " "
      << fmt(X(xmax)) << "," << fmt(Y(ybot(xmax))) << " " << fmt(X(xmax)) << ","
      << fmt(Y(ytop(xmax))) << " " << fmt(X(xmin)) << "," << fmt(Y(ytop(xmin)))
      << "\" fill=\"#4878a8\" fill-opacity=\"0.15\" stroke=\"none\"/>\n";
  line(out, X(xmin), Y(ytop(xmin)), X(xmax), Y(ytop(xmax)), "#305070", 1.0);
  line(out, X(xmin), Y(ybot(xmin)), X(xmax), Y(ybot(xmax)), "#305070", 1.0, true);

  // Lattice dots around the strip.
  for (long xi = static_cast<long>(std::ceil(xmin)); xi <= static_cast<long>(std::floor(xmax));
       ++xi) {
    long jc = static_cast<long>(std::floor(alpha * (xi - 1) + rho));
    for (long j = jc - 2; j <= jc + 2; ++j) {
      double y = static_cast<double>(j);
      if (y < ymin || y > ymax) continue;
      circle(out, X(static_cast<double>(xi)), Y(y), 1.6, "#808080");
    }
  }

  // Accepted staircase.
  for (std::size_t n = 0; n + 1 < stairs.size(); ++n) {
    line(out, X(stairs[n].first), Y(stairs[n].second), X(stairs[n + 1].first),
         Y(stairs[n + 1].second), "#c02020", 1.4);
  }
  for (const auto& p : stairs) circle(out, X(p.first), Y(p.second), 2.6, "#c02020");

  // Projected tiling at the physical scale 1/sqrt(1 + alpha^2).
  const double phys = 1.0 / std::sqrt(1.0 + alpha * alpha);
  Word gaps = gap_word(s, vs);
  const double ty = lattice_h + strip_gap + margin;
  double px0 = position(s, vs.points.front()).to_double();
  for (std::size_t n = 0; n + 1 < vs.points.size(); ++n) {
    double a = position(s, vs.points[n]).to_double();
    double b = position(s, vs.points[n + 1]).to_double();
    rect(out, X(xmin + 0.5) + (a - px0) * scale * phys, ty, (b - a) * scale * phys, tile_h,
         kPalette[static_cast<std::size_t>(gaps.symbols[n]) % kPaletteSize]);
  }
  if (lo.sign() <= 0 && hi.sign() > 0) {
    double ox = X(xmin + 0.5) + (0.0 - px0) * scale * phys;
    line(out, ox, ty - 8.0, ox, ty + tile_h + 8.0, "#c02020", 1.5);
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_ap_dot(const APGraph& g) {
  std::ostringstream out;
  out << "digraph approximant {\n";
  out << "  rankdir=LR;\n";
  out << "  label=\"" << (g.collared ? "collared" : "uncollared") << ", betti1 = " << betti1(g)
      << "\";\n";
  for (std::size_t v = 0; v < g.vertex_count; ++v) {
    out << "  v" << v << " [shape=circle, label=\"v" << v << "\"];\n";
  }
  for (const APEdge& e : g.edges) {
    out << "  v" << e.tail << " -> v" << e.head << " [label=\"";
    if (e.label.left >= 0) out << g.rule.alphabet[static_cast<std::size_t>(e.label.left)] << "|";
    out << g.rule.alphabet[static_cast<std::size_t>(e.label.core)];
    if (e.label.right >= 0) out << "|" << g.rule.alphabet[static_cast<std::size_t>(e.label.right)];
    out << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace aptile
