#include "cript/realizer.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cript/code_model.hpp"
#include "cript/error.hpp"

namespace cript {

namespace {

constexpr double kMaxSlope = 2.0;  // sideways units per unit of height

}  // namespace

PlanarBoundary realize(const CriptCode& code, const RealizeOptions& options) {
  if (!(options.band_height > 0.0) || !(options.letter_spacing > 0.0))
    throw std::invalid_argument("band height and letter spacing must be positive");

  PlanarBoundary out;
  if (code.empty()) return out;

  auto report = validate(code);
  if (!report.valid()) throw InvalidCodeError(std::move(report));

  const double bh = options.band_height;
  const double sp = options.letter_spacing;
  const double lead = 0.25 * bh;

  // Band k lies between strings k and k+1; its height depends on how far
  // the widest contact across it has to travel sideways.
  const auto contacts = contact_pairs(code).pairs;
  std::vector<double> drift(code.strings.size(), 0.0);
  for (const auto& [a, b] : contacts) {
    const double dx = std::abs(a.position - b.position) * sp;
    drift[static_cast<std::size_t>(a.string_index)] = std::max(drift[static_cast<std::size_t>(a.string_index)], dx);
  }
  out.levels.resize(code.strings.size());
  out.levels[0] = 0.0;
  for (std::size_t k = 0; k + 1 < code.strings.size(); ++k) {
    const double needed = 2.0 * lead + drift[k] / kMaxSlope;
    const double height = bh * std::max(1.0, std::ceil(needed / bh));
    out.levels[k + 1] = out.levels[k] - height;
  }

  auto at = [&](LetterRef r) {
    return Point{r.position * sp, out.levels[static_cast<std::size_t>(r.string_index)]};
  };

  for (const auto& cycle : boundary_curves(code)) {
    Polyline line;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const LetterRef a = cycle[i];
      const LetterRef b = cycle[(i + 1) % cycle.size()];
      const Point pa = at(a);
      const Point pb = at(b);
      line.push_back(pa);
      if (a.string_index == b.string_index) continue;  // conjugate: straight along the level
      const double dir = a.string_index < b.string_index ? -1.0 : 1.0;
      line.push_back({pa.x, pa.y + dir * lead});
      line.push_back({pb.x, pb.y - dir * lead});
    }
    out.curves.push_back(std::move(line));
  }
  return out;
}

namespace {

struct Segment {
  Point a, b;
  int curve;
  int index;  // position of `a` within its curve
};

double cross(Point o, Point a, Point b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

int sign(double v) { return (v > 0) - (v < 0); }

bool on_segment(Point p, Point a, Point b) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

bool intersect(const Segment& s, const Segment& t) {
  const int d1 = sign(cross(t.a, t.b, s.a));
  const int d2 = sign(cross(t.a, t.b, s.b));
  const int d3 = sign(cross(s.a, s.b, t.a));
  const int d4 = sign(cross(s.a, s.b, t.b));
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  if (d1 == 0 && on_segment(s.a, t.a, t.b)) return true;
  if (d2 == 0 && on_segment(s.b, t.a, t.b)) return true;
  if (d3 == 0 && on_segment(t.a, s.a, s.b)) return true;
  if (d4 == 0 && on_segment(t.b, s.a, s.b)) return true;
  return false;
}

/// Neighbouring segments of one curve share a vertex; they may touch only there.
bool only_share_vertex(const Segment& s, const Segment& t, std::size_t curve_size) {
  const std::size_t n = curve_size;
  Point shared;
  Point s_other, t_other;
  if ((static_cast<std::size_t>(s.index) + 1) % n == static_cast<std::size_t>(t.index)) {
    shared = s.b, s_other = s.a, t_other = t.b;
  } else if ((static_cast<std::size_t>(t.index) + 1) % n == static_cast<std::size_t>(s.index)) {
    shared = s.a, s_other = s.b, t_other = t.a;
  } else {
    return false;
  }
  // Collinear and pointing the same way means they overlap beyond the vertex.
  if (sign(cross(shared, s_other, t_other)) != 0) return true;
  const double dot = (s_other.x - shared.x) * (t_other.x - shared.x) + (s_other.y - shared.y) * (t_other.y - shared.y);
  return dot < 0;
}

std::vector<Segment> segments_of(const PlanarBoundary& p) {
  std::vector<Segment> segs;
  for (std::size_t c = 0; c < p.curves.size(); ++c) {
    const auto& line = p.curves[c];
    for (std::size_t i = 0; i < line.size(); ++i)
      segs.push_back({line[i], line[(i + 1) % line.size()], static_cast<int>(c), static_cast<int>(i)});
  }
  return segs;
}

}  // namespace

void check_simple(const PlanarBoundary& p) {
  for (std::size_t c = 0; c < p.curves.size(); ++c) {
    const auto& line = p.curves[c];
    if (line.size() < 3) throw GeometryError("curve " + std::to_string(c) + " has fewer than 3 vertices");
    for (std::size_t i = 0; i < line.size(); ++i)
      if (line[i] == line[(i + 1) % line.size()])
        throw GeometryError("curve " + std::to_string(c) + " repeats a vertex");
  }

  auto segs = segments_of(p);
  std::sort(segs.begin(), segs.end(), [](const Segment& s, const Segment& t) {
    return std::min(s.a.y, s.b.y) < std::min(t.a.y, t.b.y);
  });
  // Sweep upwards; compare only segments whose y-ranges overlap.
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const Segment& s = segs[i];
    const double top = std::max(s.a.y, s.b.y);
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      const Segment& t = segs[j];
      if (std::min(t.a.y, t.b.y) > top) break;
      if (std::max(std::min(s.a.x, s.b.x), std::min(t.a.x, t.b.x)) >
          std::min(std::max(s.a.x, s.b.x), std::max(t.a.x, t.b.x)))
        continue;
      if (!intersect(s, t)) continue;
      if (s.curve == t.curve && only_share_vertex(s, t, p.curves[static_cast<std::size_t>(s.curve)].size()))
        continue;
      throw GeometryError("curves " + std::to_string(s.curve) + " and " + std::to_string(t.curve) +
                          " intersect near (" + std::to_string(s.a.x) + ", " + std::to_string(s.a.y) + ")");
    }
  }
}

namespace {

/// Pixel grid placement: pixel (r, c) has its centre at
/// x = (x0 + c + 0.5) / ppu, y = (y0 - r - 0.5) / ppu.
struct Grid {
  double ppu;
  double x0, y0;
  int width, height;

  double px(double x) const { return x * ppu - x0; }
  double py(double y) const { return y0 - y * ppu; }
};

Grid grid_for(const PlanarBoundary& p, double ppu) {
  if (!(ppu > 0.0)) throw std::invalid_argument("pixels per unit must be positive");
  bool any = false;
  double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  for (const auto& line : p.curves) {
    for (const auto& v : line) {
      if (!any) {
        xmin = xmax = v.x;
        ymin = ymax = v.y;
        any = true;
      }
      xmin = std::min(xmin, v.x), xmax = std::max(xmax, v.x);
      ymin = std::min(ymin, v.y), ymax = std::max(ymax, v.y);
    }
  }
  if (!any) return {ppu, -1.0, 1.0, 2, 2};
  Grid g{ppu, std::floor(xmin * ppu) - 1.0, std::ceil(ymax * ppu) + 1.0, 0, 0};
  g.width = static_cast<int>(std::ceil(xmax * ppu) - g.x0) + 1;
  g.height = static_cast<int>(g.y0 - std::floor(ymin * ppu)) + 1;
  return g;
}

struct PixelEdge {
  double xa, ya, xb, yb;  // pixel coordinates, ya < yb
};

std::vector<PixelEdge> pixel_edges(const PlanarBoundary& p, const Grid& g) {
  std::vector<PixelEdge> edges;
  for (const auto& line : p.curves) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      const Point a = line[i];
      const Point b = line[(i + 1) % line.size()];
      PixelEdge e{g.px(a.x), g.py(a.y), g.px(b.x), g.py(b.y)};
      if (e.ya == e.yb) continue;  // horizontal edges never cross a scanline
      if (e.ya > e.yb) std::swap(e.xa, e.xb), std::swap(e.ya, e.yb);
      edges.push_back(e);
    }
  }
  return edges;
}

/// Crossing of the horizontal line at `y` with an edge spanning [ya, yb).
double crossing_x(const PixelEdge& e, double y) {
  return e.xa + (e.xb - e.xa) * (y - e.ya) / (e.yb - e.ya);
}

void fill_row(Bitmap& b, int r, std::vector<double>& xs) {
  std::sort(xs.begin(), xs.end());
  for (std::size_t k = 0; k + 1 < xs.size(); k += 2) {
    // Centres c + 0.5 in [xs[k], xs[k+1]) are inside.
    const int begin = std::max(0, static_cast<int>(std::ceil(xs[k] - 0.5)));
    const int end = std::min(b.width(), static_cast<int>(std::ceil(xs[k + 1] - 0.5)));
    for (int c = begin; c < end; ++c) b.set(r, c, true);
  }
}

}  // namespace

Bitmap rasterize(const PlanarBoundary& p, double pixels_per_unit) {
  check_simple(p);
  const Grid g = grid_for(p, pixels_per_unit);
  Bitmap out(g.width, g.height);
  const auto edges = pixel_edges(p, g);

  // Bucket every edge under the rows whose centres it spans.
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(g.height));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const int first = std::max(0, static_cast<int>(std::ceil(edges[i].ya - 0.5)));
    const int last = std::min(g.height, static_cast<int>(std::ceil(edges[i].yb - 0.5)));
    for (int r = first; r < last; ++r) rows[static_cast<std::size_t>(r)].push_back(static_cast<int>(i));
  }

#pragma omp parallel for schedule(dynamic, 32)
  for (int r = 0; r < g.height; ++r) {
    const double y = r + 0.5;
    std::vector<double> xs;
    xs.reserve(rows[static_cast<std::size_t>(r)].size());
    for (int i : rows[static_cast<std::size_t>(r)]) xs.push_back(crossing_x(edges[static_cast<std::size_t>(i)], y));
    fill_row(out, r, xs);
  }
  return out;
}

Bitmap rasterize_reference(const PlanarBoundary& p, double pixels_per_unit) {
  check_simple(p);
  const Grid g = grid_for(p, pixels_per_unit);
  Bitmap out(g.width, g.height);
  const auto edges = pixel_edges(p, g);
  for (int r = 0; r < g.height; ++r) {
    const double y = r + 0.5;
    for (int c = 0; c < g.width; ++c) {
      const double x = c + 0.5;
      int right = 0;
      for (const auto& e : edges)
        if (e.ya <= y && y < e.yb && crossing_x(e, y) > x) ++right;
      out.set(r, c, right % 2 == 1);
    }
  }
  return out;
}

namespace {

std::string num(double v) {
  std::ostringstream s;
  s.precision(10);
  s << (v == 0.0 ? 0.0 : v);
  return s.str();
}

}  // namespace

std::string to_svg(const PlanarBoundary& p) {
  double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  bool any = false;
  for (const auto& line : p.curves)
    for (const auto& v : line) {
      if (!any) xmin = xmax = v.x, ymin = ymax = v.y, any = true;
      xmin = std::min(xmin, v.x), xmax = std::max(xmax, v.x);
      ymin = std::min(ymin, v.y), ymax = std::max(ymax, v.y);
    }
  const double margin = 1.0;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(xmin - margin) << ' '
      << num(-ymax - margin) << ' ' << num(xmax - xmin + 2 * margin) << ' '
      << num(ymax - ymin + 2 * margin) << "\">\n";
  if (any) {
    out << "  <path fill=\"black\" fill-rule=\"evenodd\" d=\"";
    for (std::size_t c = 0; c < p.curves.size(); ++c) {
      if (c > 0) out << ' ';
      const auto& line = p.curves[c];
      for (std::size_t i = 0; i < line.size(); ++i)
        out << (i == 0 ? "M" : " L") << num(line[i].x) << ' ' << num(-line[i].y);
      out << " Z";
    }
    out << "\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace cript
