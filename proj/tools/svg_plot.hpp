#ifndef SPECRANGE_TOOLS_SVG_PLOT_HPP
#define SPECRANGE_TOOLS_SVG_PLOT_HPP

#include <cstdio>
#include <string>
#include <vector>

// Self-contained scatter/polygon SVG for range plots: axes, unit circle,
// optional target circle, spectrum dots, range polygon.  Fixed 800x800
// viewBox; world coordinates are scaled by a single deterministic factor so
// reruns produce byte-identical files.
namespace svgplot {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

class RangePlot {
 public:
  RangePlot(double world_radius, bool target_circle, double target_radius)
      : world_(world_radius > 0 ? world_radius : 1.0),
        target_circle_(target_circle),
        target_radius_(target_radius) {}

  void set_polygon(std::vector<Point> hull) { hull_ = std::move(hull); }
  void set_dots(std::vector<Point> dots) { dots_ = std::move(dots); }

  std::string render() const {
    const double s = 360.0 / world_;  // world -> pixels, centered at (400, 400)
    auto px = [&](double x) { return fmt(400.0 + s * x); };
    auto py = [&](double y) { return fmt(400.0 - s * y); };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 800\">\n";
    out += "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";
    // axes
    out += "<line x1=\"0\" y1=\"400\" x2=\"800\" y2=\"400\" stroke=\"#cccccc\" "
           "stroke-width=\"1\"/>\n";
    out += "<line x1=\"400\" y1=\"0\" x2=\"400\" y2=\"800\" stroke=\"#cccccc\" "
           "stroke-width=\"1\"/>\n";
    // range polygon
    if (hull_.size() >= 3) {
      out += "<polygon points=\"";
      for (std::size_t i = 0; i < hull_.size(); ++i) {
        if (i) out += " ";
        out += px(hull_[i].x) + "," + py(hull_[i].y);
      }
      out += "\" fill=\"#3b4a6b\" fill-opacity=\"0.35\" stroke=\"#1f2a44\" "
             "stroke-width=\"1.5\"/>\n";
    }
    // unit circle
    out += "<circle cx=\"400\" cy=\"400\" r=\"" + fmt(s) +
           "\" fill=\"none\" stroke=\"#888888\" stroke-width=\"1\" "
           "stroke-dasharray=\"6,4\"/>\n";
    if (target_circle_) {
      out += "<circle cx=\"400\" cy=\"400\" r=\"" + fmt(s * target_radius_) +
             "\" fill=\"none\" stroke=\"#b03030\" stroke-width=\"1.5\" "
             "stroke-dasharray=\"2,3\"/>\n";
    }
    // spectrum dots
    for (const Point& p : dots_) {
      out += "<circle cx=\"" + px(p.x) + "\" cy=\"" + py(p.y) +
             "\" r=\"2\" fill=\"black\"/>\n";
    }
    out += "</svg>\n";
    return out;
  }

 private:
  double world_;
  bool target_circle_;
  double target_radius_;
  std::vector<Point> hull_;
  std::vector<Point> dots_;
};

}  // namespace svgplot

#endif
