#include "convex.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"

namespace specrange {

namespace {

inline double cross(const cx& o, const cx& a, const cx& b) {
  return (a.real() - o.real()) * (b.imag() - o.imag()) -
         (a.imag() - o.imag()) * (b.real() - o.real());
}

double point_scale(const std::vector<cx>& pts) {
  double s = 0.0;
  for (const cx& p : pts) s = std::max({s, std::abs(p.real()), std::abs(p.imag())});
  return std::max(s, 1e-300);
}

}  // namespace

ConvexPolygon convex_hull(std::vector<cx> points, double tol) {
  if (points.empty()) throw InvalidArgument("convex_hull: no points");
  const double scale = point_scale(points);
  const double merge = tol * scale;
  const double flat = tol * scale * scale;

  std::sort(points.begin(), points.end(), [](const cx& a, const cx& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  points.erase(std::unique(points.begin(), points.end(),
                           [&](const cx& a, const cx& b) {
                             return std::abs(a - b) <= merge;
                           }),
               points.end());

  ConvexPolygon out;
  const std::size_t n = points.size();
  if (n <= 2) {
    out.vertices = std::move(points);
    return out;
  }

  std::vector<cx> h(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {  // lower chain
    while (k >= 2 && cross(h[k - 2], h[k - 1], points[i]) <= flat) --k;
    h[k++] = points[i];
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = n - 1; i-- > 0;) {  // upper chain
    while (k >= lower && cross(h[k - 2], h[k - 1], points[i]) <= flat) --k;
    h[k++] = points[i];
  }
  h.resize(k - 1);  // last point repeats the first
  out.vertices = std::move(h);
  return out;
}

double polygon_area(const ConvexPolygon& p) {
  const auto& v = p.vertices;
  if (v.size() < 3) return 0.0;
  double a = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const cx& s = v[i];
    const cx& t = v[(i + 1) % v.size()];
    a += s.real() * t.imag() - t.real() * s.imag();
  }
  return 0.5 * std::abs(a);
}

double distance_to_polygon(cx z, const ConvexPolygon& p) {
  const auto& v = p.vertices;
  if (v.empty()) throw InvalidArgument("distance_to_polygon: empty polygon");
  if (v.size() == 1) return std::abs(z - v[0]);

  auto seg_dist = [&](const cx& a, const cx& b) {
    const cx ab = b - a;
    const double len2 = std::norm(ab);
    if (len2 == 0.0) return std::abs(z - a);
    double t = ((z.real() - a.real()) * ab.real() + (z.imag() - a.imag()) * ab.imag()) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(z - (a + t * ab));
  };

  if (v.size() == 2) return seg_dist(v[0], v[1]);

  bool inside = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (cross(v[i], v[(i + 1) % v.size()], z) < 0.0) {
      inside = false;
      break;
    }
  }
  if (inside) return 0.0;
  double d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < v.size(); ++i)
    d = std::min(d, seg_dist(v[i], v[(i + 1) % v.size()]));
  return d;
}

double polygon_hausdorff(const ConvexPolygon& p, const ConvexPolygon& q) {
  double d = 0.0;
  for (const cx& v : p.vertices) d = std::max(d, distance_to_polygon(v, q));
  for (const cx& v : q.vertices) d = std::max(d, distance_to_polygon(v, p));
  return d;
}

double polygon_support(const ConvexPolygon& p, double theta, cx* argmax) {
  if (p.vertices.empty()) throw InvalidArgument("polygon_support: empty polygon");
  const double c = std::cos(theta), s = std::sin(theta);
  double best = -std::numeric_limits<double>::infinity();
  cx best_v = p.vertices.front();
  for (const cx& v : p.vertices) {
    const double val = c * v.real() - s * v.imag();  // Re(e^{i theta} v)
    if (val > best) {
      best = val;
      best_v = v;
    }
  }
  if (argmax) *argmax = best_v;
  return best;
}

}  // namespace specrange
