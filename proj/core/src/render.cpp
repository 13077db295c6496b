#include "polyharm/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "polyharm/errors.hpp"

namespace polyharm {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double cross(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }

int orientation(Complex p, Complex q, Complex r) {
  const double v = cross(q - p, r - p);
  return (v > 0.0) - (v < 0.0);
}

bool on_segment(Complex p, Complex q, Complex r) {
  return std::min(p.real(), r.real()) <= q.real() && q.real() <= std::max(p.real(), r.real()) &&
         std::min(p.imag(), r.imag()) <= q.imag() && q.imag() <= std::max(p.imag(), r.imag());
}

bool segments_intersect(Complex p1, Complex p2, Complex q1, Complex q2) {
  const int o1 = orientation(p1, p2, q1), o2 = orientation(p1, p2, q2);
  const int o3 = orientation(q1, q2, p1), o4 = orientation(q1, q2, p2);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(p1, q1, p2)) return true;
  if (o2 == 0 && on_segment(p1, q2, p2)) return true;
  if (o3 == 0 && on_segment(q1, p1, q2)) return true;
  if (o4 == 0 && on_segment(q1, p2, q2)) return true;
  return false;
}

struct Viewport {
  double min_x, max_y, scale, offset_x, offset_y;

  void write(std::string& out, Complex w) const {
    char buf[64];
    const double x = offset_x + (w.real() - min_x) * scale;
    const double y = offset_y + (max_y - w.imag()) * scale;
    std::snprintf(buf, sizeof buf, "%.3f,%.3f", x, y);
    out += buf;
  }
};

void write_polyline(std::string& out, const Viewport& vp, std::span<const Complex> pts,
                    bool closed, const std::string& stroke, double width) {
  char w[32];
  std::snprintf(w, sizeof w, "%.3f", width);
  out += "  <polyline fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"" + w + "\" points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ' ';
    vp.write(out, pts[i]);
  }
  if (closed && !pts.empty()) {
    out += ' ';
    vp.write(out, pts.front());
  }
  out += "\"/>\n";
}

}  // namespace

void RenderConfig::validate() const {
  if (circles < 2 || rays < 2 || samples_per_curve < 2 || canvas < 2)
    throw InvalidArgument("render counts must all be >= 2");
  if (!(r_max > 0.0 && r_max < 1.0)) throw InvalidArgument("render r_max must lie in (0, 1)");
  if (!(stroke_width > 0.0) || !(boundary_stroke_width > 0.0))
    throw InvalidArgument("stroke widths must be positive");
  for (const auto* color : {&stroke, &boundary_stroke})
    if (color->empty() || color->find_first_of("\"<>&") != std::string::npos)
      throw InvalidArgument("stroke colors must be non-empty and free of markup characters");
}

std::vector<Complex> image_of_circle(const LayeredSeries& f, double r, std::size_t samples) {
  std::vector<Complex> pts(samples);
  for (std::size_t m = 0; m < samples; ++m)
    pts[m] = eval(f, std::polar(r, kTwoPi * static_cast<double>(m) / static_cast<double>(samples)));
  return pts;
}

std::vector<Complex> image_of_ray(const LayeredSeries& f, double angle, double r_max,
                                  std::size_t samples) {
  std::vector<Complex> pts(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    const double r = r_max * static_cast<double>(i) / static_cast<double>(samples - 1);
    pts[i] = eval(f, std::polar(r, angle));
  }
  return pts;
}

std::size_t count_self_intersections(std::span<const Complex> points) {
  const std::size_t n = points.size();
  if (n < 4) return 0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Complex a1 = points[i], a2 = points[(i + 1) % n];
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;  // adjacent through the closing edge
      if (segments_intersect(a1, a2, points[j], points[(j + 1) % n])) ++count;
    }
  }
  return count;
}

std::string render_disk_image(const LayeredSeries& f, const RenderConfig& cfg) {
  cfg.validate();
  std::vector<std::vector<Complex>> circles, rays;
  circles.reserve(cfg.circles);
  rays.reserve(cfg.rays);
  for (std::size_t i = 1; i <= cfg.circles; ++i) {
    const double r = cfg.r_max * static_cast<double>(i) / static_cast<double>(cfg.circles);
    circles.push_back(image_of_circle(f, r, cfg.samples_per_curve));
  }
  for (std::size_t m = 0; m < cfg.rays; ++m)
    rays.push_back(image_of_ray(f, kTwoPi * static_cast<double>(m) / static_cast<double>(cfg.rays),
                                cfg.r_max, cfg.samples_per_curve));

  double min_x = std::numeric_limits<double>::infinity(), max_x = -min_x;
  double min_y = min_x, max_y = -min_x;
  for (const auto* group : {&circles, &rays})
    for (const auto& curve : *group)
      for (Complex w : curve) {
        min_x = std::min(min_x, w.real());
        max_x = std::max(max_x, w.real());
        min_y = std::min(min_y, w.imag());
        max_y = std::max(max_y, w.imag());
      }
  const double span = std::max({max_x - min_x, max_y - min_y, 1e-12});
  const double size = static_cast<double>(cfg.canvas);
  const double scale = size / (span * 1.1);
  const Viewport vp{min_x, max_y, scale,
                    0.5 * (size - (max_x - min_x) * scale),
                    0.5 * (size - (max_y - min_y) * scale)};

  std::string out;
  char buf[256];
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"%zu\" "
                "height=\"%zu\" viewBox=\"0 0 %zu %zu\">\n",
                cfg.canvas, cfg.canvas, cfg.canvas, cfg.canvas);
  out += buf;
  std::snprintf(buf, sizeof buf, "  <rect width=\"%zu\" height=\"%zu\" fill=\"white\"/>\n",
                cfg.canvas, cfg.canvas);
  out += buf;
  for (std::size_t i = 0; i < circles.size(); ++i) {
    const bool boundary = i + 1 == circles.size();
    write_polyline(out, vp, circles[i], true, boundary ? cfg.boundary_stroke : cfg.stroke,
                   boundary ? cfg.boundary_stroke_width : cfg.stroke_width);
  }
  for (const auto& ray : rays) write_polyline(out, vp, ray, false, cfg.stroke, cfg.stroke_width);
  out += "</svg>\n";
  return out;
}

}  // namespace polyharm
