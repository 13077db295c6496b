#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "polyharm/map.hpp"

namespace polyharm {

/// Mesh and styling for disk images. The mesh defaults are a legibility choice.
struct RenderConfig {
  std::size_t circles = 12;
  std::size_t rays = 24;
  std::size_t samples_per_curve = 720;
  double r_max = 0.999;
  std::size_t canvas = 800;  ///< pixels, square
  std::string stroke = "#1f4e79";
  std::string boundary_stroke = "#000000";
  double stroke_width = 0.8;
  double boundary_stroke_width = 2.0;

  /// Throws InvalidArgument unless all counts are >= 2 and 0 < r_max < 1.
  void validate() const;
};

/// Image of the circle |z| = r sampled at `samples` equally spaced angles (not closed).
std::vector<Complex> image_of_circle(const LayeredSeries& f, double r, std::size_t samples);

/// Image of the segment from 0 to r_max e^{i angle}, `samples` points including both ends.
std::vector<Complex> image_of_ray(const LayeredSeries& f, double angle, double r_max,
                                  std::size_t samples);

/// Number of intersecting pairs of non-adjacent edges of the closed polygon through
/// `points` (the last point joins the first). Zero means the polygon is simple.
std::size_t count_self_intersections(std::span<const Complex> points);

/// SVG 1.1 document: circles by increasing radius, then rays by increasing angle,
/// one <polyline> each, the r = r_max circle emphasized. Viewport fitted to the
/// bounding box with a 5% margin. Output is byte-identical for identical input.
std::string render_disk_image(const LayeredSeries& f, const RenderConfig& cfg = {});

}  // namespace polyharm
