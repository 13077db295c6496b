#include <gtest/gtest.h>

#include <numbers>
#include <regex>

#include "polyharm/polyharm.hpp"

namespace polyharm {
namespace {

constexpr double kPi = std::numbers::pi;

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

TEST(SelfIntersections, SimpleAndCrossedPolygons) {
  const std::vector<Complex> square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  EXPECT_EQ(count_self_intersections(square), 0u);
  const std::vector<Complex> bowtie{{0, 0}, {1, 1}, {1, 0}, {0, 1}};
  EXPECT_EQ(count_self_intersections(bowtie), 1u);
  const std::vector<Complex> triangle{{0, 0}, {1, 0}, {0, 1}};
  EXPECT_EQ(count_self_intersections(triangle), 0u);
}

TEST(SelfIntersections, CircleImages) {
  EXPECT_EQ(count_self_intersections(image_of_circle(PolyharmonicMap::identity(), 0.999, 720)), 0u);
  // z + z^2 folds over itself near the unit circle
  const auto fold = PolyharmonicMap({HarmonicLayer{PowerSeries(std::vector<Complex>{1.0, 1.0}), PowerSeries(2)}});
  EXPECT_GT(count_self_intersections(image_of_circle(fold, 0.999, 720)), 0u);
}

TEST(CurveImages, Endpoints) {
  const auto ray = image_of_ray(PolyharmonicMap::identity(), kPi / 2, 0.5, 11);
  ASSERT_EQ(ray.size(), 11u);
  EXPECT_EQ(ray.front(), Complex{});
  EXPECT_NEAR(std::abs(ray.back() - Complex{0.0, 0.5}), 0.0, 1e-15);
  const auto circle = image_of_circle(PolyharmonicMap::identity(), 0.5, 8);
  EXPECT_EQ(circle.front(), Complex(0.5));
}

TEST(RenderConfig, Validation) {
  RenderConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.r_max = 1.0;
  EXPECT_THROW(cfg.validate(), InvalidArgument);
  cfg = {};
  cfg.samples_per_curve = 1;
  EXPECT_THROW(cfg.validate(), InvalidArgument);
  cfg = {};
  cfg.stroke = "red\"/><script>";
  EXPECT_THROW(cfg.validate(), InvalidArgument);
}

TEST(Render, IdentityStructure) {
  RenderConfig cfg;
  const auto svg = render_disk_image(PolyharmonicMap::identity(), cfg);
  EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
  EXPECT_NE(svg.find("version=\"1.1\""), std::string::npos);
  EXPECT_EQ(count(svg, "<polyline"), cfg.circles + cfg.rays);
  EXPECT_EQ(count(svg, "stroke=\"" + cfg.boundary_stroke + "\""), 1u);
  EXPECT_EQ(svg.substr(svg.size() - 7), "</svg>\n");
  // the bounding box is [-r_max, r_max]^2, centred with a 5% margin either side
  const double scale = 800.0 / (2 * 0.999 * 1.1);
  char expected[64];
  std::snprintf(expected, sizeof expected, "%.3f,%.3f", 400.0 + 0.999 * scale, 400.0);
  EXPECT_NE(svg.find(expected), std::string::npos) << expected;
}

TEST(Render, ByteIdenticalAcrossRuns) {
  for (const auto& f : {catalog::f1(), catalog::f2(3, kPi / 6), catalog::f3(3, kPi / 6), catalog::f4()})
    EXPECT_EQ(render_disk_image(f), render_disk_image(f));
}

TEST(Render, BoundariesOfCatalogMapsAreSimple) {
  for (const auto& f : {catalog::f1(), catalog::f2(3, kPi / 6), catalog::f3(3, kPi / 6), catalog::f4()})
    EXPECT_EQ(count_self_intersections(image_of_circle(f, 0.999, 720)), 0u);
}

}  // namespace
}  // namespace polyharm
