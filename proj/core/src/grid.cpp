#include "polyharm/grid.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "polyharm/errors.hpp"

namespace polyharm {

PolarGrid::PolarGrid(std::vector<double> radii, std::vector<double> angles)
    : radii_(std::move(radii)), angles_(std::move(angles)) {
  if (radii_.size() < kMinRadii) throw InvalidArgument("polar grid needs at least 8 radii");
  if (angles_.size() < kMinAngles) throw InvalidArgument("polar grid needs at least 64 angles");
  for (std::size_t i = 0; i < radii_.size(); ++i) {
    if (!(radii_[i] > 0.0 && radii_[i] < 1.0)) throw InvalidArgument("grid radii must lie in (0, 1)");
    if (i > 0 && !(radii_[i] > radii_[i - 1]))
      throw InvalidArgument("grid radii must be strictly increasing");
  }
  constexpr double two_pi = 2.0 * std::numbers::pi;
  unit_.reserve(angles_.size());
  for (double a : angles_) {
    if (!(a >= 0.0 && a < two_pi)) throw InvalidArgument("grid angles must lie in [0, 2 pi)");
    unit_.push_back(std::polar(1.0, a));
  }
}

PolarGrid PolarGrid::make(double r_min, double r_max, std::size_t n_radii, std::size_t n_angles) {
  if (!(r_min > 0.0 && r_min < r_max && r_max < 1.0))
    throw InvalidArgument("grid needs 0 < r_min < r_max < 1");
  if (n_radii < kMinRadii || n_angles < kMinAngles)
    throw InvalidArgument("polar grid needs at least 8 radii and 64 angles");
  std::vector<double> radii(n_radii), angles(n_angles);
  for (std::size_t i = 0; i < n_radii; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(n_radii - 1);
    radii[i] = r_min + (r_max - r_min) * std::sin(0.5 * std::numbers::pi * t);
  }
  radii.back() = r_max;
  for (std::size_t m = 0; m < n_angles; ++m)
    angles[m] = 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(n_angles);
  return PolarGrid(std::move(radii), std::move(angles));
}

PolarGrid PolarGrid::standard() { return make(0.05, 0.99, 64, 512); }

std::string to_record(const CertificateReport& report) {
  char buf[160];
  std::snprintf(buf, sizeof buf, " %.17g %.17g %.17g %s", report.min_value, report.argmin.r,
                report.argmin.theta, report.pass ? "pass" : "fail");
  return report.name + buf;
}

}  // namespace polyharm
