#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polyharm/series.hpp"

namespace polyharm {

/// Tensor grid of circles |z| = r_i sampled at angles theta_m.
class PolarGrid {
 public:
  static constexpr std::size_t kMinRadii = 8;
  static constexpr std::size_t kMinAngles = 64;

  /// Validates: radii strictly increasing inside (0,1), angles in [0, 2 pi),
  /// at least 8 radii and 64 angles.
  PolarGrid(std::vector<double> radii, std::vector<double> angles);

  /// `n_radii` radii on [r_min, r_max], spaced r_min + (r_max - r_min) sin(pi/2 t),
  /// which crowds them towards r_max, and `n_angles` equally spaced angles.
  static PolarGrid make(double r_min, double r_max, std::size_t n_radii, std::size_t n_angles);

  /// 64 x 512 on [0.05, 0.99].
  static PolarGrid standard();

  std::span<const double> radii() const noexcept { return radii_; }
  std::span<const double> angles() const noexcept { return angles_; }
  std::size_t size() const noexcept { return radii_.size() * angles_.size(); }

  /// Visits every grid point as fn(r, theta, z), radius-major.
  template <class Fn>
  void for_each(Fn&& fn) const {
    for (double r : radii_)
      for (std::size_t m = 0; m < angles_.size(); ++m)
        fn(r, angles_[m], r * unit_[m]);
  }

 private:
  std::vector<double> radii_;
  std::vector<double> angles_;
  std::vector<Complex> unit_;  // e^{i theta_m}
};

/// Where a certificate attained its minimum. r = 0 denotes the origin.
struct GridLocation {
  double r = 0.0;
  double theta = 0.0;
};

/// Minimum of a sampled real functional over a polar grid.
struct CertificateReport {
  std::string name;
  double min_value = 0.0;
  GridLocation argmin;
  bool pass = false;
  /// Smallest |denominator| met; +inf for certificates without one.
  double auxiliary_min = 0.0;
  /// Closed-form r -> 0 lower bound, when the certificate has one.
  std::optional<double> origin_bound;
};

/// Denominators at or below this abort a ratio certificate.
inline constexpr double kDenominatorFloor = 1e-12;

/// One-line plain-text record: name min_value argmin_r argmin_theta pass.
std::string to_record(const CertificateReport& report);

}  // namespace polyharm
