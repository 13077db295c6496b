#pragma once

#include <cstddef>
#include <vector>

#include "polyharm/series.hpp"

namespace polyharm {

/// One harmonic layer h_k + conj(g_k) of a polyharmonic map.
struct HarmonicLayer {
  PowerSeries analytic;       ///< h_k, coefficients a_{k,j}
  PowerSeries anti_analytic;  ///< g_k, coefficients b_{k,j}

  friend bool operator==(const HarmonicLayer&, const HarmonicLayer&) = default;
};

/// Raw coefficient object
///
///     F(z) = sum_{k=1}^{p} |z|^{2(k-1)} ( h_k(z) + conj(g_k(z)) )
///
/// with no normalization. This is what apply_L produces. All layers share
/// one truncation order J; shorter series are zero-padded on construction.
class LayeredSeries {
 public:
  /// Rejects p == 0. Pads every series to the largest order present.
  explicit LayeredSeries(std::vector<HarmonicLayer> layers);

  std::size_t degree() const noexcept { return layers_.size(); }  ///< p
  std::size_t order() const noexcept { return order_; }           ///< J

  /// Layer k, 1-based.
  const HarmonicLayer& layer(std::size_t k) const;
  const std::vector<HarmonicLayer>& layers() const noexcept { return layers_; }

  Complex a(std::size_t k, std::size_t j) const { return layer(k).analytic.coeff(j); }
  Complex b(std::size_t k, std::size_t j) const { return layer(k).anti_analytic.coeff(j); }

  friend LayeredSeries operator+(const LayeredSeries& f, const LayeredSeries& g);
  friend LayeredSeries operator*(Complex s, const LayeredSeries& f);
  friend bool operator==(const LayeredSeries&, const LayeredSeries&) = default;

 private:
  std::vector<HarmonicLayer> layers_;
  std::size_t order_ = 0;
};

/// A normalized polyharmonic map of the unit disk: a_{1,1} = 1 and |b_{1,1}| < 1.
class PolyharmonicMap : public LayeredSeries {
 public:
  /// Validates the normalization on top of LayeredSeries' checks.
  explicit PolyharmonicMap(std::vector<HarmonicLayer> layers);

  /// Checks the normalization of an existing coefficient object.
  explicit PolyharmonicMap(LayeredSeries raw);

  /// F(z) = z at truncation order J.
  static PolyharmonicMap identity(std::size_t order = kDefaultTruncation);

 private:
  void check_normalization() const;
};

/// z = r e^{i theta} with r in (0,1); theta is reduced into [0, 2 pi).
class PolarPoint {
 public:
  PolarPoint(double r, double theta);

  double r() const noexcept { return r_; }
  double theta() const noexcept { return theta_; }
  Complex z() const noexcept { return std::polar(r_, theta_); }

 private:
  double r_;
  double theta_;
};

/// Wirtinger derivatives F_z and F_zbar at one point.
struct Wirtinger {
  Complex dz;
  Complex dzbar;
};

/// F(z) by per-series Horner, |z|^{2(k-1)} formed once per layer.
/// Throws InvalidArgument for |z| >= 1 or non-finite z.
Complex eval(const LayeredSeries& f, Complex z);

/// L = z d/dz - zbar d/dzbar on coefficients: (a_{k,j}, b_{k,j}) -> (j a_{k,j}, -j b_{k,j}).
LayeredSeries apply_L(const LayeredSeries& f);

/// F_z and F_zbar from the coefficient model (term rules, no differencing).
Wirtinger wirtinger(const LayeredSeries& f, Complex z);

/// |F_z|^2 - |F_zbar|^2. At z = 0 this is exactly 1 - |b_{1,1}|^2 for a normalized map.
double jacobian(const LayeredSeries& f, Complex z);

/// max(|Re e|, |Im e|) for e = i L[F](z) - (central difference of theta -> F(r e^{i theta})).
/// Oracle for apply_L; `step` must lie in (0, 1e-4].
double theta_derivative_check(const LayeredSeries& f, const PolarPoint& pt, double step);

}  // namespace polyharm
