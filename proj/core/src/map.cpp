#include "polyharm/map.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "polyharm/errors.hpp"

namespace polyharm {

namespace {

void check_point(Complex z) {
  if (!is_finite(z)) throw InvalidArgument("evaluation point is not finite");
  if (std::norm(z) >= 1.0) throw InvalidArgument("evaluation point outside the open unit disk");
}

}  // namespace

LayeredSeries::LayeredSeries(std::vector<HarmonicLayer> layers) : layers_(std::move(layers)) {
  if (layers_.empty()) throw InvalidArgument("a polyharmonic map needs at least one layer");
  for (const auto& l : layers_)
    order_ = std::max({order_, l.analytic.order(), l.anti_analytic.order()});
  for (auto& l : layers_) {
    if (l.analytic.order() != order_) l.analytic = l.analytic.resized(order_);
    if (l.anti_analytic.order() != order_) l.anti_analytic = l.anti_analytic.resized(order_);
  }
}

const HarmonicLayer& LayeredSeries::layer(std::size_t k) const {
  if (k == 0 || k > layers_.size())
    throw InvalidArgument("layer index " + std::to_string(k) + " outside [1, " +
                          std::to_string(layers_.size()) + "]");
  return layers_[k - 1];
}

LayeredSeries operator+(const LayeredSeries& f, const LayeredSeries& g) {
  if (f.degree() != g.degree() || f.order() != g.order())
    throw InvalidArgument("coefficient-wise sum needs matching p and J");
  std::vector<HarmonicLayer> out = f.layers_;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i].analytic += g.layers_[i].analytic;
    out[i].anti_analytic += g.layers_[i].anti_analytic;
  }
  return LayeredSeries(std::move(out));
}

LayeredSeries operator*(Complex s, const LayeredSeries& f) {
  std::vector<HarmonicLayer> out = f.layers_;
  for (auto& l : out) {
    l.analytic *= s;
    l.anti_analytic *= s;
  }
  return LayeredSeries(std::move(out));
}

PolyharmonicMap::PolyharmonicMap(std::vector<HarmonicLayer> layers)
    : LayeredSeries(std::move(layers)) {
  check_normalization();
}

PolyharmonicMap::PolyharmonicMap(LayeredSeries raw) : LayeredSeries(std::move(raw)) {
  check_normalization();
}

void PolyharmonicMap::check_normalization() const {
  if (a(1, 1) != Complex{1.0, 0.0})
    throw InvalidArgument("normalization requires a_{1,1} = 1");
  if (std::abs(b(1, 1)) >= 1.0)
    throw InvalidArgument("anti-analytic unit coefficient out of range (|b_{1,1}| >= 1)");
}

PolyharmonicMap PolyharmonicMap::identity(std::size_t order) {
  PowerSeries h(order);
  h.set(1, 1.0);
  return PolyharmonicMap({HarmonicLayer{h, PowerSeries(order)}});
}

PolarPoint::PolarPoint(double r, double theta) : r_(r) {
  if (!std::isfinite(r) || !std::isfinite(theta))
    throw InvalidArgument("polar point is not finite");
  if (!(r > 0.0 && r < 1.0)) throw InvalidArgument("polar radius must lie in (0, 1)");
  constexpr double two_pi = 2.0 * std::numbers::pi;
  theta_ = std::fmod(theta, two_pi);
  if (theta_ < 0.0) theta_ += two_pi;
  if (theta_ >= two_pi) theta_ = 0.0;
}

Complex eval(const LayeredSeries& f, Complex z) {
  check_point(z);
  const double rho = std::norm(z);
  Complex total{};
  double weight = 1.0;  // |z|^{2(k-1)}
  for (const auto& l : f.layers()) {
    const Complex h = detail::horner_from_one(l.analytic.coeffs(), z);
    const Complex g = detail::horner_from_one(l.anti_analytic.coeffs(), z);
    total += weight * (h + std::conj(g));
    weight *= rho;
  }
  return total;
}

LayeredSeries apply_L(const LayeredSeries& f) {
  std::vector<HarmonicLayer> out;
  out.reserve(f.degree());
  for (const auto& l : f.layers()) {
    HarmonicLayer img{PowerSeries(f.order()), PowerSeries(f.order())};
    for (std::size_t j = 1; j <= f.order(); ++j) {
      const double w = static_cast<double>(j);
      img.analytic.set(j, w * l.analytic.coeff(j));
      img.anti_analytic.set(j, -w * l.anti_analytic.coeff(j));
    }
    out.push_back(std::move(img));
  }
  return LayeredSeries(std::move(out));
}

Wirtinger wirtinger(const LayeredSeries& f, Complex z) {
  check_point(z);
  // d/dz |z|^{2m} = m |z|^{2(m-1)} zbar,  d/dzbar |z|^{2m} = m |z|^{2(m-1)} z
  const double rho = std::norm(z);
  Wirtinger out{};
  double weight = 1.0;       // |z|^{2m}
  double prev_weight = 0.0;  // |z|^{2(m-1)}, unused at m = 0
  for (std::size_t m = 0; m < f.degree(); ++m) {
    const auto& l = f.layers()[m];
    const Complex hp = detail::horner_derivative_from_one(l.analytic.coeffs(), z);
    const Complex gp = detail::horner_derivative_from_one(l.anti_analytic.coeffs(), z);
    out.dz += weight * hp;
    out.dzbar += weight * std::conj(gp);
    if (m > 0) {
      const Complex layer_value = detail::horner_from_one(l.analytic.coeffs(), z) +
                                  std::conj(detail::horner_from_one(l.anti_analytic.coeffs(), z));
      const double dm = static_cast<double>(m) * prev_weight;
      out.dz += dm * std::conj(z) * layer_value;
      out.dzbar += dm * z * layer_value;
    }
    prev_weight = weight;
    weight *= rho;
  }
  return out;
}

double jacobian(const LayeredSeries& f, Complex z) {
  const auto d = wirtinger(f, z);
  return std::norm(d.dz) - std::norm(d.dzbar);
}

double theta_derivative_check(const LayeredSeries& f, const PolarPoint& pt, double step) {
  if (!(step > 0.0 && step <= 1e-4)) throw InvalidArgument("finite-difference step must lie in (0, 1e-4]");
  const Complex exact = Complex{0.0, 1.0} * eval(apply_L(f), pt.z());
  const Complex fwd = eval(f, std::polar(pt.r(), pt.theta() + step));
  const Complex bwd = eval(f, std::polar(pt.r(), pt.theta() - step));
  const Complex err = exact - (fwd - bwd) / (2.0 * step);
  return std::max(std::abs(err.real()), std::abs(err.imag()));
}

}  // namespace polyharm
