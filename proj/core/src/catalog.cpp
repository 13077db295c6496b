#include "polyharm/catalog.hpp"

#include <string>

#include "polyharm/errors.hpp"

namespace polyharm::catalog {

namespace {

HarmonicLayer empty_layer(std::size_t order) { return {PowerSeries(order), PowerSeries(order)}; }

PolyharmonicMap single_term(std::size_t j0, Complex coeff, std::size_t order) {
  if (j0 < 2) throw InvalidArgument("extra degree must be >= 2");
  if (j0 > order)
    throw InvalidArgument("degree " + std::to_string(j0) + " exceeds truncation " +
                          std::to_string(order));
  auto l = empty_layer(order);
  l.analytic.set(1, 1.0);
  l.analytic.set(j0, coeff);
  return PolyharmonicMap({l});
}

}  // namespace

PolyharmonicMap f1(std::size_t order) {
  auto l1 = empty_layer(order);
  auto l2 = empty_layer(order);
  l1.analytic.set(1, 1.0);
  l1.anti_analytic.set(1, 1.0 / 3.0);
  l2.anti_analytic.set(1, 1.0 / 6.0);
  return PolyharmonicMap({l1, l2});
}

PolyharmonicMap f2(std::size_t j0, double phi, std::size_t order) {
  return single_term(j0, std::polar(1.0 / static_cast<double>(j0), phi), order);
}

PolyharmonicMap f3(std::size_t j0, double phi, std::size_t order) {
  const double j = static_cast<double>(j0);
  return single_term(j0, std::polar(1.0 / (j * j), phi), order);
}

PolyharmonicMap f4(std::size_t order) {
  auto l1 = empty_layer(order);
  auto l2 = empty_layer(order);
  l1.analytic.set(1, 1.0);
  l1.anti_analytic.set(1, 0.25);
  l2.analytic.set(1, 1.0 / 9.0);
  l2.anti_analytic.set(1, 1.0 / 9.0);
  return PolyharmonicMap({l1, l2});
}

PolyharmonicMap affine(Complex b, std::size_t order) {
  auto l = empty_layer(order);
  l.analytic.set(1, 1.0);
  l.anti_analytic.set(1, b);
  return PolyharmonicMap({l});
}

}  // namespace polyharm::catalog
