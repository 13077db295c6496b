#pragma once

#include <cstddef>

#include "polyharm/map.hpp"

namespace polyharm::catalog {

/// F1(z) = z + (1/3) zbar + (1/6) |z|^2 zbar, p = 2.
PolyharmonicMap f1(std::size_t order = kDefaultTruncation);

/// F2(z) = z + e^{i phi} z^{j0} / j0, p = 1. Boundary member of the starlike class.
PolyharmonicMap f2(std::size_t j0, double phi, std::size_t order = kDefaultTruncation);

/// F3(z) = z + e^{i phi} z^{j0} / j0^2, p = 1. Boundary member of the convex class.
PolyharmonicMap f3(std::size_t j0, double phi, std::size_t order = kDefaultTruncation);

/// F4(z) = z + (1/9)|z|^2 z + (1/4) zbar + (1/9)|z|^2 zbar, p = 2.
PolyharmonicMap f4(std::size_t order = kDefaultTruncation);

/// z + conj(b) zbar, the affine map with constant Jacobian 1 - |b|^2.
PolyharmonicMap affine(Complex b, std::size_t order = kDefaultTruncation);

}  // namespace polyharm::catalog
