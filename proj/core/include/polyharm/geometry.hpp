#pragma once

#include <cstddef>

#include "polyharm/grid.hpp"
#include "polyharm/map.hpp"

namespace polyharm {

/// (1 - |b_{1,1}|^2) / (1 + |b_{1,1}|)^2, the r -> 0 lower bound shared by the
/// starlike and convex ratios.
double origin_ratio_bound(const LayeredSeries& f);

/// min over the grid of Re(L[F](z) / F(z)); positive means arg F(re^{it}) increases in t.
/// auxiliary_min = min |F|. Throws DenominatorCollapse when |F| <= 1e-12.
CertificateReport starlike_certificate(const PolyharmonicMap& f, const PolarGrid& grid,
                                       double tolerance = 0.0);

/// min over the grid of Re(L[L[F]](z) / L[F](z)); auxiliary_min = min |L[F]|.
CertificateReport convex_certificate(const PolyharmonicMap& f, const PolarGrid& grid,
                                     double tolerance = 0.0);

/// min of the Jacobian over the grid and the origin (where it is 1 - |b_{1,1}|^2).
CertificateReport sense_preserving_check(const PolyharmonicMap& f, const PolarGrid& grid,
                                         double tolerance = 0.0);

struct AngleSearchResult {
  double alpha = 0.0;
  double beta = 0.0;
  double min_value = 0.0;
  bool pass = false;
};

/// Grid minimum of
///   Q(alpha, beta, z) = Re{ (e^{i alpha} H(z) + e^{-i alpha} G(z)) (e^{i beta} - e^{-i beta} z^2) }
/// with H = sum_k |z|^{2(k-1)} h_k'(z) and G the same with g_k'.
double angle_condition_minimum(const LayeredSeries& f, double alpha, double beta,
                               const PolarGrid& grid);

/// Searches (alpha, beta) on an angle_steps x angle_steps lattice over [0, 2pi)^2, then
/// refines around the best lattice point by halving the step five times. The lattice
/// pass scores candidates on a thinned copy of the grid; the refinement and the
/// reported minimum use the full grid. Ties go to the smallest alpha, then beta.
AngleSearchResult theorem7_search(const PolyharmonicMap& f, std::size_t angle_steps,
                                  const PolarGrid& grid);

}  // namespace polyharm
