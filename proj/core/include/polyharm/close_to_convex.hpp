#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "polyharm/grid.hpp"
#include "polyharm/map.hpp"
#include "polyharm/series.hpp"

namespace polyharm {

struct HerglotzAtom {
  double angle = 0.0;   ///< reduced into [0, 2 pi)
  double weight = 0.0;  ///< >= 0
};

/// Finite atomic probability measure on the circle. It stands for the
/// positive-real-part function
///
///     p(z) = (3/2) sum_m w_m (1 + e^{i phi_m} z) / (1 - e^{i phi_m} z),  p(0) = 3/2.
class HerglotzMeasure {
 public:
  /// Rejects an empty list, negative or non-finite weights, and weights that do
  /// not sum to 1 within 1e-12.
  explicit HerglotzMeasure(std::vector<HerglotzAtom> atoms);

  static HerglotzMeasure point_mass(double angle);

  const std::vector<HerglotzAtom>& atoms() const noexcept { return atoms_; }

 private:
  std::vector<HerglotzAtom> atoms_;
};

/// Taylor coefficients of p: c[0] = 3/2 and c[j] = 3 sum_m w_m e^{i j phi_m}, j = 1..J.
/// |c[j]| <= 3 always.
std::vector<Complex> caratheodory_coeffs(const HerglotzMeasure& mu, std::size_t order);

/// Harmonic map f = h + conj(g) with g'(z) = e^{i theta} z h'(z).
struct ClassFMap {
  PowerSeries h;  ///< a_1 = 1
  PowerSeries g;  ///< b_1 = 0, j b_j = e^{i theta} (j-1) a_{j-1}
  double theta = 0.0;

  Complex a(std::size_t j) const { return h.coeff(j); }
  Complex b(std::size_t j) const { return g.coeff(j); }

  /// The same map as a p = 1 PolyharmonicMap.
  PolyharmonicMap as_polyharmonic() const;
};

/// Runs  a_{j+1} = (1 / (j(j+1))) sum_{s=1}^{j} s a_s c_{j+1-s}  from a_1 = 1, with c from
/// caratheodory_coeffs, so that z h''/h' = p - 3/2 at truncation order. J >= 3.
ClassFMap build_class_f(const HerglotzMeasure& mu, double theta, std::size_t order);

/// Builds the map directly from a coefficient list c[1..J-1] (c[0] ignored). Used
/// for measures outside the atomic family, e.g. c = 0 giving h = z.
ClassFMap build_class_f_from_coeffs(std::span<const Complex> c, double theta, std::size_t order);

/// min over the grid of Re(1 + z h''(z)/h'(z)) + 1/2 from the truncated series.
/// pass <=> min > 0. Throws DenominatorCollapse if |h'| <= 1e-12 at a grid point.
CertificateReport verify_condition(const ClassFMap& f, const PolarGrid& grid);

struct FeketeSzegoResult {
  double lambda = 0.0;
  double value_a = 0.0;  ///< |a_3 - lambda a_2^2|
  double value_b = 0.0;  ///< |b_3 - lambda b_2^2|
  double bound_a = 0.0;  ///< max{1/2, |8 - 9 lambda| / 4}
  double bound_b = 0.0;  ///< 1 + |lambda| / 4

  bool within_bounds(double tol = 1e-9) const noexcept {
    return value_a <= bound_a + tol && value_b <= bound_b + tol;
  }
};

double fekete_szego_bound_a(double lambda) noexcept;
double fekete_szego_bound_b(double lambda) noexcept;

FeketeSzegoResult fekete_szego(const ClassFMap& f, double lambda);

enum class WitnessKind {
  a_functional,           ///< point mass at 0, theta = 0: a_2 = 3/2, a_3 = 2
  b_functional_positive,  ///< point mass at 0, theta = 0: b_3 = +1 (lambda < 0)
  b_functional_negative,  ///< point mass at pi, theta = 0: a_2 = -3/2, b_3 = -1 (lambda >= 0)
};

ClassFMap extremal_witness(WitnessKind kind, std::size_t order);

/// 1..max_atoms atoms with uniform angles and flat-Dirichlet weights.
HerglotzMeasure sample_measure(std::mt19937_64& rng, std::size_t max_atoms = 8);

/// Random measure plus uniform theta, built at truncation J. Deterministic in seed.
ClassFMap sample_class_f(std::uint64_t seed, std::size_t order, std::size_t max_atoms = 8);

struct SweepOptions {
  std::size_t samples = 1000;
  std::vector<double> lambdas;
  std::uint64_t seed = 0;
  std::size_t max_atoms = 8;
  /// Adds the three extremal witnesses to the pool.
  bool include_witnesses = true;
};

struct SweepRow {
  double lambda = 0.0;
  double max_a = 0.0;
  double bound_a = 0.0;
  double max_b = 0.0;
  double bound_b = 0.0;

  bool within_bounds(double tol = 1e-9) const noexcept {
    return max_a <= bound_a + tol && max_b <= bound_b + tol;
  }
};

/// Monte-Carlo maxima of both functionals per lambda. Sample i uses
/// derive_seed(seed, i), so the table does not depend on evaluation order.
std::vector<SweepRow> fs_sweep(const SweepOptions& options);

/// lambda_min, lambda_min + step, ..., up to lambda_max (inclusive within step/1e6).
std::vector<double> lambda_range(double lambda_min, double lambda_max, double step);

}  // namespace polyharm
