#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "polyharm/map.hpp"

namespace polyharm {

/// The two coefficient-defined classes: HS_p (starlike) and HC_p (convex).
enum class ClassKind { starlike, convex };

const char* to_string(ClassKind kind) noexcept;

/// Tolerance on `lhs <= rhs` and on the first-order strictness margin.
inline constexpr double kMembershipTolerance = 1e-12;
/// Tolerance for `sum_j <= bound_j` and for the `tight` flag.
inline constexpr double kBoundTolerance = 1e-9;

struct MembershipReport {
  bool member = false;
  double lhs = 0.0;                 ///< weighted sum over degrees j >= 2
  double rhs = 0.0;                 ///< 1 - first_order_budget
  double slack = 0.0;               ///< rhs - lhs
  double first_order_budget = 0.0;  ///< |b_{1,1}| + sum_{k>=2} (2k-1)(|a_{k,1}| + |b_{k,1}|)
};

/// Weighted-sum test with weights 2(k-1)+j (starlike) or 2(k-1)+j^2 (convex).
/// Boundary equality (slack = 0) counts as membership.
MembershipReport membership(const PolyharmonicMap& f, ClassKind kind);
MembershipReport hs_p_membership(const PolyharmonicMap& f);
MembershipReport hc_p_membership(const PolyharmonicMap& f);

struct DegreeBound {
  std::size_t j = 0;
  double sum = 0.0;    ///< sum_k (|a_{k,j}| + |b_{k,j}|)
  double bound = 0.0;  ///< 1/j or 1/j^2
  bool satisfied = false;
  bool tight = false;  ///< |sum - bound| <= 1e-9
};

struct CoefficientBoundReport {
  ClassKind kind = ClassKind::starlike;
  std::vector<DegreeBound> per_degree;  ///< j = 2..J

  bool all_satisfied() const noexcept;
};

/// Per-degree coefficient bounds for members of the class. Throws
/// PreconditionViolation when `f` is not a member.
CoefficientBoundReport coefficient_bound_report(const PolyharmonicMap& f, ClassKind kind);

struct SamplerOptions {
  /// Fraction of the first-order budget (|b_{1,1}| and the k >= 2 linear terms)
  /// that is always left unused.
  double unused_first_order = 0.5;
};

/// Seeded random member of the class with p layers and truncation J.
///
/// First-order slots get random magnitudes and phases within the budget, then
/// the degree >= 2 block is rescaled so that lhs = fill * rhs. Deterministic in
/// (kind, p, J, fill, seed).
PolyharmonicMap sample_member(ClassKind kind, std::size_t p, std::size_t order, double fill,
                              std::uint64_t seed, const SamplerOptions& options = {});

}  // namespace polyharm
