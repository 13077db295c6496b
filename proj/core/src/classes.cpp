#include "polyharm/classes.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "polyharm/errors.hpp"

namespace polyharm {

namespace {

double degree_weight(ClassKind kind, std::size_t k, std::size_t j) {
  const double jj = static_cast<double>(j);
  const double layer = 2.0 * static_cast<double>(k - 1);
  return kind == ClassKind::starlike ? layer + jj : layer + jj * jj;
}

double first_order_budget(const LayeredSeries& f) {
  double budget = std::abs(f.b(1, 1));
  for (std::size_t k = 2; k <= f.degree(); ++k)
    budget += static_cast<double>(2 * k - 1) * (std::abs(f.a(k, 1)) + std::abs(f.b(k, 1)));
  return budget;
}

double weighted_tail(const LayeredSeries& f, ClassKind kind) {
  double lhs = 0.0;
  for (std::size_t k = 1; k <= f.degree(); ++k)
    for (std::size_t j = 2; j <= f.order(); ++j)
      lhs += degree_weight(kind, k, j) * (std::abs(f.a(k, j)) + std::abs(f.b(k, j)));
  return lhs;
}

}  // namespace

const char* to_string(ClassKind kind) noexcept {
  return kind == ClassKind::starlike ? "starlike" : "convex";
}

MembershipReport membership(const PolyharmonicMap& f, ClassKind kind) {
  MembershipReport r;
  r.first_order_budget = first_order_budget(f);
  r.rhs = 1.0 - r.first_order_budget;
  r.lhs = weighted_tail(f, kind);
  r.slack = r.rhs - r.lhs;
  r.member = r.lhs <= r.rhs + kMembershipTolerance && r.rhs > -kMembershipTolerance &&
             r.first_order_budget < 1.0;
  return r;
}

MembershipReport hs_p_membership(const PolyharmonicMap& f) {
  return membership(f, ClassKind::starlike);
}

MembershipReport hc_p_membership(const PolyharmonicMap& f) {
  return membership(f, ClassKind::convex);
}

bool CoefficientBoundReport::all_satisfied() const noexcept {
  for (const auto& d : per_degree)
    if (!d.satisfied) return false;
  return true;
}

CoefficientBoundReport coefficient_bound_report(const PolyharmonicMap& f, ClassKind kind) {
  if (!membership(f, kind).member)
    throw PreconditionViolation(std::string("map is not a member of the ") + to_string(kind) +
                                " class; coefficient bounds do not apply");
  CoefficientBoundReport out;
  out.kind = kind;
  for (std::size_t j = 2; j <= f.order(); ++j) {
    DegreeBound d;
    d.j = j;
    for (std::size_t k = 1; k <= f.degree(); ++k) d.sum += std::abs(f.a(k, j)) + std::abs(f.b(k, j));
    const double jj = static_cast<double>(j);
    d.bound = kind == ClassKind::starlike ? 1.0 / jj : 1.0 / (jj * jj);
    d.satisfied = d.sum <= d.bound + kBoundTolerance;
    d.tight = std::abs(d.sum - d.bound) <= kBoundTolerance;
    out.per_degree.push_back(d);
  }
  return out;
}

PolyharmonicMap sample_member(ClassKind kind, std::size_t p, std::size_t order, double fill,
                              std::uint64_t seed, const SamplerOptions& options) {
  if (p < 1) throw InvalidArgument("sampler needs p >= 1");
  if (order < 2) throw InvalidArgument("sampler needs truncation J >= 2");
  if (!(fill > 0.0 && fill <= 1.0)) throw InvalidArgument("fill must lie in (0, 1]");
  if (!(options.unused_first_order >= 0.0 && options.unused_first_order < 1.0))
    throw InvalidArgument("unused first-order fraction must lie in [0, 1)");

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::bernoulli_distribution coin(0.5);

  std::vector<HarmonicLayer> layers(p, HarmonicLayer{PowerSeries(order), PowerSeries(order)});
  layers[0].analytic.set(1, 1.0);

  // First-order slots: b_{1,1}, then a_{k,1}, b_{k,1} for k >= 2 with weight 2k-1.
  struct Slot {
    PowerSeries* series;
    std::size_t j;
    double weight;
    double magnitude;
    double phase;
  };
  auto draw = [&](std::vector<Slot>& slots, PowerSeries& s, std::size_t j, double weight) {
    if (coin(rng)) slots.push_back({&s, j, weight, std::pow(unit(rng), 3.0), angle(rng)});
  };
  auto place = [](std::vector<Slot>& slots, double target) {
    double raw = 0.0;
    for (const auto& s : slots) raw += s.weight * s.magnitude;
    if (raw <= 0.0) return;
    const double scale = target / raw;
    for (const auto& s : slots) s.series->set(s.j, std::polar(s.magnitude * scale, s.phase));
  };

  std::vector<Slot> first;
  draw(first, layers[0].anti_analytic, 1, 1.0);
  for (std::size_t k = 2; k <= p; ++k) {
    const double w = static_cast<double>(2 * k - 1);
    draw(first, layers[k - 1].analytic, 1, w);
    draw(first, layers[k - 1].anti_analytic, 1, w);
  }
  place(first, (1.0 - options.unused_first_order) * unit(rng));

  std::vector<Slot> tail;
  for (std::size_t k = 1; k <= p; ++k)
    for (std::size_t j = 2; j <= order; ++j) {
      const double w = degree_weight(kind, k, j);
      draw(tail, layers[k - 1].analytic, j, w);
      draw(tail, layers[k - 1].anti_analytic, j, w);
    }
  if (tail.empty()) {
    std::uniform_int_distribution<std::size_t> pick_k(1, p), pick_j(2, order);
    const std::size_t k = pick_k(rng), j = pick_j(rng);
    auto& s = coin(rng) ? layers[k - 1].analytic : layers[k - 1].anti_analytic;
    tail.push_back({&s, j, degree_weight(kind, k, j), 0.5 + 0.5 * unit(rng), angle(rng)});
  }

  // rhs from the stored first-order coefficients, so lhs = fill * rhs to rounding.
  const double rhs = 1.0 - first_order_budget(LayeredSeries(layers));
  place(tail, fill * rhs);
  return PolyharmonicMap(std::move(layers));
}

}  // namespace polyharm
