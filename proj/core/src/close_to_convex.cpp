#include "polyharm/close_to_convex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "polyharm/errors.hpp"
#include "polyharm/random.hpp"

namespace polyharm {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double reduce_angle(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  return r >= kTwoPi ? 0.0 : r;
}

void require_order(std::size_t order) {
  if (order < 3) throw InvalidArgument("class-F construction needs truncation J >= 3");
}

}  // namespace

HerglotzMeasure::HerglotzMeasure(std::vector<HerglotzAtom> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw InvalidArgument("Herglotz measure needs at least one atom");
  double total = 0.0;
  for (auto& atom : atoms_) {
    if (!std::isfinite(atom.angle) || !std::isfinite(atom.weight))
      throw InvalidArgument("Herglotz atom is not finite");
    if (atom.weight < 0.0) throw InvalidArgument("Herglotz weights must be nonnegative");
    atom.angle = reduce_angle(atom.angle);
    total += atom.weight;
  }
  if (std::abs(total - 1.0) > 1e-12) throw InvalidArgument("Herglotz weights must sum to 1");
}

HerglotzMeasure HerglotzMeasure::point_mass(double angle) {
  return HerglotzMeasure({HerglotzAtom{angle, 1.0}});
}

std::vector<Complex> caratheodory_coeffs(const HerglotzMeasure& mu, std::size_t order) {
  std::vector<Complex> c(order + 1);
  c[0] = 1.5;
  for (std::size_t j = 1; j <= order; ++j) {
    Complex sum{};
    for (const auto& atom : mu.atoms())
      sum += atom.weight * std::polar(1.0, static_cast<double>(j) * atom.angle);
    c[j] = 3.0 * sum;
  }
  return c;
}

PolyharmonicMap ClassFMap::as_polyharmonic() const {
  return PolyharmonicMap({HarmonicLayer{h, g}});
}

ClassFMap build_class_f_from_coeffs(std::span<const Complex> c, double theta, std::size_t order) {
  require_order(order);
  if (c.size() < order) throw InvalidArgument("need Caratheodory coefficients c_1..c_{J-1}");
  std::vector<Complex> a(order + 1);
  a[1] = 1.0;
  for (std::size_t j = 1; j < order; ++j) {
    Complex sum{};
    for (std::size_t s = 1; s <= j; ++s) sum += static_cast<double>(s) * a[s] * c[j + 1 - s];
    a[j + 1] = sum / static_cast<double>(j * (j + 1));
  }
  ClassFMap f{PowerSeries(order), PowerSeries(order), theta};
  const Complex rot = std::polar(1.0, theta);
  for (std::size_t j = 1; j <= order; ++j) {
    f.h.set(j, a[j]);
    if (j >= 2)
      f.g.set(j, rot * static_cast<double>(j - 1) * a[j - 1] / static_cast<double>(j));
  }
  return f;
}

ClassFMap build_class_f(const HerglotzMeasure& mu, double theta, std::size_t order) {
  require_order(order);
  const auto c = caratheodory_coeffs(mu, order);
  return build_class_f_from_coeffs(c, theta, order);
}

CertificateReport verify_condition(const ClassFMap& f, const PolarGrid& grid) {
  const Polynomial hp = derivative(f.h);
  const Polynomial hpp = derivative(hp);
  CertificateReport rep;
  rep.name = "class-f-condition";
  rep.min_value = std::numeric_limits<double>::infinity();
  rep.auxiliary_min = std::numeric_limits<double>::infinity();
  grid.for_each([&](double r, double theta, Complex z) {
    const Complex d1 = hp(z);
    const double mag = std::abs(d1);
    if (mag <= kDenominatorFloor)
      throw DenominatorCollapse("h' vanishes on the grid; map leaves the class", r, theta);
    rep.auxiliary_min = std::min(rep.auxiliary_min, mag);
    const double v = (1.0 + z * hpp(z) / d1).real() + 0.5;
    if (v < rep.min_value) {
      rep.min_value = v;
      rep.argmin = {r, theta};
    }
  });
  rep.pass = rep.min_value > 0.0 && rep.auxiliary_min > kDenominatorFloor;
  return rep;
}

double fekete_szego_bound_a(double lambda) noexcept {
  return std::max(0.5, std::abs(8.0 - 9.0 * lambda) / 4.0);
}

double fekete_szego_bound_b(double lambda) noexcept { return 1.0 + std::abs(lambda) / 4.0; }

FeketeSzegoResult fekete_szego(const ClassFMap& f, double lambda) {
  if (f.h.order() < 3 || f.g.order() < 3)
    throw InvalidArgument("Fekete-Szego functionals need truncation J >= 3");
  FeketeSzegoResult r;
  r.lambda = lambda;
  r.value_a = std::abs(f.a(3) - lambda * f.a(2) * f.a(2));
  r.value_b = std::abs(f.b(3) - lambda * f.b(2) * f.b(2));
  r.bound_a = fekete_szego_bound_a(lambda);
  r.bound_b = fekete_szego_bound_b(lambda);
  return r;
}

ClassFMap extremal_witness(WitnessKind kind, std::size_t order) {
  const double angle = kind == WitnessKind::b_functional_negative ? std::numbers::pi : 0.0;
  return build_class_f(HerglotzMeasure::point_mass(angle), 0.0, order);
}

HerglotzMeasure sample_measure(std::mt19937_64& rng, std::size_t max_atoms) {
  if (max_atoms < 1) throw InvalidArgument("measure sampler needs max_atoms >= 1");
  std::uniform_int_distribution<std::size_t> count(1, max_atoms);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  std::exponential_distribution<double> gamma1(1.0);
  const std::size_t n = count(rng);
  std::vector<HerglotzAtom> atoms(n);
  double total = 0.0;
  for (auto& a : atoms) {
    a.angle = angle(rng);
    a.weight = gamma1(rng);
    total += a.weight;
  }
  for (auto& a : atoms) a.weight /= total;
  return HerglotzMeasure(std::move(atoms));
}

ClassFMap sample_class_f(std::uint64_t seed, std::size_t order, std::size_t max_atoms) {
  std::mt19937_64 rng(seed);
  const auto mu = sample_measure(rng, max_atoms);
  const double theta = std::uniform_real_distribution<double>(0.0, kTwoPi)(rng);
  return build_class_f(mu, theta, order);
}

std::vector<SweepRow> fs_sweep(const SweepOptions& options) {
  if (options.samples < 1) throw InvalidArgument("sweep needs at least one sample");
  std::vector<SweepRow> rows;
  rows.reserve(options.lambdas.size());
  for (double lambda : options.lambdas)
    rows.push_back({lambda, 0.0, fekete_szego_bound_a(lambda), 0.0, fekete_szego_bound_b(lambda)});

  auto record = [&](const ClassFMap& f) {
    for (auto& row : rows) {
      const auto r = fekete_szego(f, row.lambda);
      row.max_a = std::max(row.max_a, r.value_a);
      row.max_b = std::max(row.max_b, r.value_b);
    }
  };
  for (std::size_t i = 0; i < options.samples; ++i)
    record(sample_class_f(derive_seed(options.seed, i), 3, options.max_atoms));
  if (options.include_witnesses)
    for (auto kind : {WitnessKind::a_functional, WitnessKind::b_functional_positive,
                      WitnessKind::b_functional_negative})
      record(extremal_witness(kind, 3));
  return rows;
}

std::vector<double> lambda_range(double lambda_min, double lambda_max, double step) {
  if (!std::isfinite(lambda_min) || !std::isfinite(lambda_max) || !(step > 0.0) ||
      lambda_max < lambda_min)
    throw InvalidArgument("lambda range needs finite min <= max and step > 0");
  const auto n = static_cast<std::size_t>(std::floor((lambda_max - lambda_min) / step + 1e-6));
  std::vector<double> out;
  out.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) out.push_back(lambda_min + static_cast<double>(i) * step);
  return out;
}

}  // namespace polyharm
