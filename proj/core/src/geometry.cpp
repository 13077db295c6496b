#include "polyharm/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "polyharm/errors.hpp"

namespace polyharm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTwoPi = 2.0 * std::numbers::pi;

CertificateReport ratio_certificate(const char* name, const LayeredSeries& numerator,
                                    const LayeredSeries& denominator, const PolarGrid& grid,
                                    double tolerance, double origin_bound) {
  CertificateReport rep;
  rep.name = name;
  rep.min_value = kInf;
  rep.auxiliary_min = kInf;
  rep.origin_bound = origin_bound;
  grid.for_each([&](double r, double theta, Complex z) {
    const Complex den = eval(denominator, z);
    const double mag = std::abs(den);
    if (mag <= kDenominatorFloor)
      throw DenominatorCollapse(std::string(name) + ": denominator collapsed on the grid", r, theta);
    rep.auxiliary_min = std::min(rep.auxiliary_min, mag);
    const double v = (eval(numerator, z) / den).real();
    if (v < rep.min_value) {
      rep.min_value = v;
      rep.argmin = {r, theta};
    }
  });
  rep.pass = rep.min_value > tolerance && rep.auxiliary_min > kDenominatorFloor && origin_bound > 0.0;
  return rep;
}

// Per-point coefficients of Q = cos(s) p1 - sin(s) p2 + cos(d) p3 + sin(d) p4,
// s = alpha + beta, d = alpha - beta.
struct AngleTerms {
  double p1, p2, p3, p4;

  double q(double cs, double ss, double cd, double sd) const noexcept {
    return cs * p1 - ss * p2 + cd * p3 + sd * p4;
  }
};

AngleTerms angle_terms(const LayeredSeries& f, Complex z) {
  const double rho = std::norm(z);
  Complex h{}, g{};
  double weight = 1.0;
  for (const auto& l : f.layers()) {
    h += weight * detail::horner_derivative_from_one(l.analytic.coeffs(), z);
    g += weight * detail::horner_derivative_from_one(l.anti_analytic.coeffs(), z);
    weight *= rho;
  }
  const Complex z2 = z * z;
  const Complex hz2 = h * z2;
  const Complex gz2 = g * z2;
  return {h.real() - gz2.real(), h.imag() + gz2.imag(), g.real() - hz2.real(),
          hz2.imag() + g.imag()};
}

double terms_minimum(const std::vector<AngleTerms>& pts, double alpha, double beta,
                     double abort_below) {
  const double s = alpha + beta, d = alpha - beta;
  const double cs = std::cos(s), ss = std::sin(s), cd = std::cos(d), sd = std::sin(d);
  double m = kInf;
  for (const auto& t : pts) {
    m = std::min(m, t.q(cs, ss, cd, sd));
    if (m <= abort_below) break;
  }
  return m;
}

std::vector<AngleTerms> all_terms(const LayeredSeries& f, const PolarGrid& grid) {
  std::vector<AngleTerms> pts;
  pts.reserve(grid.size());
  grid.for_each([&](double, double, Complex z) { pts.push_back(angle_terms(f, z)); });
  return pts;
}

// Thinned grid, outermost circle first: Q is usually smallest near the boundary,
// which makes the early abort in terms_minimum effective.
std::vector<AngleTerms> coarse_terms(const LayeredSeries& f, const PolarGrid& grid) {
  const auto radii = grid.radii();
  const auto angles = grid.angles();
  const std::size_t rstride = std::max<std::size_t>(1, radii.size() / 8);
  const std::size_t astride = std::max<std::size_t>(1, angles.size() / 64);
  std::vector<AngleTerms> pts;
  for (std::size_t i = radii.size(); i-- > 0;) {
    if ((radii.size() - 1 - i) % rstride != 0) continue;
    for (std::size_t m = 0; m < angles.size(); m += astride)
      pts.push_back(angle_terms(f, std::polar(radii[i], angles[m])));
  }
  return pts;
}

}  // namespace

double origin_ratio_bound(const LayeredSeries& f) {
  const double b = std::abs(f.b(1, 1));
  return (1.0 - b * b) / ((1.0 + b) * (1.0 + b));
}

CertificateReport starlike_certificate(const PolyharmonicMap& f, const PolarGrid& grid,
                                       double tolerance) {
  return ratio_certificate("starlike", apply_L(f), f, grid, tolerance, origin_ratio_bound(f));
}

CertificateReport convex_certificate(const PolyharmonicMap& f, const PolarGrid& grid,
                                     double tolerance) {
  const auto lf = apply_L(f);
  return ratio_certificate("convex", apply_L(lf), lf, grid, tolerance, origin_ratio_bound(f));
}

CertificateReport sense_preserving_check(const PolyharmonicMap& f, const PolarGrid& grid,
                                         double tolerance) {
  CertificateReport rep;
  rep.name = "sense";
  rep.auxiliary_min = kInf;
  rep.min_value = jacobian(f, Complex{});
  rep.argmin = {0.0, 0.0};
  grid.for_each([&](double r, double theta, Complex z) {
    const double v = jacobian(f, z);
    if (v < rep.min_value) {
      rep.min_value = v;
      rep.argmin = {r, theta};
    }
  });
  rep.pass = rep.min_value > tolerance;
  return rep;
}

double angle_condition_minimum(const LayeredSeries& f, double alpha, double beta,
                               const PolarGrid& grid) {
  return terms_minimum(all_terms(f, grid), alpha, beta, -kInf);
}

AngleSearchResult theorem7_search(const PolyharmonicMap& f, std::size_t angle_steps,
                                  const PolarGrid& grid) {
  if (angle_steps < 4) throw InvalidArgument("angle search needs at least 4 steps per angle");
  const auto coarse = coarse_terms(f, grid);
  const double step = kTwoPi / static_cast<double>(angle_steps);

  std::size_t best_i = 0, best_l = 0;
  double best = -kInf;
  for (std::size_t i = 0; i < angle_steps; ++i)
    for (std::size_t l = 0; l < angle_steps; ++l) {
      const double v = terms_minimum(coarse, step * static_cast<double>(i),
                                     step * static_cast<double>(l), best);
      if (v > best) {
        best = v;
        best_i = i;
        best_l = l;
      }
    }

  const auto full = all_terms(f, grid);
  double alpha = step * static_cast<double>(best_i);
  double beta = step * static_cast<double>(best_l);
  best = terms_minimum(full, alpha, beta, -kInf);
  double h = step;
  for (int pass = 0; pass < 5; ++pass) {
    h *= 0.5;
    double next_alpha = alpha, next_beta = beta, next_best = best;
    for (int da = -1; da <= 1; ++da)
      for (int db = -1; db <= 1; ++db) {
        if (da == 0 && db == 0) continue;
        const double a = alpha + da * h, b = beta + db * h;
        const double v = terms_minimum(full, a, b, next_best);
        if (v > next_best) {
          next_best = v;
          next_alpha = a;
          next_beta = b;
        }
      }
    alpha = next_alpha;
    beta = next_beta;
    best = next_best;
  }

  auto wrap = [](double a) {
    double r = std::fmod(a, kTwoPi);
    return r < 0.0 ? r + kTwoPi : r;
  };
  return {wrap(alpha), wrap(beta), best, best > 0.0};
}

}  // namespace polyharm
