#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace polyharm {

using Complex = std::complex<double>;

/// Default truncation order for series built without an explicit order.
inline constexpr std::size_t kDefaultTruncation = 32;

inline bool is_finite(Complex z) noexcept {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Truncated power series  c_1 z + c_2 z^2 + ... + c_J z^J.
///
/// There is no constant term: every series in the mapping model vanishes at
/// the origin. Coefficients are addressed by their degree j in [1, J].
class PowerSeries {
 public:
  /// Zero series of truncation order `order` (>= 1).
  explicit PowerSeries(std::size_t order = kDefaultTruncation);

  /// `coeffs[0]` is the coefficient of z. Rejects an empty list and non-finite entries.
  explicit PowerSeries(std::vector<Complex> coeffs);

  std::size_t order() const noexcept { return coeffs_.size(); }

  /// Coefficient of z^j; zero for j > order(). Throws for j == 0.
  Complex coeff(std::size_t j) const;

  /// Sets the coefficient of z^j, 1 <= j <= order().
  void set(std::size_t j, Complex value);

  std::span<const Complex> coeffs() const noexcept { return coeffs_; }

  bool is_zero() const noexcept;

  /// Horner evaluation.
  Complex operator()(Complex z) const noexcept;

  /// Zero-padded or truncated copy.
  PowerSeries resized(std::size_t order) const;

  PowerSeries& operator+=(const PowerSeries& other);
  PowerSeries& operator*=(Complex s) noexcept;

  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator*(Complex s, PowerSeries a) { return a *= s; }
  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<Complex> coeffs_;
};

/// Dense polynomial  c_0 + c_1 z + ... + c_{N-1} z^{N-1}.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {}

  std::size_t size() const noexcept { return coeffs_.size(); }
  Complex coeff(std::size_t n) const noexcept {
    return n < coeffs_.size() ? coeffs_[n] : Complex{};
  }
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }

  Complex operator()(Complex z) const noexcept;

 private:
  std::vector<Complex> coeffs_;
};

/// Term-wise derivative. The result carries a constant term (the former c_1).
Polynomial derivative(const PowerSeries& s);
Polynomial derivative(const Polynomial& p);

namespace detail {

/// sum_{j=1}^{J} c_j z^j by Horner, c = coefficient span starting at degree 1.
inline Complex horner_from_one(std::span<const Complex> c, Complex z) noexcept {
  Complex acc{};
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
  return acc * z;
}

/// sum_{j=1}^{J} j c_j z^{j-1}, the derivative of the above, without allocating.
inline Complex horner_derivative_from_one(std::span<const Complex> c, Complex z) noexcept {
  Complex acc{};
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + static_cast<double>(i + 1) * c[i];
  return acc;
}

}  // namespace detail

}  // namespace polyharm
