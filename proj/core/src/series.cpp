#include "polyharm/series.hpp"

#include <algorithm>
#include <string>

#include "polyharm/errors.hpp"

namespace polyharm {

PowerSeries::PowerSeries(std::size_t order) : coeffs_(order) {
  if (order == 0) throw InvalidArgument("power series truncation order must be >= 1");
}

PowerSeries::PowerSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw InvalidArgument("power series needs at least one coefficient");
  for (const auto& c : coeffs_)
    if (!is_finite(c)) throw InvalidArgument("power series coefficient is not finite");
}

Complex PowerSeries::coeff(std::size_t j) const {
  if (j == 0) throw InvalidArgument("power series has no constant term");
  return j <= coeffs_.size() ? coeffs_[j - 1] : Complex{};
}

void PowerSeries::set(std::size_t j, Complex value) {
  if (j == 0 || j > coeffs_.size())
    throw InvalidArgument("degree " + std::to_string(j) + " outside [1, " +
                          std::to_string(coeffs_.size()) + "]");
  if (!is_finite(value)) throw InvalidArgument("power series coefficient is not finite");
  coeffs_[j - 1] = value;
}

bool PowerSeries::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Complex c) { return c == Complex{}; });
}

Complex PowerSeries::operator()(Complex z) const noexcept {
  return detail::horner_from_one(coeffs_, z);
}

PowerSeries PowerSeries::resized(std::size_t order) const {
  PowerSeries out(order);
  std::copy_n(coeffs_.begin(), std::min(order, coeffs_.size()), out.coeffs_.begin());
  return out;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& other) {
  if (other.order() != order()) throw InvalidArgument("power series orders differ");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

PowerSeries& PowerSeries::operator*=(Complex s) noexcept {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

Complex Polynomial::operator()(Complex z) const noexcept {
  Complex acc{};
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * z + coeffs_[i];
  return acc;
}

Polynomial derivative(const PowerSeries& s) {
  std::vector<Complex> out(s.order());
  for (std::size_t j = 1; j <= s.order(); ++j) out[j - 1] = static_cast<double>(j) * s.coeff(j);
  return Polynomial(std::move(out));
}

Polynomial derivative(const Polynomial& p) {
  if (p.size() <= 1) return Polynomial({Complex{}});
  std::vector<Complex> out(p.size() - 1);
  for (std::size_t n = 1; n < p.size(); ++n) out[n - 1] = static_cast<double>(n) * p.coeff(n);
  return Polynomial(std::move(out));
}

}  // namespace polyharm
