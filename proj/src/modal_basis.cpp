#include "twbeam/modal_basis.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace twbeam {

double characteristic_residual(double beta) {
  // cos(b) cosh(b) + 1 = 0 rescaled by 2 e^{-b}.
  const double eb = std::exp(-beta);
  return std::cos(beta) * (1.0 + eb * eb) + 2.0 * eb;
}

std::vector<double> characteristic_roots(std::size_t n) {
  std::vector<double> roots;
  roots.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    const double center = (2.0 * static_cast<double>(i) - 1.0) *
                          std::numbers::pi / 2.0;
    double lo = (i == 1) ? 1.5 : center - 0.7;
    double hi = (i == 1) ? 2.0 : center + 0.7;
    double flo = characteristic_residual(lo);
    // g alternates sign across each root; 90 bisections reach the
    // floating-point limit of the bracket.
    for (int it = 0; it < 90 && hi - lo > 0.0; ++it) {
      const double mid = 0.5 * (lo + hi);
      const double fm = characteristic_residual(mid);
      if ((fm > 0.0) == (flo > 0.0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    roots.push_back(0.5 * (lo + hi));
  }
  return roots;
}

ModalBasis::ModalBasis(std::size_t count, double length)
    : count_(count), length_(length) {
  if (count_ < 1) throw std::invalid_argument("ModalBasis: count must be >= 1");
  if (!(length_ > 0.0))
    throw std::invalid_argument("ModalBasis: length must be positive");
  roots_ = characteristic_roots(count_);
  coeffs_.reserve(count_);
  for (double b : roots_) {
    const double eb = std::exp(-b);
    const double c = std::cos(b);
    const double s = std::sin(b);
    const double d = 1.0 + 2.0 * eb * c + eb * eb;
    coeffs_.push_back({b,
                       (1.0 - eb * eb - 2.0 * eb * s) / d,
                       (1.0 + eb * (c - s)) / d,
                       (s + c + eb) / d});
  }
}

void ModalBasis::check(std::size_t i, double x) const {
  if (i >= count_) throw std::out_of_range("ModalBasis: mode index");
  if (!(x >= 0.0) || !(x <= length_))
    throw std::domain_error("ModalBasis: x outside [0, L]");
}

double ModalBasis::phi(std::size_t i, double x) const {
  check(i, x);
  const ModeCoeffs& m = coeffs_[i];
  const double xi = x / length_;
  const double hyp = m.a_left * std::exp(-m.beta * xi) +
                     m.a_right * std::exp(-m.beta * (1.0 - xi));
  return hyp - std::cos(m.beta * xi) + m.sigma * std::sin(m.beta * xi);
}

double ModalBasis::phi_xx(std::size_t i, double x) const {
  check(i, x);
  const ModeCoeffs& m = coeffs_[i];
  const double xi = x / length_;
  const double hyp = m.a_left * std::exp(-m.beta * xi) +
                     m.a_right * std::exp(-m.beta * (1.0 - xi));
  const double scale = (m.beta / length_) * (m.beta / length_);
  return scale *
         (hyp + std::cos(m.beta * xi) - m.sigma * std::sin(m.beta * xi));
}

}  // namespace twbeam
