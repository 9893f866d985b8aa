#include "triq/tensor.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace triq {

Tensor333 Tensor333::from_coefficients(std::span<const Complex, 27> coeffs) {
  Tensor333 t;
  for (int p = 0; p < 27; ++p) {
    if (!std::isfinite(coeffs[p].real()) || !std::isfinite(coeffs[p].imag()))
      throw std::invalid_argument("non-finite coefficient at flat index " +
                                  std::to_string(p));
    t.g_[p] = coeffs[p];
  }
  return t;
}

double Tensor333::frobenius_norm() const {
  double s = 0.0;
  for (const Complex& c : g_) s += std::norm(c);
  return std::sqrt(s);
}

Tensor333 Tensor333::scaled(Complex c) const {
  Tensor333 t = *this;
  for (Complex& v : t.g_) v *= c;
  return t;
}

Tensor333 assemble_psi0(double a, double b) {
  const double s = 2.0 + 4.0 * a * a + b * b;
  if (!(s > 0.0)) throw std::invalid_argument("psi0 normalization vanishes");
  const double n0 = 1.0 / std::sqrt(s);
  Tensor333 t;
  t.at(3, 2, 1) = n0;
  t.at(1, 2, 3) = n0;
  t.at(3, 1, 2) = n0 * a;
  t.at(1, 3, 2) = n0 * a;
  t.at(2, 3, 1) = n0 * a;
  t.at(2, 1, 3) = n0 * a;
  t.at(2, 2, 2) = n0 * b;
  return t;
}

Tensor333 assemble_psi_plus(double c, double d, double e) {
  const double s = 2.0 + 2.0 * c * c + d * d + e * e;
  if (!(s > 0.0)) throw std::invalid_argument("psi+ normalization vanishes");
  const double n1 = 1.0 / std::sqrt(s);
  Tensor333 t;
  t.at(3, 3, 1) = n1;      // |++->
  t.at(1, 3, 3) = n1;      // |-++>
  t.at(3, 2, 2) = n1 * c;  // |+00>
  t.at(2, 2, 3) = n1 * c;  // |00+>
  t.at(3, 1, 3) = n1 * d;  // |+-+>
  t.at(2, 3, 2) = n1 * e;  // |0+0>
  return t;
}

Tensor333 assemble_psi_minus(double c, double d, double e) {
  const double s = 2.0 + 2.0 * c * c + d * d + e * e;
  if (!(s > 0.0)) throw std::invalid_argument("psi- normalization vanishes");
  const double n1 = 1.0 / std::sqrt(s);
  Tensor333 t;
  t.at(1, 1, 3) = n1;      // |--+>
  t.at(3, 1, 1) = n1;      // |+-->
  t.at(1, 2, 2) = n1 * c;  // |-00>
  t.at(2, 2, 1) = n1 * c;  // |00->
  t.at(1, 3, 1) = n1 * d;  // |-+->
  t.at(2, 1, 2) = n1 * e;  // |0-0>
  return t;
}

LocalOp LocalOp::checked(const Eigen::Matrix3cd& l1, const Eigen::Matrix3cd& l2,
                         const Eigen::Matrix3cd& l3) {
  for (const auto* m : {&l1, &l2, &l3})
    if (std::abs(m->determinant()) <= 1e-12)
      throw std::invalid_argument("LocalOp leg is singular");
  return LocalOp{l1, l2, l3};
}

bool LocalOp::is_sl() const {
  for (const auto* m : {&l1, &l2, &l3})
    if (std::abs(m->determinant() - Complex(1.0)) >= 1e-10) return false;
  return true;
}

LocalOp LocalOp::compose_after(const LocalOp& other) const {
  return LocalOp{l1 * other.l1, l2 * other.l2, l3 * other.l3};
}

Tensor333 apply_local(const Tensor333& t, const LocalOp& op) {
  for (const auto* m : {&op.l1, &op.l2, &op.l3})
    if (std::abs(m->determinant()) <= 1e-12)
      throw std::invalid_argument("apply_local: singular leg matrix");
  Tensor333 out;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k) {
        Complex acc = 0.0;
        for (int p = 1; p <= 3; ++p)
          for (int q = 1; q <= 3; ++q)
            for (int r = 1; r <= 3; ++r)
              acc += op.l1(i - 1, p - 1) * op.l2(j - 1, q - 1) *
                     op.l3(k - 1, r - 1) * t.at(p, q, r);
        out.at(i, j, k) = acc;
      }
  return out;
}

namespace {

// Box-Muller on raw 64-bit draws keeps the stream identical across standard
// library implementations.
double normal_draw(std::mt19937_64& gen) {
  const double u1 = (static_cast<double>(gen() >> 11) + 0.5) * 0x1p-53;
  const double u2 = (static_cast<double>(gen() >> 11) + 0.5) * 0x1p-53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

}  // namespace

Eigen::Matrix3cd random_sl3(std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  for (;;) {
    Eigen::Matrix3cd m;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c)
        m(r, c) = Complex(normal_draw(gen), normal_draw(gen));
    const Complex det = m.determinant();
    if (std::abs(det) < 1e-6) continue;
    m /= std::pow(det, Complex(1.0 / 3.0));
    return m;
  }
}

}  // namespace triq
