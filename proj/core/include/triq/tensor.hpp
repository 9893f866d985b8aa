#pragma once

// Three-qutrit coefficient tensors Gamma_ijk and invertible local operations.
//
// Qutrit labelling is fixed throughout: |+> -> index 3, |0> -> index 2,
// |-> -> index 1.  Storage is row-major over (i, j, k), 1-based indices:
// flat position 9(i-1) + 3(j-1) + (k-1).

#include <array>
#include <complex>
#include <cstdint>
#include <span>

#include <Eigen/Dense>

namespace triq {

using Complex = std::complex<double>;

class Tensor333 {
 public:
  Tensor333() = default;

  /// Row-major (i, j, k) coefficients; rejects non-finite input naming the
  /// offending flat index.
  static Tensor333 from_coefficients(std::span<const Complex, 27> coeffs);

  Complex& at(int i, int j, int k) { return g_[flat(i, j, k)]; }
  Complex at(int i, int j, int k) const { return g_[flat(i, j, k)]; }

  std::span<const Complex, 27> flat_view() const { return std::span<const Complex, 27>(g_); }

  double frobenius_norm() const;
  Tensor333 scaled(Complex c) const;

  static int flat(int i, int j, int k) { return 9 * (i - 1) + 3 * (j - 1) + (k - 1); }

  friend bool operator==(const Tensor333&, const Tensor333&) = default;

 private:
  std::array<Complex, 27> g_{};
};

/// psi0 = N0 [ |+0-> + |-0+> + a(|+-0> + |-+0> + |0+-> + |0-+>) + b|000> ],
/// N0 = (2 + 4a^2 + b^2)^(-1/2).
Tensor333 assemble_psi0(double a, double b);

/// psi+ = N1 [ |++-> + |-++> + c(|+00> + |00+>) + d|+-+> + e|0+0> ],
/// N1 = (2 + 2c^2 + d^2 + e^2)^(-1/2).
Tensor333 assemble_psi_plus(double c, double d, double e);

/// Mirror of psi+ under + <-> -.
Tensor333 assemble_psi_minus(double c, double d, double e);

/// Three invertible 3x3 complex matrices acting on the legs.
struct LocalOp {
  Eigen::Matrix3cd l1, l2, l3;

  /// Throws std::invalid_argument if any |det| <= 1e-12.
  static LocalOp checked(const Eigen::Matrix3cd& l1, const Eigen::Matrix3cd& l2,
                         const Eigen::Matrix3cd& l3);

  /// All three determinants within 1e-10 of 1.
  bool is_sl() const;

  /// Per-leg matrix products (this after other).
  LocalOp compose_after(const LocalOp& other) const;
};

/// Gamma'_ijk = sum_pqr (L1)_ip (L2)_jq (L3)_kr Gamma_pqr.
Tensor333 apply_local(const Tensor333& t, const LocalOp& op);

/// Deterministic-for-seed complex 3x3 matrix with |det - 1| < 1e-12, entries
/// O(1); principal branch of the cube root; resamples while |det| < 1e-6.
Eigen::Matrix3cd random_sl3(std::uint64_t seed);

}  // namespace triq
