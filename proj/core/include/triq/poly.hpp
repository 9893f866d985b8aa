#pragma once

// Sparse multivariate polynomials over the ternary variable universe used by
// the Omega-process engine: six groups (x, y, z, xi, eta, zeta), up to three
// copies per group, three components per copy.  Exponents are packed as 4-bit
// nibbles into a fixed-width key, so hashing and arithmetic on exponent
// vectors are a handful of word operations.

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace triq {

using Complex = std::complex<double>;

enum class Group : std::uint8_t { X = 0, Y, Z, Xi, Eta, Zeta };

constexpr int kGroupCount = 6;
constexpr int kCopyCount = 3;   // Omega operators are 3x3 determinants
constexpr int kIndexCount = 3;  // ternary variables
constexpr int kVarCount = kGroupCount * kCopyCount * kIndexCount;  // 54

const char* group_name(Group g);

/// One variable of the universe: (group, copy, index), copy and index 1-based.
struct VarId {
  Group group;
  std::uint8_t copy;   // 1..3
  std::uint8_t index;  // 1..3

  VarId(Group g, int copy_, int index_);

  int code() const {
    return static_cast<int>(group) * 9 + (copy - 1) * 3 + (index - 1);
  }
  static VarId from_code(int code);

  std::string name() const;  // e.g. "x2^(3)" = group x, index 2, copy 3

  friend bool operator==(const VarId&, const VarId&) = default;
  friend auto operator<=>(const VarId&, const VarId&) = default;
};

/// Exponent vector over the 54-variable universe, one nibble per variable.
/// Individual exponents are limited to 15; products additionally require both
/// operand exponents <= 7 so the nibble add cannot carry.
class Monomial {
 public:
  Monomial() = default;

  int exponent(VarId v) const {
    const int c = v.code();
    return static_cast<int>((words_[c >> 4] >> ((c & 15) * 4)) & 0xFULL);
  }
  void set_exponent(VarId v, int e);

  /// Sum of exponent vectors (monomial product). Throws std::overflow_error
  /// if a nibble could carry.
  Monomial plus(const Monomial& o) const;

  /// Decrement the exponent of v (which must be positive).
  Monomial minus_one(VarId v) const;

  int total_degree() const;
  int degree_in(Group g, int copy) const;
  int degree_in(Group g) const;
  bool is_unit() const;  // degree 0

  template <class F>
  void for_each(F&& f) const {  // f(VarId, exponent) over set variables
    for (int w = 0; w < 4; ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const int nib = std::countr_zero(bits) >> 2;
        const int code = (w << 4) + nib;
        if (code >= kVarCount) return;
        const int e = static_cast<int>((words_[w] >> (nib * 4)) & 0xFULL);
        if (e) f(VarId::from_code(code), e);
        bits &= ~(0xFULL << (nib * 4));
      }
    }
  }

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::uint64_t w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdULL;
      h ^= h >> 33;
    }
    return static_cast<std::size_t>(h);
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  std::string str() const;  // "x1^(2) y3^(2)^2" style, empty for the unit

 private:
  std::array<std::uint64_t, 4> words_{};
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Sparse polynomial: exponent vector -> complex coefficient.  Exact-zero
/// coefficients are never stored; no other pruning happens unless requested.
class SparsePoly {
 public:
  using TermMap = std::unordered_map<Monomial, Complex, MonomialHash>;

  SparsePoly() = default;

  static SparsePoly constant(Complex c);
  static SparsePoly variable(VarId v);

  void add_term(const Monomial& m, Complex c);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  Complex coefficient(const Monomial& m) const;

  bool is_constant() const;
  /// Value of a degree-0 polynomial (zero polynomial included).
  /// Throws std::logic_error if terms of positive degree remain.
  Complex constant_value() const;

  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  SparsePoly scaled(Complex c) const;

  int max_degree_in(Group g, int copy) const;
  int max_degree_in(Group g) const;

  /// Olver trace: every variable (g, copy, i) -> (g, 1, i), terms merged.
  SparsePoly traced() const;

  /// Move every variable to the given copy (requires merged exponents <= 15).
  SparsePoly with_copy(int copy) const;

  /// Group-wise renaming (copy and index preserved).
  SparsePoly renamed_groups(std::span<const std::pair<Group, Group>> map) const;

  /// Drop coefficients with |c| <= eps (escape hatch against denormal buildup).
  void prune(double eps);

  /// Deterministic dump, one term per line: "coeff  var^exp var^exp ...".
  std::string dump() const;

  const TermMap& terms() const { return terms_; }

 private:
  TermMap terms_;
};

SparsePoly poly_mul(const SparsePoly& p, const SparsePoly& q);
SparsePoly poly_diff(const SparsePoly& p, VarId v);

}  // namespace triq
