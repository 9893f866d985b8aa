#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace triq {

/// A block-solution denominator fell below tolerance; `denominator` names it.
class singular_block_error : public std::runtime_error {
 public:
  singular_block_error(std::string denominator, double value)
      : std::runtime_error("singular block denominator " + denominator +
                           " = " + std::to_string(value)),
        denominator_(std::move(denominator)),
        value_(value) {}

  const std::string& denominator() const { return denominator_; }
  double value() const { return value_; }

 private:
  std::string denominator_;
  double value_;
};

/// The quartic has no real root within tolerance; carries all four roots.
class no_real_root_error : public std::runtime_error {
 public:
  explicit no_real_root_error(std::array<std::complex<double>, 4> roots)
      : std::runtime_error("quartic has no real root within tolerance"),
        roots_(roots) {}

  const std::array<std::complex<double>, 4>& roots() const { return roots_; }

 private:
  std::array<std::complex<double>, 4> roots_;
};

/// Bisection bracket endpoints do not straddle a sign change.
class no_bracket_error : public std::runtime_error {
 public:
  no_bracket_error(double ga, double gb)
      : std::runtime_error("no sign change on bracket: g(a) = " +
                           std::to_string(ga) + ", g(b) = " + std::to_string(gb)),
        ga_(ga),
        gb_(gb) {}

  double g_at_a() const { return ga_; }
  double g_at_b() const { return gb_; }

 private:
  double ga_, gb_;
};

/// A flow terminated before the requested step; carries the last completed step.
class truncated_flow_error : public std::runtime_error {
 public:
  truncated_flow_error(int last_step, std::string why)
      : std::runtime_error("flow truncated at step " + std::to_string(last_step) +
                           ": " + why),
        last_step_(last_step) {}

  int last_step() const { return last_step_; }

 private:
  int last_step_;
};

}  // namespace triq
