#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace defect_robust {

/// Topological charge stored exactly as a count of half units, so nematic
/// charges {0, +-1/2, +-1, ...} and polar integers share one type.
class Charge {
 public:
  constexpr Charge() = default;

  static constexpr Charge from_halves(int halves) { return Charge(halves); }
  static constexpr Charge from_int(int q) { return Charge(2 * q); }

  /// Accepts "1/2", "-3/2", "1", "-0.5", "1.5".
  static Charge parse(std::string_view text);

  constexpr int halves() const { return halves_; }
  constexpr double value() const { return halves_ / 2.0; }
  constexpr bool is_integer() const { return halves_ % 2 == 0; }
  constexpr bool is_zero() const { return halves_ == 0; }

  constexpr Charge operator-() const { return Charge(-halves_); }
  constexpr Charge operator+(Charge o) const { return Charge(halves_ + o.halves_); }
  constexpr Charge operator-(Charge o) const { return Charge(halves_ - o.halves_); }
  constexpr Charge& operator+=(Charge o) {
    halves_ += o.halves_;
    return *this;
  }

  constexpr auto operator<=>(const Charge&) const = default;

  /// "0", "1/2", "-1", "-3/2".
  std::string to_string() const;

 private:
  constexpr explicit Charge(int halves) : halves_(halves) {}
  int halves_ = 0;
};

}  // namespace defect_robust
