#pragma once

#include <compare>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace curvesys {

/// A value in (1/2)Z, stored as twice the value.
class HalfInt {
public:
  constexpr HalfInt() = default;
  static constexpr HalfInt from_twice(int twice) { return HalfInt(twice); }
  static constexpr HalfInt integer(int v) { return HalfInt(2 * v); }

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr int as_integer() const {
    if (!is_integer()) throw std::domain_error("half-integer has no integer value");
    return twice_ / 2;
  }
  constexpr double value() const { return twice_ / 2.0; }

  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.twice_ + b.twice_); }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.twice_ - b.twice_); }
  constexpr HalfInt operator-() const { return HalfInt(-twice_); }
  /// floor(|x|) as an integer.
  constexpr int floor_abs() const { return std::abs(twice_) / 2; }

  auto operator<=>(const HalfInt&) const = default;

  /// "3", "-1", "1/2", "-3/2".
  std::string to_string() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }

private:
  explicit constexpr HalfInt(int twice) : twice_(twice) {}
  int twice_ = 0;
};

/// Arc families in a four-holed sphere cut into two pants along a curve mu.
/// A and B join corresponding cuffs and carry integer indices; G and D join
/// crossed cuffs and carry half-integer indices.
enum class ArcFamily { A, B, G, D };

inline constexpr bool family_is_integral(ArcFamily f) { return f == ArcFamily::A || f == ArcFamily::B; }

inline char family_letter(ArcFamily f) { return "ABGD"[static_cast<int>(f)]; }

inline ArcFamily family_from_letter(char c) {
  switch (c) {
    case 'A': return ArcFamily::A;
    case 'B': return ArcFamily::B;
    case 'G': return ArcFamily::G;
    case 'D': return ArcFamily::D;
    default: throw std::invalid_argument(std::string("unknown arc family '") + c + "'");
  }
}

}  // namespace curvesys
