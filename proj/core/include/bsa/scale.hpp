#ifndef BSA_SCALE_HPP
#define BSA_SCALE_HPP

#include <cmath>
#include <limits>

#include "bsa/errors.hpp"

namespace bsa {

/// Resolution of (+inf) + (-inf) in extended-real sums: conjunctive
/// collapses to -inf, disjunctive to +inf.
enum class InfinityMode { conjunctive, disjunctive };

enum class Sign : int { negative = -1, zero = 0, positive = 1 };

namespace detail {
inline double checked_interval(double v, double lo, double hi, const char* what) {
  if (!std::isfinite(v)) throw InvalidNumber(std::string(what) + ": value is not a finite number");
  if (v < lo || v > hi) throw OutOfRange(std::string(what) + ": value outside carrier interval");
  return v == 0.0 ? 0.0 : v;  // normalize -0 so sign_of(0) is 0
}
}  // namespace detail

/// A validated point of [-1, 1].
class BipolarValue {
 public:
  explicit BipolarValue(double v) : v_(detail::checked_interval(v, -1.0, 1.0, "BipolarValue")) {}
  double value() const noexcept { return v_; }
  BipolarValue negated() const noexcept { return BipolarValue(v_ == 0.0 ? 0.0 : -v_, 0); }
  friend bool operator==(BipolarValue a, BipolarValue b) noexcept { return a.v_ == b.v_; }

 private:
  BipolarValue(double v, int) noexcept : v_(v) {}
  double v_;
};

/// A validated point of [0, 1].
class UnitValue {
 public:
  explicit UnitValue(double v) : v_(detail::checked_interval(v, 0.0, 1.0, "UnitValue")) {}
  double value() const noexcept { return v_; }
  friend bool operator==(UnitValue a, UnitValue b) noexcept { return a.v_ == b.v_; }

 private:
  double v_;
};

/// A real number or one of the two infinities; never NaN.
class ExtendedReal {
 public:
  explicit ExtendedReal(double v) : v_(v == 0.0 ? 0.0 : v) {
    if (std::isnan(v)) throw InvalidNumber("ExtendedReal: NaN rejected");
  }
  double value() const noexcept { return v_; }
  bool finite() const noexcept { return std::isfinite(v_); }
  static ExtendedReal pos_inf() { return ExtendedReal(std::numeric_limits<double>::infinity()); }
  static ExtendedReal neg_inf() { return ExtendedReal(-std::numeric_limits<double>::infinity()); }
  friend bool operator==(ExtendedReal a, ExtendedReal b) noexcept { return a.v_ == b.v_; }

 private:
  double v_;
};

inline BipolarValue make_bipolar(double v) { return BipolarValue(v); }
inline UnitValue make_unit(double v) { return UnitValue(v); }

inline int sign_int(double x) noexcept { return x > 0.0 ? 1 : (x < 0.0 ? -1 : 0); }

inline Sign sign_of(double x) noexcept { return static_cast<Sign>(sign_int(x)); }
inline Sign sign_of(BipolarValue x) noexcept { return sign_of(x.value()); }

/// Total extended-real addition; the indeterminate form inf + (-inf) is
/// resolved by the mode.
inline double ext_add(double a, double b, InfinityMode mode) noexcept {
  if (std::isinf(a) && std::isinf(b) && std::signbit(a) != std::signbit(b)) {
    const double inf = std::numeric_limits<double>::infinity();
    return mode == InfinityMode::conjunctive ? -inf : inf;
  }
  return a + b;
}

inline ExtendedReal ext_add(ExtendedReal a, ExtendedReal b, InfinityMode mode) {
  return ExtendedReal(ext_add(a.value(), b.value(), mode));
}

}  // namespace bsa

#endif
