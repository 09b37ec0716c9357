#ifndef TMS_EXT_VALUE_HPP
#define TMS_EXT_VALUE_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace tms {

/// A value in [0, inf]: an exact nonnegative rational or infinity.
///
/// Finite values are kept reduced. There is deliberately no subtraction:
/// the measure of a difference is always computed as the measure of the
/// difference set.
class ExtValue {
 public:
  constexpr ExtValue() = default;
  /// Throws std::invalid_argument if `den` is zero.
  ExtValue(std::uint64_t num, std::uint64_t den = 1);

  static constexpr ExtValue infinity() { return ExtValue(Infinite{}); }
  static constexpr ExtValue zero() { return ExtValue(); }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }
  constexpr bool is_zero() const { return !infinite_ && num_ == 0; }
  constexpr std::uint64_t numerator() const { return num_; }
  constexpr std::uint64_t denominator() const { return den_; }

  /// Exact sum; throws std::overflow_error if the reduced result does not fit.
  friend ExtValue operator+(const ExtValue& a, const ExtValue& b);
  ExtValue& operator+=(const ExtValue& o) { return *this = *this + o; }

  friend bool operator==(const ExtValue&, const ExtValue&) = default;
  friend std::strong_ordering operator<=>(const ExtValue& a, const ExtValue& b);

  /// "p", "p/q" or "inf".
  std::string to_string() const;
  /// Parses NONNEG_INT | NONNEG_INT "/" POS_INT | "inf"; the fraction is reduced.
  static std::optional<ExtValue> parse(std::string_view text);

 private:
  struct Infinite {};
  constexpr explicit ExtValue(Infinite) : num_(0), den_(1), infinite_(true) {}

  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
  bool infinite_ = false;
};

}  // namespace tms

#endif  // TMS_EXT_VALUE_HPP
