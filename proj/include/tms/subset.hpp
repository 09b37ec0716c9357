#ifndef TMS_SUBSET_HPP
#define TMS_SUBSET_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>

namespace tms {

/// Largest supported ground set.
inline constexpr int kMaxPoints = 16;

/// A set of points of a finite ground set, stored as a bit mask (bit i = point i).
///
/// The ground size is carried by the owning structure (Topology, Space); a
/// Subset on its own only knows its members. Ordering is by bit pattern, which
/// is the order used for every "lexicographically smallest" witness.
class Subset {
 public:
  using Bits = std::uint32_t;

  constexpr Subset() = default;
  constexpr explicit Subset(Bits bits) : bits_(bits) {}

  static constexpr Subset full(int n) { return Subset(n >= 32 ? ~Bits{0} : ((Bits{1} << n) - 1)); }
  static constexpr Subset singleton(int point) { return Subset(Bits{1} << point); }

  constexpr Bits bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int point) const { return (bits_ >> point) & 1U; }
  constexpr bool subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(Subset other) const { return (bits_ & other.bits_) != 0; }
  /// Index of the smallest member; undefined on the empty set.
  constexpr int lowest() const { return std::countr_zero(bits_); }

  constexpr Subset with(int point) const { return Subset(bits_ | (Bits{1} << point)); }
  constexpr Subset without(int point) const { return Subset(bits_ & ~(Bits{1} << point)); }
  /// Complement relative to `universe`.
  constexpr Subset complement_in(Subset universe) const { return Subset(universe.bits_ & ~bits_); }

  friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.bits_ | b.bits_); }
  friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.bits_ & b.bits_); }
  friend constexpr Subset operator-(Subset a, Subset b) { return Subset(a.bits_ & ~b.bits_); }
  constexpr Subset& operator|=(Subset o) { bits_ |= o.bits_; return *this; }
  constexpr Subset& operator&=(Subset o) { bits_ &= o.bits_; return *this; }
  constexpr Subset& operator-=(Subset o) { bits_ &= ~o.bits_; return *this; }

  friend constexpr bool operator==(Subset, Subset) = default;
  friend constexpr auto operator<=>(Subset a, Subset b) { return a.bits_ <=> b.bits_; }

  /// Calls `fn(point)` for each member in increasing order.
  template <typename Fn>
  constexpr void for_each(Fn&& fn) const {
    for (Bits rest = bits_; rest != 0; rest &= rest - 1) fn(std::countr_zero(rest));
  }

 private:
  Bits bits_ = 0;
};

/// Calls `fn(sub)` for every subset of `s`, in increasing bit order.
template <typename Fn>
constexpr void for_each_subset(Subset s, Fn&& fn) {
  const Subset::Bits mask = s.bits();
  Subset::Bits sub = 0;
  while (true) {
    fn(Subset(sub));
    if (sub == mask) break;
    sub = (sub - mask) & mask;
  }
}

}  // namespace tms

template <>
struct std::hash<tms::Subset> {
  std::size_t operator()(tms::Subset s) const noexcept { return std::hash<std::uint32_t>{}(s.bits()); }
};

#endif  // TMS_SUBSET_HPP
