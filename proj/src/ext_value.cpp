#include "tms/ext_value.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace tms {

namespace {

__extension__ typedef unsigned __int128 Wide;

std::uint64_t narrow(Wide v) {
  if (v > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("ExtValue: rational overflow");
  return static_cast<std::uint64_t>(v);
}

Wide gcd_wide(Wide a, Wide b) {
  while (b != 0) {
    const Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::optional<std::uint64_t> parse_uint(std::string_view s) {
  if (s.empty()) return std::nullopt;
  for (char c : s)
    if (c < '0' || c > '9') return std::nullopt;
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

ExtValue::ExtValue(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw std::invalid_argument("ExtValue: zero denominator");
  const std::uint64_t g = std::gcd(num, den);
  num_ = num == 0 ? 0 : num / g;
  den_ = num == 0 ? 1 : den / g;
}

ExtValue operator+(const ExtValue& a, const ExtValue& b) {
  if (a.infinite_ || b.infinite_) return ExtValue::infinity();
  if (a.num_ == 0) return b;
  if (b.num_ == 0) return a;
  if (a.den_ == b.den_) {
    Wide num = Wide{a.num_} + b.num_;
    Wide g = gcd_wide(num, a.den_);
    ExtValue r;
    r.num_ = narrow(num / g);
    r.den_ = narrow(Wide{a.den_} / g);
    return r;
  }
  const std::uint64_t g = std::gcd(a.den_, b.den_);
  const Wide num = Wide{a.num_} * (b.den_ / g) + Wide{b.num_} * (a.den_ / g);
  const Wide den = Wide{a.den_ / g} * b.den_;
  const Wide h = gcd_wide(num, den);
  ExtValue r;
  r.num_ = narrow(num / h);
  r.den_ = narrow(den / h);
  return r;
}

std::strong_ordering operator<=>(const ExtValue& a, const ExtValue& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
  return Wide{a.num_} * b.den_ <=> Wide{b.num_} * a.den_;
}

std::string ExtValue::to_string() const {
  if (infinite_) return "inf";
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::optional<ExtValue> ExtValue::parse(std::string_view text) {
  if (text == "inf") return infinity();
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    const auto n = parse_uint(text);
    if (!n) return std::nullopt;
    return ExtValue(*n);
  }
  const auto n = parse_uint(text.substr(0, slash));
  const auto d = parse_uint(text.substr(slash + 1));
  if (!n || !d || *d == 0) return std::nullopt;
  return ExtValue(*n, *d);
}

}  // namespace tms
