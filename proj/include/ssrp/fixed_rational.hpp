#ifndef SSRP_FIXED_RATIONAL_HPP
#define SSRP_FIXED_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

#include "ssrp/ext_dist.hpp"

namespace ssrp {

/// Exact binary fixed-point number a / 2^32, or infinity. Addition is exact
/// and saturates at infinity.
class FixedRational {
 public:
  static constexpr int kScaleBits = 32;
  static constexpr std::int64_t kOne = std::int64_t{1} << kScaleBits;
  static constexpr std::int64_t kInfRaw = std::numeric_limits<std::int64_t>::max();

  constexpr FixedRational() = default;

  static constexpr FixedRational from_raw(std::int64_t raw) { return FixedRational(raw); }
  static constexpr FixedRational inf() { return FixedRational(kInfRaw); }
  static FixedRational from_int(std::int64_t v) {
    if (v >= (std::int64_t{1} << 30) || v <= -(std::int64_t{1} << 30)) throw Error("integer too large for fixed point");
    return FixedRational(v * kOne);
  }
  /// a / 2^k with k <= 32.
  static FixedRational from_dyadic(std::int64_t a, int k) {
    if (k < 0 || k > kScaleBits) throw Error("dyadic exponent out of range");
    const std::int64_t bound = std::int64_t{1} << (62 - (kScaleBits - k));
    if (a >= bound || a <= -bound) throw Error("dyadic numerator too large");
    return FixedRational(a * (std::int64_t{1} << (kScaleBits - k)));
  }

  /// Parses "inf", an integer, or a decimal whose value is a multiple of 2^-32.
  static FixedRational parse(const std::string& s) {
    if (s == "inf") return inf();
    if (s.empty()) throw Error("empty number");
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '-') {
      neg = true;
      ++i;
    }
    __int128 whole = 0;
    std::size_t digits = 0;
    for (; i < s.size() && s[i] >= '0' && s[i] <= '9'; ++i, ++digits) {
      whole = whole * 10 + (s[i] - '0');
      if (whole >= (__int128{1} << 30)) throw Error("number too large: '" + s + "'");
    }
    __int128 frac = 0, frac_den = 1;
    if (i < s.size() && s[i] == '.') {
      ++i;
      for (; i < s.size() && s[i] >= '0' && s[i] <= '9'; ++i, ++digits) {
        if (frac_den >= static_cast<__int128>(1e36)) throw Error("too many fractional digits: '" + s + "'");
        frac = frac * 10 + (s[i] - '0');
        frac_den *= 10;
      }
    }
    if (i != s.size() || digits == 0) throw Error("bad number '" + s + "'");
    const __int128 scaled = frac * kOne;
    if (scaled % frac_den != 0) throw Error("'" + s + "' is not a multiple of 2^-32");
    const auto raw = static_cast<std::int64_t>(whole * kOne + scaled / frac_den);
    return FixedRational(neg ? -raw : raw);
  }

  constexpr bool is_inf() const { return raw_ == kInfRaw; }
  constexpr bool finite() const { return raw_ != kInfRaw; }
  constexpr std::int64_t raw() const { return raw_; }
  bool is_integer() const { return finite() && raw_ % kOne == 0; }
  std::int64_t to_int() const {
    if (!is_integer()) throw Error("fixed-point value is not an integer");
    return raw_ / kOne;
  }
  double to_double() const {
    return is_inf() ? std::numeric_limits<double>::infinity() : static_cast<double>(raw_) / static_cast<double>(kOne);
  }

  friend constexpr auto operator<=>(FixedRational, FixedRational) = default;

  friend FixedRational operator+(FixedRational a, FixedRational b) {
    if (a.is_inf() || b.is_inf()) return inf();
    std::int64_t r;
    if (__builtin_add_overflow(a.raw_, b.raw_, &r) || r == kInfRaw) throw Error("fixed-point overflow");
    return FixedRational(r);
  }
  friend FixedRational operator-(FixedRational a, FixedRational b) {
    if (b.is_inf()) throw Error("subtracting infinity");
    if (a.is_inf()) return a;
    return FixedRational(a.raw_ - b.raw_);
  }

  /// Exact decimal rendering (binary fractions always terminate).
  std::string to_string() const {
    if (is_inf()) return "inf";
    std::string out;
    std::int64_t r = raw_;
    if (r < 0) {
      out += '-';
      r = -r;
    }
    out += std::to_string(r >> kScaleBits);
    std::uint64_t frac = static_cast<std::uint64_t>(r) & (static_cast<std::uint64_t>(kOne) - 1);
    if (frac != 0) {
      out += '.';
      while (frac != 0) {
        frac *= 10;
        out += static_cast<char>('0' + (frac >> kScaleBits));
        frac &= static_cast<std::uint64_t>(kOne) - 1;
      }
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, FixedRational f) { return os << f.to_string(); }

 private:
  constexpr explicit FixedRational(std::int64_t raw) : raw_(raw) {}
  std::int64_t raw_ = kInfRaw;
};

}  // namespace ssrp

#endif  // SSRP_FIXED_RATIONAL_HPP
