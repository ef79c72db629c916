#ifndef SSRP_EXT_DIST_HPP
#define SSRP_EXT_DIST_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace ssrp {

using VertexId = std::uint32_t;
inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

/// Library error type. Parse failures, precondition violations and
/// internal consistency checks all raise this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Natural distance in edge units, or infinity. Addition saturates.
class ExtDist {
 public:
  using Rep = std::uint32_t;
  static constexpr Rep kInfRep = std::numeric_limits<Rep>::max();

  constexpr ExtDist() = default;
  constexpr explicit ExtDist(Rep v) : v_(v) {}

  static constexpr ExtDist inf() { return ExtDist(kInfRep); }
  static constexpr ExtDist zero() { return ExtDist(0); }

  constexpr bool finite() const { return v_ != kInfRep; }
  constexpr bool is_inf() const { return v_ == kInfRep; }
  constexpr Rep value() const { return v_; }

  friend constexpr auto operator<=>(ExtDist, ExtDist) = default;

  friend constexpr ExtDist operator+(ExtDist a, ExtDist b) {
    if (a.is_inf() || b.is_inf()) return inf();
    const std::uint64_t s = std::uint64_t{a.v_} + b.v_;
    return s >= kInfRep ? inf() : ExtDist(static_cast<Rep>(s));
  }
  friend constexpr ExtDist operator+(ExtDist a, Rep b) { return a + ExtDist(b); }

  ExtDist& operator+=(ExtDist b) { return *this = *this + b; }

  /// a - b for finite b <= a; infinity stays infinity.
  friend ExtDist minus(ExtDist a, Rep b) {
    if (a.is_inf()) return a;
    if (a.v_ < b) throw Error("ExtDist subtraction underflow");
    return ExtDist(a.v_ - b);
  }

  friend std::ostream& operator<<(std::ostream& os, ExtDist d) {
    if (d.is_inf()) return os << "inf";
    return os << d.v_;
  }

 private:
  Rep v_ = kInfRep;
};

inline constexpr ExtDist kInf = ExtDist::inf();

inline std::string to_string(ExtDist d) {
  return d.is_inf() ? std::string("inf") : std::to_string(d.value());
}

inline ExtDist parse_ext_dist(const std::string& s) {
  if (s == "inf") return kInf;
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(s, &pos);
  } catch (const std::exception&) {
    throw Error("bad distance token '" + s + "'");
  }
  if (pos != s.size() || v >= ExtDist::kInfRep) throw Error("bad distance token '" + s + "'");
  return ExtDist(static_cast<ExtDist::Rep>(v));
}

}  // namespace ssrp

#endif  // SSRP_EXT_DIST_HPP
