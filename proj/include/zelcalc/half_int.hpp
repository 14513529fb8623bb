#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>

namespace zelcalc {

// Exact element of (1/2)Z, stored as twice its value.
class HalfInt {
 public:
  constexpr HalfInt() = default;

  static constexpr HalfInt from_doubled(std::int64_t doubled) {
    HalfInt h;
    h.doubled_ = doubled;
    return h;
  }
  static constexpr HalfInt from_int(std::int64_t value) { return from_doubled(2 * value); }

  constexpr std::int64_t doubled() const { return doubled_; }
  constexpr bool is_integral() const { return doubled_ % 2 == 0; }

  // floor(value) and the integer value when integral.
  constexpr std::int64_t floor() const {
    return doubled_ >= 0 ? doubled_ / 2 : -((-doubled_ + 1) / 2);
  }

  constexpr HalfInt operator-() const { return from_doubled(-doubled_); }
  constexpr HalfInt operator+(HalfInt o) const { return from_doubled(doubled_ + o.doubled_); }
  constexpr HalfInt operator-(HalfInt o) const { return from_doubled(doubled_ - o.doubled_); }
  constexpr HalfInt operator+(std::int64_t k) const { return from_doubled(doubled_ + 2 * k); }
  constexpr HalfInt operator-(std::int64_t k) const { return from_doubled(doubled_ - 2 * k); }
  constexpr HalfInt& operator+=(HalfInt o) {
    doubled_ += o.doubled_;
    return *this;
  }

  constexpr auto operator<=>(const HalfInt&) const = default;
  constexpr bool operator==(const HalfInt&) const = default;

  // "3/2", "-1/2", "2", "0".
  std::string str() const;

 private:
  std::int64_t doubled_ = 0;
};

constexpr HalfInt operator""_h(unsigned long long v) {
  return HalfInt::from_int(static_cast<std::int64_t>(v));
}

// a/2 for an integer a.
constexpr HalfInt half(std::int64_t numerator) { return HalfInt::from_doubled(numerator); }

}  // namespace zelcalc

template <>
struct std::hash<zelcalc::HalfInt> {
  std::size_t operator()(zelcalc::HalfInt h) const noexcept {
    return std::hash<std::int64_t>{}(h.doubled());
  }
};
