// Copyright 2026 The hbkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HBKIT_HALF_INT_HPP_
#define HBKIT_HALF_INT_HPP_

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace hbkit {

// Exact multiple of 1/2, stored doubled. Houses hyperbolicity values and
// Gromov products; no floating point is involved anywhere.
class HalfInt {
 public:
  constexpr HalfInt() = default;

  static constexpr HalfInt FromDoubled(std::int64_t doubled) {
    HalfInt h;
    h.doubled_ = doubled;
    return h;
  }
  static constexpr HalfInt FromInt(std::int64_t value) {
    return FromDoubled(2 * value);
  }

  constexpr std::int64_t doubled() const { return doubled_; }
  constexpr bool is_integer() const { return doubled_ % 2 == 0; }

  // Floor of the represented value.
  constexpr std::int64_t Floor() const {
    return doubled_ >= 0 ? doubled_ / 2 : -((-doubled_ + 1) / 2);
  }
  constexpr std::int64_t Ceil() const { return -FromDoubled(-doubled_).Floor(); }

  constexpr HalfInt operator+(HalfInt o) const {
    return FromDoubled(doubled_ + o.doubled_);
  }
  constexpr HalfInt operator-(HalfInt o) const {
    return FromDoubled(doubled_ - o.doubled_);
  }

  constexpr auto operator<=>(const HalfInt&) const = default;

  // "3", "3/2", "-1/2".
  std::string ToString() const {
    if (is_integer()) return std::to_string(doubled_ / 2);
    return std::to_string(doubled_) + "/2";
  }

 private:
  std::int64_t doubled_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, HalfInt h) {
  return os << h.ToString();
}

}  // namespace hbkit

#endif  // HBKIT_HALF_INT_HPP_
