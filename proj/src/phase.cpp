// Copyright 2026 The zxkit Authors
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

#include "zxkit/phase.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace zxkit {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_radians(double r) {
  double w = std::fmod(r, kTwoPi);
  if (w < 0) w += kTwoPi;
  // fmod can return exactly 2pi after the correction for tiny negatives
  if (w >= kTwoPi) w = 0.0;
  return w;
}

}  // namespace

Phase Phase::exact(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("phase denominator is zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num, den);
  if (g == 0) g = 1;
  num /= g;
  den /= g;
  std::int64_t period = 2 * den;
  num %= period;
  if (num < 0) num += period;
  Phase p;
  p.exact_ = true;
  p.num_ = num;
  p.den_ = den;
  return p;
}

Phase Phase::numeric(double radians) {
  if (!std::isfinite(radians))
    throw std::invalid_argument("phase is not a finite number");
  Phase p;
  p.exact_ = false;
  p.num_ = 0;
  p.den_ = 1;
  p.rad_ = wrap_radians(radians);
  return p;
}

double Phase::radians() const {
  if (!exact_) return rad_;
  return std::numbers::pi * static_cast<double>(num_) /
         static_cast<double>(den_);
}

bool Phase::is_t_like(double tol) const {
  if (exact_) return den_ == 4;  // reduced, so num is odd
  double quarters = rad_ / (std::numbers::pi / 4);
  double nearest = std::round(quarters);
  if (std::abs(quarters - nearest) * (std::numbers::pi / 4) > tol) return false;
  auto k = static_cast<long long>(nearest);
  return k % 2 != 0;
}

Phase Phase::operator-() const {
  if (exact_) return exact(-num_, den_);
  return numeric(-rad_);
}

Phase Phase::operator+(const Phase& other) const {
  if (exact_ && other.exact_) {
    std::int64_t l = std::lcm(den_, other.den_);
    return exact(num_ * (l / den_) + other.num_ * (l / other.den_), l);
  }
  return numeric(radians() + other.radians());
}

Phase Phase::operator-(const Phase& other) const { return *this + (-other); }

bool Phase::operator==(const Phase& other) const {
  if (exact_ != other.exact_) return false;
  if (exact_) return num_ == other.num_ && den_ == other.den_;
  return rad_ == other.rad_;
}

bool Phase::approx_equal(const Phase& other, double tol) const {
  double d = wrap_radians(radians() - other.radians());
  return std::min(d, kTwoPi - d) <= tol;
}

std::string Phase::to_string() const {
  if (exact_) return std::to_string(num_) + "/" + std::to_string(den_);
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", rad_);
  return buf;
}

Phase Phase::parse(const std::string& text) {
  auto slash = text.find('/');
  auto parse_int = [&](std::string_view s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
      throw std::invalid_argument("bad phase '" + text + "'");
    return v;
  };
  if (slash != std::string::npos) {
    std::string_view sv(text);
    return exact(parse_int(sv.substr(0, slash)), parse_int(sv.substr(slash + 1)));
  }
  if (text.find_first_of(".eE") == std::string::npos) {
    return exact(parse_int(text), 1);
  }
  std::size_t used = 0;
  double v = std::stod(text, &used);
  if (used != text.size())
    throw std::invalid_argument("bad phase '" + text + "'");
  return numeric(v);
}

}  // namespace zxkit
