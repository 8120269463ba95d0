// Copyright 2026 The metabraid Authors
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

#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <cstdint>
#include <string>
#include <type_traits>
#include <utility>

namespace metabraid {

/// Arbitrary-precision real. Precision is taken from the thread's current
/// default at construction time; see PrecisionScope.
using BigFloat = boost::multiprecision::mpfr_float;

enum class BackendKind { native64, bigfloat };

struct Backend {
  BackendKind kind = BackendKind::native64;
  int precision_bits = 53;

  static Backend native() { return {BackendKind::native64, 53}; }
  static Backend big(int bits = 256);

  /// Parses "native64", "f64", "bigfloat" or "bigfloat:<bits>".
  static Backend parse(const std::string& text);
  /// Default backend for reporting: bigfloat at METABRAID_PRECISION_BITS
  /// (256 when unset).
  static Backend reporting_default();

  std::string to_string() const;

  /// Values below this are reported as numerically zero: 10^-(0.2 * bits).
  double zero_threshold() const;
  bool numerically_zero(double value) const { return value < zero_threshold(); }

  bool operator==(const Backend&) const = default;
};

/// Sets the BigFloat default precision for the lifetime of the scope.
class PrecisionScope {
 public:
  explicit PrecisionScope(int bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_digits10_;
};

template <typename Real>
inline constexpr bool is_bigfloat_v = std::is_same_v<Real, BigFloat>;

template <typename Real>
Real pi_value();

template <>
inline double pi_value<double>() {
  return 3.141592653589793238462643383279502884;
}

template <>
BigFloat pi_value<BigFloat>();

/// Machine epsilon of the active precision for Real.
template <typename Real>
Real epsilon_value();

template <>
inline double epsilon_value<double>() {
  return 2.220446049250313e-16;
}

template <>
BigFloat epsilon_value<BigFloat>();

inline double to_double(double x) { return x; }
inline double to_double(const BigFloat& x) { return x.convert_to<double>(); }

/// Shortest decimal string that round-trips at the value's precision.
std::string to_decimal(double x);
std::string to_decimal(const BigFloat& x);

/// Parses a decimal string into Real at the current precision.
template <typename Real>
Real from_decimal(const std::string& text);

/// Invokes fn.template operator()<Real>() with Real matching the backend and
/// the BigFloat precision set from it.
template <typename Fn>
decltype(auto) with_backend(const Backend& backend, Fn&& fn) {
  if (backend.kind == BackendKind::native64) {
    return std::forward<Fn>(fn).template operator()<double>();
  }
  PrecisionScope scope(backend.precision_bits);
  return std::forward<Fn>(fn).template operator()<BigFloat>();
}

}  // namespace metabraid
