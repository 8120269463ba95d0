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

#include "metabraid/backend.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace metabraid {

namespace {

unsigned digits10_for_bits(int bits) {
  return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}

}  // namespace

Backend Backend::big(int bits) {
  if (bits < 53) {
    throw std::invalid_argument("bigfloat precision must be >= 53 bits, got " +
                                std::to_string(bits));
  }
  return {BackendKind::bigfloat, bits};
}

Backend Backend::parse(const std::string& text) {
  if (text == "native64" || text == "f64" || text == "native") return native();
  if (text == "bigfloat") return reporting_default();
  const std::string prefix = "bigfloat:";
  if (text.rfind(prefix, 0) == 0) {
    int bits = 0;
    const char* first = text.data() + prefix.size();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, bits);
    if (ec != std::errc() || ptr != last) {
      throw std::invalid_argument("bad backend precision in '" + text + "'");
    }
    return big(bits);
  }
  throw std::invalid_argument("unknown backend '" + text +
                              "' (expected native64 or bigfloat[:bits])");
}

Backend Backend::reporting_default() {
  if (const char* env = std::getenv("METABRAID_PRECISION_BITS")) {
    return big(std::atoi(env));
  }
  return big(256);
}

std::string Backend::to_string() const {
  if (kind == BackendKind::native64) return "native64";
  return "bigfloat:" + std::to_string(precision_bits);
}

double Backend::zero_threshold() const { return std::pow(10.0, -0.2 * precision_bits); }

PrecisionScope::PrecisionScope(int bits) : saved_digits10_(BigFloat::default_precision()) {
  BigFloat::default_precision(digits10_for_bits(bits));
}

PrecisionScope::~PrecisionScope() { BigFloat::default_precision(saved_digits10_); }

template <>
BigFloat pi_value<BigFloat>() {
  BigFloat p;
  mpfr_const_pi(p.backend().data(), MPFR_RNDN);
  return p;
}

template <>
BigFloat epsilon_value<BigFloat>() {
  BigFloat one(1);
  BigFloat e;
  mpfr_set_ui_2exp(e.backend().data(), 1,
                   1 - static_cast<long>(mpfr_get_prec(one.backend().data())), MPFR_RNDN);
  return e;
}

std::string to_decimal(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string to_decimal(const BigFloat& x) {
  return x.str(static_cast<std::streamsize>(x.precision()), std::ios_base::scientific);
}

template <>
double from_decimal<double>(const std::string& text) {
  return std::stod(text);
}

template <>
BigFloat from_decimal<BigFloat>(const std::string& text) {
  return BigFloat(text);
}

}  // namespace metabraid
