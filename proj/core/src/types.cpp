// Copyright 2026 The vgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vgame/types.hpp"

#include <charconv>

namespace vgame {

std::string to_string(const Rational& value) {
  if (value.denominator() == 1) return std::to_string(value.numerator());
  return std::to_string(value.numerator()) + "/" +
         std::to_string(value.denominator());
}

namespace {

std::int64_t parse_int(std::string_view text, const std::string& whole) {
  std::int64_t out = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw InputError("malformed rational '" + whole + "'");
  }
  return out;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text, text));
  std::string_view view(text);
  auto den = parse_int(view.substr(slash + 1), text);
  if (den == 0) throw InputError("zero denominator in '" + text + "'");
  return Rational(parse_int(view.substr(0, slash), text), den);
}

std::ostream& operator<<(std::ostream& os, Distance d) {
  if (d.is_finite()) return os << d.value();
  return os << "inf";
}

std::string to_string(const Cost& cost) {
  return cost.is_finite() ? std::to_string(cost.value()) : "inf";
}

std::string to_string(const ExtendedRational& value) {
  return value.is_finite() ? to_string(value.value()) : "inf";
}

}  // namespace vgame
