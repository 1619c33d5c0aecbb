// Copyright 2026 The zest Authors
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

#include "zest/rational.hpp"

namespace zest {

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw ValueError("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(Integer(s));
    }
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den.is_zero()) throw ValueError("rational with zero denominator: " + s);
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw;
  } catch (const std::exception&) {
    throw ValueError("malformed rational literal: " + s);
  }
}

std::string rational_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace zest
