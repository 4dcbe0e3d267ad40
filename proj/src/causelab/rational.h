// Copyright 2026 The causelab Authors
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

#ifndef CAUSELAB_RATIONAL_H
#define CAUSELAB_RATIONAL_H

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace causelab {

/// Arbitrary-precision rational, always kept in canonical (reduced) form.
using Rational = mpq_class;

/// Accepts "num/den", "num", and optional leading '-'. Throws Error(Parse).
Rational parse_rational(std::string_view text);

/// Always "num/den", including integers ("1/1").
std::string format_rational(const Rational &value);

inline bool is_zero(const Rational &value) {
    return sgn(value) == 0;
}

/// Closest rational with denominator at most `max_denominator` (continued fractions).
Rational rational_from_double(double value, uint64_t max_denominator = 1000000);

/// Least common multiple of the denominators; throws if it exceeds int64 range.
int64_t common_denominator(const std::vector<Rational> &values);

}  // namespace causelab

#endif
