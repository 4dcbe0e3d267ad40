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


#include "causelab/rational.h"

#include <cmath>

#include "test_util.h"

using namespace causelab;

TEST(Rational, ParsesAndCanonicalizes) {
    EXPECT_EQ(parse_rational("2/4"), Rational(1, 2));
    EXPECT_EQ(parse_rational("-3/9"), Rational(-1, 3));
    EXPECT_EQ(parse_rational("7"), Rational(7));
    EXPECT_EQ(parse_rational("+0/5"), Rational(0));
}

TEST(Rational, RejectsMalformedText) {
    for (const char *bad : {"", "1/", "/2", "a/b", "1/0", "1.5", "--1", "1/2/3", " 1"}) {
        EXPECT_ERROR_KIND(parse_rational(bad), ErrorKind::Parse);
    }
}

TEST(Rational, FormatAlwaysHasDenominator) {
    EXPECT_EQ(format_rational(Rational(1)), "1/1");
    EXPECT_EQ(format_rational(Rational(0)), "0/1");
    EXPECT_EQ(format_rational(parse_rational("-6/8")), "-3/4");
    EXPECT_EQ(parse_rational(format_rational(Rational(123456789, 1000))), Rational(123456789, 1000));
}

TEST(Rational, FromDoubleRecoversSmallFractions) {
    EXPECT_EQ(rational_from_double(0.25), Rational(1, 4));
    EXPECT_EQ(rational_from_double(1.0 / 3.0), Rational(1, 3));
    EXPECT_EQ(rational_from_double(-5.0 / 7.0), Rational(-5, 7));
    EXPECT_EQ(rational_from_double(3.0), Rational(3));
    Rational r = rational_from_double(std::sqrt(0.5));
    EXPECT_LE(r.get_den(), 1000000);
    EXPECT_NEAR(r.get_d(), std::sqrt(0.5), 1e-11);
    EXPECT_ERROR_KIND(rational_from_double(std::nan("")), ErrorKind::Parse);
}

TEST(Rational, CommonDenominator) {
    EXPECT_EQ(common_denominator({Rational(1, 4), Rational(1, 6), Rational(2)}), 12);
    EXPECT_EQ(common_denominator({}), 1);
}
