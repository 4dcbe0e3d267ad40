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

#include "causelab/errors.h"

namespace causelab {

const char *error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidScenario:
            return "InvalidScenario";
        case ErrorKind::ScenarioMismatch:
            return "ScenarioMismatch";
        case ErrorKind::InvalidTable:
            return "InvalidTable";
        case ErrorKind::NotCanonicalizable:
            return "NotCanonicalizable";
        case ErrorKind::InvalidMixture:
            return "InvalidMixture";
        case ErrorKind::SearchSpaceTooLarge:
            return "SearchSpaceTooLarge";
        case ErrorKind::CapExceeded:
            return "CapExceeded";
        case ErrorKind::Infeasible:
            return "Infeasible";
        case ErrorKind::Unbounded:
            return "Unbounded";
        case ErrorKind::NonDiagonal:
            return "NonDiagonal";
        case ErrorKind::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorKind::Parse:
            return "Parse";
    }
    return "Unknown";
}

static bool is_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (c < '0' || c > '9') {
            return false;
        }
    }
    return true;
}

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!is_digits(num) || !is_digits(den)) {
        throw Error(ErrorKind::Parse, "malformed rational '" + std::string(text) + "'");
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) {
        throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
    }
    Rational r(n, d);
    r.canonicalize();
    return negative ? Rational(-r) : r;
}

std::string format_rational(const Rational &value) {
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational rational_from_double(double value, uint64_t max_denominator) {
    if (!std::isfinite(value)) {
        throw Error(ErrorKind::Parse, "non-finite value cannot be converted to a rational");
    }
    bool negative = value < 0;
    double x = std::fabs(value);
    // Convergents h/k of the continued fraction of x.
    mpz_class h_prev = 1, h = static_cast<unsigned long>(std::floor(x));
    mpz_class k_prev = 0, k = 1;
    double frac = x - std::floor(x);
    for (int iter = 0; iter < 64 && frac > 1e-15; iter++) {
        double inv = 1.0 / frac;
        double a = std::floor(inv);
        frac = inv - a;
        mpz_class ai = static_cast<unsigned long>(a);
        mpz_class k_next = ai * k + k_prev;
        if (k_next > max_denominator) {
            break;
        }
        mpz_class h_next = ai * h + h_prev;
        h_prev = h;
        h = h_next;
        k_prev = k;
        k = k_next;
    }
    Rational r(h, k);
    r.canonicalize();
    return negative ? Rational(-r) : r;
}

int64_t common_denominator(const std::vector<Rational> &values) {
    mpz_class l = 1;
    for (const auto &v : values) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
    }
    if (!l.fits_slong_p()) {
        throw Error(ErrorKind::SearchSpaceTooLarge, "payoff denominators exceed 64-bit range");
    }
    return l.get_si();
}

}  // namespace causelab
