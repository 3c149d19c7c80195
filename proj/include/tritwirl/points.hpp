// Copyright 2026 tritwirl contributors
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

#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>

namespace tritwirl {

/// Expectations (r+, r-, r1, r2, r3) of the R_k basis. The sixth value
/// r0 = 1 - r+ - r- is redundant and derived on demand.
struct RPoint {
    double r_plus = 0.0;
    double r_minus = 0.0;
    double r1 = 0.0;
    double r2 = 0.0;
    double r3 = 0.0;

    double r0() const { return 1.0 - r_plus - r_minus; }

    std::array<double, 5> as_array() const { return {r_plus, r_minus, r1, r2, r3}; }

    static RPoint from_array(const std::array<double, 5>& a) {
        return RPoint{a[0], a[1], a[2], a[3], a[4]};
    }
};

/// Coordinates on the conjugated-invariant side, expectations of the S_k basis.
struct SPoint {
    double s_plus = 0.0;
    double s_minus = 0.0;
    double s1 = 0.0;
    double s2 = 0.0;
    double s3 = 0.0;

    double s0() const { return 1.0 - s_plus - s_minus; }
};

inline double max_abs_diff(const RPoint& a, const RPoint& b) {
    double m = 0.0;
    auto x = a.as_array(), y = b.as_array();
    for (int i = 0; i < 5; ++i) m = std::max(m, std::abs(x[i] - y[i]));
    return m;
}

/// Small exact fraction, used for the named-point catalog.
struct Rat {
    long long num = 0;
    long long den = 1;

    Rat() = default;
    Rat(long long n) : num(n), den(1) {}
    Rat(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    friend Rat operator+(Rat a, Rat b) { return Rat(a.num * b.den + b.num * a.den, a.den * b.den); }
    friend Rat operator-(Rat a, Rat b) { return Rat(a.num * b.den - b.num * a.den, a.den * b.den); }
    friend Rat operator*(Rat a, Rat b) { return Rat(a.num * b.num, a.den * b.den); }
    friend Rat operator/(Rat a, Rat b) { return Rat(a.num * b.den, a.den * b.num); }
    friend bool operator==(Rat a, Rat b) { return a.num == b.num && a.den == b.den; }
};

/// Parses the text form "r+,r-,r1,r2,r3" (five comma separated decimals).
inline RPoint parse_rpoint(const std::string& text) {
    std::array<double, 5> v{};
    std::istringstream in(text);
    for (int i = 0; i < 5; ++i) {
        std::string field;
        if (!std::getline(in, field, ',')) throw std::invalid_argument("rpoint: expected 5 comma-separated values");
        try {
            size_t pos = 0;
            v[i] = std::stod(field, &pos);
            while (pos < field.size() && std::isspace(static_cast<unsigned char>(field[pos]))) ++pos;
            if (pos != field.size()) throw std::invalid_argument("");
        } catch (...) {
            throw std::invalid_argument("rpoint: bad number '" + field + "'");
        }
    }
    std::string rest;
    if (std::getline(in, rest, ',')) throw std::invalid_argument("rpoint: expected exactly 5 values");
    return RPoint::from_array(v);
}

inline std::string format_rpoint(const RPoint& r) {
    std::ostringstream out;
    out.precision(17);
    auto a = r.as_array();
    for (int i = 0; i < 5; ++i) {
        if (i) out << ',';
        out << a[i];
    }
    return out.str();
}

}  // namespace tritwirl
