// Copyright 2026 The fadw Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Internal quad-precision helpers for the oracle.  Not installed.

#pragma once

#include <quadmath.h>

#include <string>

namespace fadw::oracle::detail {

using f128 = __float128;

inline f128 qabs(f128 v) { return fabsq(v); }
inline f128 qexp(f128 v) { return expq(v); }
inline f128 qsin(f128 v) { return sinq(v); }
inline f128 qcos(f128 v) { return cosq(v); }
inline f128 qsqrt(f128 v) { return sqrtq(v); }
inline f128 qatan2(f128 y, f128 x) { return atan2q(y, x); }
inline f128 qtan(f128 v) { return tanq(v); }
inline f128 qlog(f128 v) { return logq(v); }

inline const f128 kPi128 = strtoflt128(
    "3.14159265358979323846264338327950288419716939937510582097494459", nullptr);
inline const f128 kSqrtPi128 = strtoflt128(
    "1.77245385090551602729816748334114518279754945612238712821380779", nullptr);
inline const f128 kInvSqrtPi128 = strtoflt128(
    "0.564189583547756286948079451560772585844050629328998856844086", nullptr);
inline const f128 kEps128 = strtoflt128("1.93e-34", nullptr);

struct Cplx128 {
    f128 re{0};
    f128 im{0};

    Cplx128() = default;
    Cplx128(f128 r, f128 i) : re(r), im(i) {}

    friend Cplx128 operator+(const Cplx128& a, const Cplx128& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend Cplx128 operator-(const Cplx128& a, const Cplx128& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend Cplx128 operator*(const Cplx128& a, const Cplx128& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Cplx128 operator*(f128 s, const Cplx128& a) {
        return {s * a.re, s * a.im};
    }
    friend Cplx128 operator/(const Cplx128& a, const Cplx128& b) {
        const f128 d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d,
                (a.im * b.re - a.re * b.im) / d};
    }
    friend Cplx128 operator/(f128 s, const Cplx128& b) {
        const f128 d = b.re * b.re + b.im * b.im;
        return {s * b.re / d, -s * b.im / d};
    }
    Cplx128& operator+=(const Cplx128& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
};

inline f128 qabs(const Cplx128& v) { return hypotq(v.re, v.im); }

inline Cplx128 conj(const Cplx128& v) { return {v.re, -v.im}; }

// exp(re) * (cos(im) + i sin(im)); caller guards the magnitude.
inline Cplx128 qexp(const Cplx128& v) {
    const f128 mag = expq(v.re);
    return {mag * cosq(v.im), mag * sinq(v.im)};
}

inline std::string format_f128(f128 v) {
    char buf[64];
    quadmath_snprintf(buf, sizeof buf, "%.33Qe", v);
    return buf;
}

}  // namespace fadw::oracle::detail
