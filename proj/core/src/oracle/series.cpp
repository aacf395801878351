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

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <sstream>

#include "fadw/oracle.hpp"
#include "oracle_internal.hpp"

namespace fadw::oracle {

namespace {

namespace mp = boost::multiprecision;
using B130 = mp::number<mp::cpp_bin_float<130>, mp::et_off>;
using B300 = mp::number<mp::cpp_bin_float<300>, mp::et_off>;

template <class Real>
struct CplxT {
    Real re{0};
    Real im{0};

    friend CplxT operator+(const CplxT& a, const CplxT& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend CplxT operator*(const CplxT& a, const CplxT& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    CplxT& operator+=(const CplxT& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    CplxT& operator*=(const Real& s) {
        re *= s;
        im *= s;
        return *this;
    }
    CplxT& operator*=(const CplxT& o) {
        *this = *this * o;
        return *this;
    }
    Real norm1() const { return abs(re) + abs(im); }  // cheap magnitude proxy
};

detail::f128 to_f128(const B300& v) {
    std::ostringstream os;
    os.precision(40);
    os << std::scientific << v;
    return strtoflt128(os.str().c_str(), nullptr);
}

template <class Real>
detail::f128 to_f128_any(const Real& v) {
    return to_f128(static_cast<B300>(v));
}

/// Plain Maclaurin summation of w(z) = sum_k (iz)^k / Gamma(k/2 + 1),
/// two interleaved term recurrences (even part steps by 1/m!, odd by
/// Gamma(m + 3/2)).  Terms grow to ~exp(|z|^2) before decaying, so the
/// working precision must absorb that hump; callers pick Real accordingly.
template <class Real>
OracleValue series_impl(double x, double y, int digits) {
    const Real two_over_sqrt_pi =
        2 / boost::math::constants::root_pi<Real>();
    const CplxT<Real> z{Real(x), Real(y)};
    const CplxT<Real> minus_z_sq =
        CplxT<Real>{-(z.re * z.re - z.im * z.im), -2 * z.re * z.im};

    CplxT<Real> even{Real(1), Real(0)};                    // k = 0
    CplxT<Real> odd{-two_over_sqrt_pi * z.im,
                    two_over_sqrt_pi * z.re};              // k = 1: 2iz/sqrt(pi)
    CplxT<Real> sum = even + odd;
    Real max_mag = sum.norm1();

    Real thresh = 1;
    for (int i = 0; i < digits + 5; ++i) thresh /= 10;

    const double r_sq = x * x + y * y;
    const long hump = static_cast<long>(r_sq) + 1;
    const long budget = 3 * hump + 400;
    long m = 1;
    for (; m <= budget; ++m) {
        even *= minus_z_sq;
        even *= 1 / Real(m);
        odd *= minus_z_sq;
        odd *= 1 / (Real(m) + Real(0.5));
        sum += even;
        sum += odd;
        const Real mag = even.norm1() + odd.norm1();
        if (mag > max_mag) max_mag = mag;
        if (m >= hump && mag < thresh) break;
    }
    if (m > budget)
        throw OracleError("oracle_series: term budget exhausted");

    const Real norm = sqrt(sum.re * sum.re + sum.im * sum.im);
    const Real eps = std::numeric_limits<Real>::epsilon();
    const Real est_abs =
        even.norm1() + odd.norm1() + eps * max_mag * Real(8 * m);
    const Real est_rel = est_abs / (norm > 0 ? norm : Real(1));

    OracleValue out;
    out.re = to_f128_any(sum.re);
    out.im = to_f128_any(sum.im);
    out.est_error = std::max(static_cast<double>(est_rel), 1e-33);
    return out;
}

}  // namespace

namespace detail {

OracleValue series_w_any(std::complex<double> z, int digits) {
    const double r = std::hypot(z.real(), z.imag());
    if (!(r <= kSeriesWideRadius))
        throw OracleError("series_w_any: |z| beyond the practical radius");
    if (r <= 12.0) return series_impl<B130>(z.real(), z.imag(), digits);
    return series_impl<B300>(z.real(), z.imag(), digits);
}

OracleValue daw_real(double x) {
    const double ax = std::abs(x);
    if (x == 0.0) return {0, 0, 1e-33};
    if (ax <= 12.0) {
        // daw(x) = exp(-x^2) * sum x^(2k+1) / (k! (2k+1)); the sum peaks at
        // ~exp(x^2)/(2x), absorbed by the 130-digit working precision.
        const B130 bx = x;
        const B130 x_sq = bx * bx;
        B130 power = bx;  // x^(2k+1)/k!
        B130 sum = bx;
        B130 max_mag = abs(bx);
        B130 thresh = 1;
        for (int i = 0; i < 40; ++i) thresh /= 10;
        long k = 1;
        for (; k < 3 * static_cast<long>(ax * ax) + 200; ++k) {
            power *= x_sq;
            power /= k;
            const B130 term = power / (2 * k + 1);
            sum += term;
            if (abs(term) > max_mag) max_mag = abs(term);
            if (k >= static_cast<long>(ax * ax) + 1 && abs(term) < thresh * abs(sum))
                break;
        }
        const B130 value = exp(-x_sq) * sum;
        OracleValue out;
        out.re = to_f128(static_cast<B300>(value));
        out.im = 0;
        const B130 eps = std::numeric_limits<B130>::epsilon();
        out.est_error = std::max(
            static_cast<double>(eps * max_mag / abs(sum) * B130(8 * k)), 1e-33);
        return out;
    }

    // Asymptotic sum daw(x) ~ (1/2x) sum (2k-1)!! / (2x^2)^k, truncated at
    // the smallest term; the truncation error is ~exp(-x^2), negligible at
    // 33 digits once x > 12.
    const f128 fx = x;
    const f128 inv_two_x_sq = 1 / (2 * fx * fx);
    f128 term = 1 / (2 * fx);
    f128 sum = term;
    f128 last = qabs(term);
    for (int k = 1; k < 400; ++k) {
        term *= (2 * k - 1) * inv_two_x_sq;
        if (qabs(term) >= last) break;  // asymptotic turn-around
        sum += term;
        last = qabs(term);
        if (last < pow10_f128(-40)) break;
    }
    OracleValue out;
    out.re = sum;
    out.im = 0;
    out.est_error = std::max(static_cast<double>(last / qabs(sum)), 1e-32);
    return out;
}

OracleValue erf_series(std::complex<double> z, int digits) {
    const double r = std::hypot(z.real(), z.imag());
    if (!(r <= 6.5))
        throw OracleError("erf_series: |z| beyond the practical radius");
    const B130 two_over_sqrt_pi = 2 / boost::math::constants::root_pi<B130>();
    const CplxT<B130> bz{B130(z.real()), B130(z.imag())};
    const CplxT<B130> minus_z_sq{-(bz.re * bz.re - bz.im * bz.im),
                                 -2 * bz.re * bz.im};
    CplxT<B130> power = bz;  // z^(2k+1)/k!
    CplxT<B130> sum = bz;
    B130 max_mag = power.norm1();
    B130 thresh = 1;
    for (int i = 0; i < digits + 5; ++i) thresh /= 10;
    long k = 1;
    const long budget = 3 * static_cast<long>(r * r) + 200;
    for (; k <= budget; ++k) {
        power = power * minus_z_sq;
        power *= 1 / B130(k);
        CplxT<B130> term = power;
        term *= 1 / B130(2 * k + 1);
        sum += term;
        const B130 mag = term.norm1();
        if (mag > max_mag) max_mag = mag;
        if (k >= static_cast<long>(r * r) + 1 && mag < thresh) break;
    }
    if (k > budget) throw OracleError("erf_series: term budget exhausted");
    sum *= two_over_sqrt_pi;

    const B130 norm = sqrt(sum.re * sum.re + sum.im * sum.im);
    const B130 eps = std::numeric_limits<B130>::epsilon();
    const B130 est =
        (power.norm1() + eps * max_mag * B130(8 * k)) / (norm > 0 ? norm : B130(1));
    OracleValue out;
    out.re = to_f128(static_cast<B300>(sum.re));
    out.im = to_f128(static_cast<B300>(sum.im));
    out.est_error = std::max(static_cast<double>(est), 1e-33);
    return out;
}

OracleValue fresnel_series(std::complex<double> z, int digits) {
    const double r = std::hypot(z.real(), z.imag());
    if (!(r <= 5.5))
        throw OracleError("fresnel_series: |z| beyond the practical radius");
    const B130 half_pi = boost::math::constants::half_pi<B130>();
    const CplxT<B130> bz{B130(z.real()), B130(z.imag())};
    const CplxT<B130> z_sq{bz.re * bz.re - bz.im * bz.im, 2 * bz.re * bz.im};
    // i*(pi/2)*z^2 drives the term recurrence.
    const CplxT<B130> step{-half_pi * z_sq.im, half_pi * z_sq.re};

    CplxT<B130> power = bz;  // z^(2k+1) (i pi/2)^k / k!
    CplxT<B130> sum = bz;
    B130 max_mag = power.norm1();
    B130 thresh = 1;
    for (int i = 0; i < digits + 5; ++i) thresh /= 10;
    const double hump = 0.5 * M_PI * r * r;
    long k = 1;
    const long budget = 3 * static_cast<long>(hump) + 200;
    for (; k <= budget; ++k) {
        power = power * step;
        power *= 1 / B130(k);
        CplxT<B130> term = power;
        term *= 1 / B130(2 * k + 1);
        sum += term;
        const B130 mag = term.norm1();
        if (mag > max_mag) max_mag = mag;
        if (k >= static_cast<long>(hump) + 1 && mag < thresh) break;
    }
    if (k > budget) throw OracleError("fresnel_series: term budget exhausted");

    const B130 norm = sqrt(sum.re * sum.re + sum.im * sum.im);
    const B130 eps = std::numeric_limits<B130>::epsilon();
    const B130 est =
        (power.norm1() + eps * max_mag * B130(8 * k)) / (norm > 0 ? norm : B130(1));
    OracleValue out;
    out.re = to_f128(static_cast<B300>(sum.re));
    out.im = to_f128(static_cast<B300>(sum.im));
    out.est_error = std::max(static_cast<double>(est), 1e-33);
    return out;
}

}  // namespace detail

OracleValue oracle_series(std::complex<double> z, int digits) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw OracleError("oracle_series: non-finite argument");
    const double r = std::hypot(z.real(), z.imag());
    if (!(r <= 12.0))
        throw OracleError(
            "oracle_series: |z| beyond the practical series radius (12)");
    return series_impl<B130>(z.real(), z.imag(), std::clamp(digits, 10, 33));
}

}  // namespace fadw::oracle
