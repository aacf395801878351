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

// Internal plumbing shared between the oracle translation units.

#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "f128_math.hpp"
#include "fadw/oracle.hpp"

namespace fadw::oracle::detail {

inline f128 pow10_f128(int e) {
    f128 r = 1;
    const f128 base = e < 0 ? f128(1) / f128(10) : f128(10);
    int n = e < 0 ? -e : e;
    while (n--) r *= base;
    return r;
}

struct AdaptiveOutcome {
    Cplx128 value;
    f128 value_l1 = 0;  // sum of |panel value|, for rounding models
    f128 err_abs = 0;
    int segments = 0;
    bool converged = false;
};

/// Adaptive Gauss-Legendre (16/32 pair) over the given breakpoints, refining
/// the worst segment until the absolute error estimate drops below the
/// target (or hits the quad-precision rounding floor); `converged` reflects
/// the weaker required bound.
AdaptiveOutcome integrate_adaptive(const std::function<Cplx128(f128)>& f,
                                   const std::vector<f128>& breakpoints,
                                   f128 abs_tol_target, f128 abs_tol_required,
                                   int max_segments);

/// Maclaurin series for w(z); radius <= 12 at 130 digits, <= 22 at 300
/// digits (chosen automatically).  Throws OracleError beyond the wide
/// radius.  Same contract as oracle_series otherwise.
OracleValue series_w_any(std::complex<double> z, int digits);

/// Widest radius series_w_any accepts.
inline constexpr double kSeriesWideRadius = 22.0;

/// Dawson integral building blocks for the real axis: 130-digit series for
/// x <= 12, optimally truncated asymptotic sum above (error ~ exp(-x^2)).
OracleValue daw_real(double x);

/// Maclaurin series for erf and the Fresnel integral at 130 digits
/// (implemented in series.cpp; practical radius |z| <= 6 and 5).
OracleValue erf_series(std::complex<double> z, int digits);
OracleValue fresnel_series(std::complex<double> z, int digits);

/// Quadrature with a quad-precision argument (upper half-plane).
OracleValue quad_w_xy(f128 x, f128 y, int digits);

/// Full-plane w with a quad-precision argument, quadrature-backed;
/// reflection/parity applied without rounding the argument to double.
OracleValue w_f128(Cplx128 z, int digits);

}  // namespace fadw::oracle::detail
